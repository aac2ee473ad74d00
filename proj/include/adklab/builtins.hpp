#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adklab/domain_model.hpp"

namespace adklab {

// Catalog of models with known invariants:
//   example-R        [0, w], R >= 2: indicator family plus the tail chain
//                    with constant exponent R (value 1 at w). Crit^n = {w}
//                    for n < R, empty from R on.
//   example-growing  [0, w]: tail chain with value k at the k-th point;
//                    the head of the chain is unbounded, Crit^omega = {w}.
//   ladder-K         [0, w^K]: indicator family, one block family per rank
//                    1..K-1 and a top chain; the crit chain walks the
//                    Cantor-Bendixson derivatives.
//   dedekind-finite-N  N isolated points with their indicators; nothing is
//                    critical.
std::vector<std::string> builtin_names();
std::optional<DomainModel> make_builtin(const std::string& name);

// The canonical finite selection of generator instances used for rank
// evidence: the first (count-1) indicator members and the chain head.
std::vector<IdealFunction> canonical_generators(const DomainModel& model,
                                                std::size_t count);

}  // namespace adklab
