#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adklab/criticality.hpp"
#include "adklab/domain_model.hpp"
#include "adklab/ideal_function.hpp"

namespace adklab {

struct FactorCertificate {
  ExtNat sup;
  PointSet support;
};

struct Factorization {
  enum class Mode { Radical, Bounded };
  Mode mode = Mode::Radical;
  std::optional<std::uint64_t> n;  // bound for Mode::Bounded
  std::vector<IdealFunction> factors;
  std::vector<FactorCertificate> certificates;
};

// Continuous functions factor into the indicators of their level sets;
// NotContinuous carries the offending level and a boundary witness.
Factorization radical_factorization(const IdealFunction& f);

// The compactness-driven loop: while sup f > n, assemble an n-bounded L with
// the support of f from certificate elements of the uncritical points, split
// it off, repeat. Preconditions: f proper, V(f) disjoint from Crit^n
// (CriticalObstruction otherwise).
Factorization n_bounded_factorization(const DomainModel& model, const IdealFunction& f,
                                      std::uint64_t n);

struct BoundWitness {
  std::uint64_t bound;            // B with sup f <= B
  IdealFunction comparison;       // bounded L with support f = support L
  std::uint64_t power;            // t with f <= t*L pointwise
};
// Boundedness via a finite subcover: V(f) must avoid Crit^omega
// (OmegaCriticalObstruction otherwise).
BoundWitness bounded_witness(const DomainModel& model, const IdealFunction& f);

// X_n = {p in supp f : f(p) <= n}, computed through the (n+1)*rad(f) - f
// construction; always closed for lower semicontinuous f.
PointSet semicont_construction(const IdealFunction& f, std::uint64_t n);

}  // namespace adklab
