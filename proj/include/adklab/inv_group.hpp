#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adklab/criticality.hpp"
#include "adklab/domain_model.hpp"
#include "adklab/fractional.hpp"

namespace adklab {

// Invertible fractional ideal function with the combination it came from.
struct GroupElement {
  FractionalFunction value;
  std::string expression;
};

struct KernelCertificate {
  bool in_kernel = false;
  std::optional<Ordinal> blocking_point;  // support point inside the crit set
  // When in the kernel: explicit bounds for numerator and denominator.
  std::optional<std::uint64_t> num_bound;
  std::optional<std::uint64_t> den_bound;
};

// Membership in ker(Inv(D) -> Inv(T_1)) at a finite level n or at omega
// (level = nullopt): support disjoint from the critical set, certified by
// boundedness of both halves.
KernelCertificate kernel_membership(const DomainModel& model, const GroupElement& g,
                                    std::optional<std::uint64_t> level);

struct ComponentLayer {
  Ordinal alpha;
  PointSet window;                       // Crit_alpha minus Crit_{alpha+1}
  bool zero = true;                      // element vanishes on the window
};

struct ComponentProfile {
  std::vector<ComponentLayer> layers;
  // Pointwise reconstruction: the layer windows partition the spectrum, so
  // the element is recovered by evaluation through its unique layer.
  std::int64_t eval_through_layers(const GroupElement& g, const Ordinal& p) const;
};

ComponentProfile component_profile(const DomainModel& model, const GroupElement& g);

struct RankResult {
  enum class Verdict { Independent, Dependent, WindowTooSmall };
  Verdict verdict = Verdict::Independent;
  std::uint64_t rank = 0;
  // For Dependent: an exact vanishing integer combination.
  std::vector<std::int64_t> kernel_combination;
  // For WindowTooSmall: a combination vanishing on the window but not
  // globally; widening the window separates it.
  std::optional<Ordinal> suggested_extension;
};

// Exact integer rank of the element-value matrix over a finite window of
// points (rows: window points, columns: elements).
RankResult zrank(const std::vector<GroupElement>& elements,
                 const std::vector<Ordinal>& window);

// Deterministic finite sample of a spectrum: a prefix of the isolated part,
// every small limit point, and a ladder of approachers under each of them.
std::vector<Ordinal> truncation_points(const SpectrumSpace& space, std::size_t depth);

}  // namespace adklab
