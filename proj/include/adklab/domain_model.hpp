#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adklab/generators.hpp"
#include "adklab/point_set.hpp"

namespace adklab {

struct Violation {
  std::string code;             // e.g. "SemicontinuityViolation"
  std::optional<Ordinal> point;
  std::string message;
};

// Chain positivity condition at a point, as reported to callers: either all
// cuts, or exactly the cuts t <= bound.
struct ChainCondition {
  std::size_t chain_index;
  bool all_t = false;
  std::uint64_t bound = 0;
};

// The structured family of generators positive at a point.
struct PositiveFamily {
  std::vector<std::size_t> singles;                       // generator indices
  std::vector<std::pair<std::size_t, Ordinal>> members;   // (family idx, anchor)
  std::vector<ChainCondition> chains;
  bool empty() const { return singles.empty() && members.empty() && chains.empty(); }
};

// A maximal set of points with identical positive-generator structure; the
// criticality invariants are constant on each class.
struct ProfileClass {
  PointSet points;
  Ordinal representative;
  std::optional<Ordinal> second_representative;
  std::string signature;
};

// An almost Dedekind domain presented by its valuation data: the spectrum
// plus a generator family whose {add, min}-closure stands in for the monoid
// of finitely generated proper ideal functions.
class DomainModel {
 public:
  DomainModel(std::string name, SpectrumSpace space, std::vector<GeneratorSpec> generators);

  const std::string& name() const { return name_; }
  const SpectrumSpace& space() const { return space_; }
  const std::vector<GeneratorSpec>& generators() const { return generators_; }

  // Nonzero Jacobson radical <=> compact spectrum.
  bool jacobson_nonzero() const { return space_.is_compact(); }

  std::vector<Violation> validate() const;
  void require_valid() const;

  PositiveFamily generators_positive_at(const Ordinal& p) const;

  std::vector<ProfileClass> profile_classes() const;

  // Union of the supports of all generator instances.
  PointSet covered_points() const;

 private:
  std::string name_;
  SpectrumSpace space_;
  std::vector<GeneratorSpec> generators_;
};

}  // namespace adklab
