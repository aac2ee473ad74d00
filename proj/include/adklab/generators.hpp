#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "adklab/ideal_function.hpp"

namespace adklab {

// Breakpoint of a chain template: a fixed ordinal, or w^scale * (a*t + b)
// moving with the cut parameter t.
struct TBreak {
  bool moving = false;
  Ordinal fixed;
  std::uint32_t scale_exp = 0;
  std::uint64_t t_coeff = 0;
  std::uint64_t offset = 0;

  static TBreak at(Ordinal o) { return {false, std::move(o), 0, 0, 0}; }
  static TBreak affine(std::uint32_t scale, std::uint64_t a, std::uint64_t b) {
    return {true, Ordinal(), scale, a, b};
  }
  Ordinal value(std::uint64_t t) const {
    if (!moving) return fixed;
    return Ordinal::omega_pow(scale_exp, 1) * Ordinal(t_coeff * t + offset);
  }
};

// Monotone descending family of fg ideal functions f_t indexed by a natural
// cut parameter: segment breakpoints are affine in t, rules and limit-point
// overrides are fixed. Instances must satisfy f_{t+1} <= f_t pointwise.
class TailChain {
 public:
  struct Segment {
    TBreak upper;
    Rule rule;
  };

  TailChain(SpectrumSpace space, std::vector<Segment> segments,
            std::map<Ordinal, std::uint64_t> limit_overrides);

  const SpectrumSpace& space() const { return space_; }
  const std::vector<Segment>& segments() const { return segments_; }
  const std::map<Ordinal, std::uint64_t>& limit_overrides() const {
    return limit_overrides_;
  }

  IdealFunction instantiate(std::uint64_t t) const;

  // Pointwise limit of f_t as t grows; generally not lower semicontinuous,
  // used only for structural boundaries and all-t positivity regions.
  IdealFunction limit_function() const;

  // Past this t every affine comparison in the template has settled, so any
  // monotone quantity derived from f_t is constant beyond it.
  std::uint64_t crossing_bound() const;
  // Same, adjusted for evaluation at a specific point.
  std::uint64_t crossing_bound_at(const Ordinal& p) const;

  struct Positivity {
    enum class Kind { Never, AllT, Bounded } kind = Kind::Never;
    std::uint64_t bound = 0;  // largest t with f_t(p) >= 1 when Bounded
  };
  Positivity positivity_at(const Ordinal& p) const;

  // Exact check of the descending-chain property; returns a witness
  // (t, point) on failure.
  std::optional<std::pair<std::uint64_t, Ordinal>> monotonicity_violation() const;

 private:
  SpectrumSpace space_;
  std::vector<Segment> segments_;
  std::map<Ordinal, std::uint64_t> limit_overrides_;
};

// One generator per rank-j point q of a region: constant `plateau` on the
// approach block (q - w^j, q), value `peak` at q, zero elsewhere. At rank 0
// this is the plain indicator family of the isolated points.
class PointFamily {
 public:
  PointFamily(SpectrumSpace space, std::uint32_t rank, std::uint64_t plateau,
              std::uint64_t peak, std::optional<PointSet> region = std::nullopt);

  const SpectrumSpace& space() const { return space_; }
  std::uint32_t rank() const { return rank_; }
  std::uint64_t plateau() const { return plateau_; }
  std::uint64_t peak() const { return peak_; }
  const std::optional<PointSet>& region() const { return region_; }

  // The rank-j anchor point whose block contains p, when there is one.
  std::optional<Ordinal> anchor_for(const Ordinal& p) const;
  IdealFunction member_at(const Ordinal& anchor) const;

  // Points covered by some member (union of blocks over the region).
  PointSet covered() const;

 private:
  SpectrumSpace space_;
  std::uint32_t rank_;
  std::uint64_t plateau_;
  std::uint64_t peak_;
  std::optional<PointSet> region_;
};

using GeneratorSpec = std::variant<IdealFunction, TailChain, PointFamily>;

const char* generator_kind(const GeneratorSpec& g);

}  // namespace adklab
