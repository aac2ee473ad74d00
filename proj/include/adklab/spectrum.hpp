#pragma once

#include <cstdint>
#include <string>

#include "adklab/errors.hpp"
#include "adklab/ordinal.hpp"

namespace adklab {

// The maximal spectrum carrying the constructible topology. Either a compact
// ordinal interval [0, top] with the order topology, or a countable discrete
// space (the naturals), which is the non-compact / zero-Jacobson case.
class SpectrumSpace {
 public:
  enum class Kind { OrdinalInterval, CountableDiscrete };

  static SpectrumSpace interval(Ordinal top) {
    SpectrumSpace s;
    s.kind_ = Kind::OrdinalInterval;
    s.top_ = std::move(top);
    return s;
  }
  static SpectrumSpace discrete() {
    SpectrumSpace s;
    s.kind_ = Kind::CountableDiscrete;
    s.top_ = Ordinal::omega();
    return s;
  }

  Kind kind() const { return kind_; }
  bool is_discrete() const { return kind_ == Kind::CountableDiscrete; }
  bool is_compact() const { return kind_ == Kind::OrdinalInterval; }

  // Interval bound. For the discrete space this is w used as an exclusive
  // upper bound for interval bookkeeping; w itself is not a point.
  const Ordinal& bound() const { return top_; }

  bool contains(const Ordinal& p) const {
    if (kind_ == Kind::CountableDiscrete) return p.is_finite();
    return p <= top_;
  }
  void require_point(const Ordinal& p) const {
    if (!contains(p))
      fail(ErrorCode::PointOutsideSpace, "point " + p.to_string() + " outside space " + to_string());
  }

  // A point is a limit point of the space iff it is a limit ordinal (every
  // point of the discrete space is isolated).
  bool is_limit_point(const Ordinal& p) const {
    return kind_ == Kind::OrdinalInterval && p.is_limit();
  }

  // Largest Cantor-Bendixson rank realized by any point.
  std::uint32_t max_rank() const {
    return kind_ == Kind::CountableDiscrete ? 0 : top_.leading_exp();
  }

  // floor(bound / w^j): exclusive-ish upper bound for rank-j quotients.
  Ordinal quotient_bound(std::uint32_t j) const {
    return top_.div_pow_omega(j).quotient;
  }

  bool operator==(const SpectrumSpace& o) const {
    return kind_ == o.kind_ && (kind_ == Kind::CountableDiscrete || top_ == o.top_);
  }

  std::string to_string() const {
    if (kind_ == Kind::CountableDiscrete) return "discrete";
    return "[0," + top_.to_string() + "]";
  }

 private:
  Kind kind_ = Kind::OrdinalInterval;
  Ordinal top_;
};

inline void require_same_space(const SpectrumSpace& a, const SpectrumSpace& b) {
  if (!(a == b))
    fail(ErrorCode::SpaceMismatch,
         "space mismatch: " + a.to_string() + " vs " + b.to_string());
}

}  // namespace adklab
