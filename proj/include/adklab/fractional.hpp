#pragma once

#include <cstdint>
#include <string>

#include "adklab/ideal_function.hpp"

namespace adklab {

// Formal difference of two fg ideal functions, the function of a fractional
// ideal J L^{-1}. Kept in the normal form with min(num, den) == 0 pointwise.
class FractionalFunction {
 public:
  explicit FractionalFunction(const SpectrumSpace& s)
      : num_(IdealFunction::zero(s)), den_(IdealFunction::zero(s)) {}
  FractionalFunction(IdealFunction num, IdealFunction den);

  static FractionalFunction from_integral(const IdealFunction& f) {
    return FractionalFunction(f, IdealFunction::zero(f.space()));
  }

  const SpectrumSpace& space() const { return num_.space(); }
  const IdealFunction& num() const { return num_; }
  const IdealFunction& den() const { return den_; }

  std::int64_t eval(const Ordinal& p) const {
    return static_cast<std::int64_t>(num_.eval(p)) -
           static_cast<std::int64_t>(den_.eval(p));
  }

  bool is_zero() const { return num_.is_zero() && den_.is_zero(); }
  // Union of the positive and negative supports.
  PointSet support() const { return num_.support().set_union(den_.support()); }

  // l-group operations, all pointwise on the difference.
  static FractionalFunction add(const FractionalFunction& a, const FractionalFunction& b);
  FractionalFunction negate() const { return FractionalFunction(den_, num_); }
  static FractionalFunction sub(const FractionalFunction& a, const FractionalFunction& b) {
    return add(a, b.negate());
  }
  static FractionalFunction min_fn(const FractionalFunction& a, const FractionalFunction& b);
  static FractionalFunction max_fn(const FractionalFunction& a, const FractionalFunction& b);
  FractionalFunction scale(std::int64_t n) const;

  bool operator==(const FractionalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  std::string to_string() const {
    return num_.to_string() + " - " + den_.to_string();
  }

 private:
  void normalize();
  IdealFunction num_;
  IdealFunction den_;
};

}  // namespace adklab
