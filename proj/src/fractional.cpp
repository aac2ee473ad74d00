#include "adklab/fractional.hpp"

namespace adklab {

FractionalFunction::FractionalFunction(IdealFunction num, IdealFunction den)
    : num_(std::move(num)), den_(std::move(den)) {
  require_same_space(num_.space(), den_.space());
  normalize();
}

void FractionalFunction::normalize() {
  IdealFunction common = IdealFunction::min_fn(num_, den_);
  if (!common.is_zero()) {
    num_ = IdealFunction::sub_exact(num_, common);
    den_ = IdealFunction::sub_exact(den_, common);
  }
}

FractionalFunction FractionalFunction::add(const FractionalFunction& a,
                                           const FractionalFunction& b) {
  return FractionalFunction(IdealFunction::add(a.num_, b.num_),
                            IdealFunction::add(a.den_, b.den_));
}

// max(x1-y1, x2-y2) = max(x1+y2, x2+y1) - (y1+y2), all inside the naturals.
FractionalFunction FractionalFunction::max_fn(const FractionalFunction& a,
                                              const FractionalFunction& b) {
  IdealFunction lhs = IdealFunction::max_fn(IdealFunction::add(a.num_, b.den_),
                                            IdealFunction::add(b.num_, a.den_));
  return FractionalFunction(lhs, IdealFunction::add(a.den_, b.den_));
}

FractionalFunction FractionalFunction::min_fn(const FractionalFunction& a,
                                              const FractionalFunction& b) {
  return max_fn(a.negate(), b.negate()).negate();
}

FractionalFunction FractionalFunction::scale(std::int64_t n) const {
  if (n >= 0)
    return FractionalFunction(num_.scale(static_cast<std::uint64_t>(n)),
                              den_.scale(static_cast<std::uint64_t>(n)));
  return FractionalFunction(den_.scale(static_cast<std::uint64_t>(-n)),
                            num_.scale(static_cast<std::uint64_t>(-n)));
}

}  // namespace adklab
