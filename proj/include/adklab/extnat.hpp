#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace adklab {

// Natural number or infinity. Infinity is a real symbol here, never a
// sentinel value smuggled through arithmetic.
class ExtNat {
 public:
  constexpr ExtNat() : finite_(true), value_(0) {}
  constexpr ExtNat(std::uint64_t v) : finite_(true), value_(v) {}  // NOLINT
  static constexpr ExtNat infinity() {
    ExtNat e;
    e.finite_ = false;
    return e;
  }

  constexpr bool is_infinite() const { return !finite_; }
  constexpr bool is_finite() const { return finite_; }
  constexpr std::uint64_t value() const { return value_; }  // finite only

  friend constexpr bool operator==(const ExtNat& a, const ExtNat& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
    if (a.finite_ != b.finite_)
      return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (!a.finite_) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }
  friend constexpr ExtNat operator+(const ExtNat& a, const ExtNat& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ExtNat(a.value_ + b.value_);
  }

  std::string to_string() const {
    return finite_ ? std::to_string(value_) : std::string("infinity");
  }

 private:
  bool finite_;
  std::uint64_t value_ = 0;
};

inline ExtNat min(const ExtNat& a, const ExtNat& b) { return a < b ? a : b; }
inline ExtNat max(const ExtNat& a, const ExtNat& b) { return a < b ? b : a; }

}  // namespace adklab
