#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace adklab {

// Ordinals below w^w in Cantor normal form: w^{e1}*c1 + ... + w^{ek}*ck with
// e1 > e2 > ... >= 0 and all ci >= 1. The empty sum is 0. Exponents are plain
// naturals, which is all the model spectra ever need.
class Ordinal {
 public:
  struct Term {
    std::uint32_t exp;
    std::uint64_t coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Ordinal() = default;
  Ordinal(std::uint64_t n);  // NOLINT: finite ordinals convert implicitly
  explicit Ordinal(std::vector<Term> terms);

  static Ordinal omega() { return Ordinal({{1, 1}}); }
  // w^exp * coeff
  static Ordinal omega_pow(std::uint32_t exp, std::uint64_t coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  // Finite value; only valid when is_finite().
  std::uint64_t finite_value() const;

  // Least exponent in the CNF; 0 for zero and successors. This equals the
  // Cantor-Bendixson rank of the point in any interval containing it.
  std::uint32_t rank() const;
  std::uint32_t leading_exp() const { return terms_.empty() ? 0 : terms_.front().exp; }

  bool is_limit() const { return !terms_.empty() && rank() > 0; }
  bool is_successor() const { return !terms_.empty() && rank() == 0; }

  Ordinal successor() const;
  // Predecessor of a successor ordinal; nullopt for 0 and limits.
  std::optional<Ordinal> predecessor() const;

  std::strong_ordering operator<=>(const Ordinal& o) const;
  bool operator==(const Ordinal& o) const { return terms_ == o.terms_; }

  // Ordinal arithmetic (non-commutative where it matters).
  friend Ordinal operator+(const Ordinal& a, const Ordinal& b);
  friend Ordinal operator*(const Ordinal& a, const Ordinal& b);
  // Left subtraction: the unique c with a + c = b, requires a <= b.
  static Ordinal left_sub(const Ordinal& a, const Ordinal& b);

  // Splits the CNF at exponent j: *this = w^j * quotient + remainder with
  // remainder < w^j. Both parts are exact.
  struct DivPow;
  DivPow div_pow_omega(std::uint32_t j) const;

  const std::vector<Term>& terms() const { return terms_; }

  // "w^2*3+w*1+4" (exponent 1 prints as "w", exponent 0 as a bare number).
  std::string to_string() const;
  static Ordinal parse(const std::string& text);

  std::size_t hash() const;

 private:
  void normalize_check() const;
  std::vector<Term> terms_;
};

struct Ordinal::DivPow {
  Ordinal quotient;
  Ordinal remainder;
};

Ordinal operator+(const Ordinal& a, const Ordinal& b);
Ordinal operator*(const Ordinal& a, const Ordinal& b);

inline Ordinal min(const Ordinal& a, const Ordinal& b) { return a < b ? a : b; }
inline Ordinal max(const Ordinal& a, const Ordinal& b) { return a < b ? b : a; }

}  // namespace adklab
