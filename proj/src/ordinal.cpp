#include "adklab/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "adklab/errors.hpp"

namespace adklab {

Ordinal::Ordinal(std::uint64_t n) {
  if (n > 0) terms_.push_back({0, n});
}

Ordinal::Ordinal(std::vector<Term> terms) : terms_(std::move(terms)) {
  normalize_check();
}

void Ordinal::normalize_check() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff == 0)
      fail(ErrorCode::Internal, "ordinal term with zero coefficient");
    if (i + 1 < terms_.size() && terms_[i].exp <= terms_[i + 1].exp)
      fail(ErrorCode::Internal, "ordinal exponents not strictly decreasing");
  }
}

Ordinal Ordinal::omega_pow(std::uint32_t exp, std::uint64_t coeff) {
  if (coeff == 0) return Ordinal();
  return Ordinal({{exp, coeff}});
}

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0);
}

std::uint64_t Ordinal::finite_value() const {
  if (terms_.empty()) return 0;
  if (!is_finite()) fail(ErrorCode::Internal, "finite_value of infinite ordinal");
  return terms_[0].coeff;
}

std::uint32_t Ordinal::rank() const {
  return terms_.empty() ? 0 : terms_.back().exp;
}

Ordinal Ordinal::successor() const { return *this + Ordinal(1); }

std::optional<Ordinal> Ordinal::predecessor() const {
  if (!is_successor()) return std::nullopt;
  std::vector<Term> t = terms_;
  if (t.back().coeff == 1)
    t.pop_back();
  else
    t.back().coeff -= 1;
  return Ordinal(std::move(t));
}

std::strong_ordering Ordinal::operator<=>(const Ordinal& o) const {
  std::size_t n = std::min(terms_.size(), o.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (terms_[i].exp != o.terms_[i].exp)
      return terms_[i].exp <=> o.terms_[i].exp;
    if (terms_[i].coeff != o.terms_[i].coeff)
      return terms_[i].coeff <=> o.terms_[i].coeff;
  }
  return terms_.size() <=> o.terms_.size();
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  std::uint32_t lead = b.terms_.front().exp;
  std::vector<Ordinal::Term> out;
  for (const auto& t : a.terms_) {
    if (t.exp > lead)
      out.push_back(t);
    else if (t.exp == lead) {
      // absorb into b's leading term
      out.push_back({lead, t.coeff + b.terms_.front().coeff});
      out.insert(out.end(), b.terms_.begin() + 1, b.terms_.end());
      return Ordinal(std::move(out));
    } else
      break;  // strictly smaller terms are absorbed
  }
  out.insert(out.end(), b.terms_.begin(), b.terms_.end());
  return Ordinal(std::move(out));
}

Ordinal operator*(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  Ordinal acc;
  for (const auto& t : b.terms_) {
    if (t.exp > 0) {
      // a * w^e * c = w^{lead(a)+e} * c
      acc = acc + Ordinal::omega_pow(a.terms_.front().exp + t.exp, t.coeff);
    } else {
      // a * n = w^{lead} * (c_lead * n) + tail(a)
      std::vector<Ordinal::Term> scaled = a.terms_;
      scaled.front().coeff *= t.coeff;
      acc = acc + Ordinal(std::move(scaled));
    }
  }
  return acc;
}

Ordinal Ordinal::left_sub(const Ordinal& a, const Ordinal& b) {
  if (a > b) fail(ErrorCode::Internal, "left_sub: minuend smaller than subtrahend");
  // Find the first position where the CNFs diverge; everything of a up to
  // there cancels against b.
  std::size_t i = 0;
  while (i < a.terms_.size() && i < b.terms_.size() &&
         a.terms_[i] == b.terms_[i])
    ++i;
  if (i == a.terms_.size()) {
    // a is a prefix of b: the difference is b's remaining tail.
    return Ordinal(std::vector<Term>(b.terms_.begin() + i, b.terms_.end()));
  }
  // Diverging term: b's term dominates. If exponents agree the coefficient
  // difference stays at that exponent, otherwise b's whole term survives.
  std::vector<Term> out;
  if (a.terms_[i].exp == b.terms_[i].exp) {
    std::uint64_t dc = b.terms_[i].coeff - a.terms_[i].coeff;
    if (dc > 0) out.push_back({b.terms_[i].exp, dc});
    out.insert(out.end(), b.terms_.begin() + i + 1, b.terms_.end());
  } else {
    out.insert(out.end(), b.terms_.begin() + i, b.terms_.end());
  }
  return Ordinal(std::move(out));
}

Ordinal::DivPow Ordinal::div_pow_omega(std::uint32_t j) const {
  DivPow r;
  std::vector<Term> q, rem;
  for (const auto& t : terms_) {
    if (t.exp >= j)
      q.push_back({t.exp - j, t.coeff});
    else
      rem.push_back(t);
  }
  r.quotient = Ordinal(std::move(q));
  r.remainder = Ordinal(std::move(rem));
  return r;
}

std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += '+';
    const Term& t = terms_[i];
    if (t.exp == 0) {
      s += std::to_string(t.coeff);
    } else if (t.exp == 1) {
      s += "w*" + std::to_string(t.coeff);
    } else {
      s += "w^" + std::to_string(t.exp) + "*" + std::to_string(t.coeff);
    }
  }
  return s;
}

namespace {

std::uint64_t parse_nat(const std::string& s, std::size_t& i) {
  std::uint64_t v = 0;
  auto first = s.data() + i;
  auto res = std::from_chars(first, s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr == first)
    fail(ErrorCode::ParseError, "expected number in ordinal at '" + s + "'");
  i = static_cast<std::size_t>(res.ptr - s.data());
  return v;
}

}  // namespace

Ordinal Ordinal::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail(ErrorCode::ParseError, "empty ordinal string");
  if (s == "0") return Ordinal();

  std::vector<Term> terms;
  std::size_t i = 0;
  while (i < s.size()) {
    Term t{0, 1};
    if (s[i] == 'w') {
      ++i;
      t.exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::uint64_t e = parse_nat(s, i);
        if (e > 0xffffffffull) fail(ErrorCode::ParseError, "exponent too large");
        t.exp = static_cast<std::uint32_t>(e);
      }
      if (i < s.size() && s[i] == '*') {
        ++i;
        t.coeff = parse_nat(s, i);
      }
    } else {
      t.coeff = parse_nat(s, i);
    }
    if (t.coeff == 0) fail(ErrorCode::ParseError, "zero coefficient in '" + text + "'");
    terms.push_back(t);
    if (i < s.size()) {
      if (s[i] != '+') fail(ErrorCode::ParseError, "expected '+' in '" + text + "'");
      ++i;
      if (i == s.size()) fail(ErrorCode::ParseError, "trailing '+' in '" + text + "'");
    }
  }
  for (std::size_t k = 0; k + 1 < terms.size(); ++k)
    if (terms[k].exp <= terms[k + 1].exp)
      fail(ErrorCode::ParseError, "ordinal terms not in descending order: '" + text + "'");
  return Ordinal(std::move(terms));
}

std::size_t Ordinal::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 0x100000001b3ull;
  };
  for (const auto& t : terms_) {
    mix(t.exp);
    mix(t.coeff);
  }
  return h;
}

}  // namespace adklab
