#include <doctest.h>

#include <random>

#include "adklab/ordinal.hpp"

using namespace adklab;

namespace {

Ordinal random_ordinal(std::mt19937_64& rng, std::uint32_t max_exp = 3,
                       std::uint64_t max_coeff = 9) {
  std::vector<Ordinal::Term> terms;
  for (std::uint32_t e = max_exp + 1; e-- > 0;) {
    if (rng() % 3 == 0) continue;
    std::uint64_t c = 1 + rng() % max_coeff;
    terms.push_back({e, c});
  }
  return Ordinal(std::move(terms));
}

}  // namespace

TEST_CASE("cantor normal form basics") {
  Ordinal w = Ordinal::omega();
  CHECK(Ordinal(0).is_zero());
  CHECK(Ordinal(7).is_finite());
  CHECK(Ordinal(7).finite_value() == 7);
  CHECK(w.is_limit());
  CHECK(!w.is_successor());
  CHECK(Ordinal(3).is_successor());
  CHECK((w + Ordinal(1)).is_successor());
  CHECK((w + Ordinal(1)).predecessor().value() == w);
  CHECK(!w.predecessor().has_value());

  CHECK(Ordinal(3) + w == w);                  // absorption
  CHECK(w + Ordinal(3) > w);
  CHECK(w * Ordinal(2) == Ordinal({{1, 2}}));  // w+w
  CHECK(Ordinal(2) * w == w);                  // 2*w = w
  CHECK(w * w == Ordinal::omega_pow(2));
}

TEST_CASE("rank is the least exponent") {
  CHECK(Ordinal(0).rank() == 0);
  CHECK(Ordinal(17).rank() == 0);
  CHECK(Ordinal::omega().rank() == 1);
  CHECK((Ordinal::omega_pow(2) + Ordinal::omega() * Ordinal(3)).rank() == 1);
  CHECK(Ordinal::omega_pow(2, 5).rank() == 2);
}

TEST_CASE("left subtraction inverts addition") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 500; ++i) {
    Ordinal a = random_ordinal(rng);
    Ordinal b = random_ordinal(rng);
    if (b < a) std::swap(a, b);
    Ordinal c = Ordinal::left_sub(a, b);
    CHECK(a + c == b);
  }
}

TEST_CASE("division by powers of omega") {
  Ordinal x = Ordinal::omega_pow(2, 3) + Ordinal::omega() * Ordinal(5) + Ordinal(4);
  auto d1 = x.div_pow_omega(1);
  CHECK(d1.quotient == Ordinal::omega() * Ordinal(3) + Ordinal(5));
  CHECK(d1.remainder == Ordinal(4));
  auto d2 = x.div_pow_omega(2);
  CHECK(d2.quotient == Ordinal(3));
  CHECK(d2.remainder == Ordinal::omega() * Ordinal(5) + Ordinal(4));
  // quotient * w^j + remainder == x
  CHECK(Ordinal::omega_pow(2) * d2.quotient + d2.remainder == x);
}

TEST_CASE("string round trip") {
  CHECK(Ordinal::parse("w^2*3+w*1+4").to_string() == "w^2*3+w*1+4");
  CHECK(Ordinal::parse("0").is_zero());
  CHECK(Ordinal::parse("w") == Ordinal::omega());
  CHECK(Ordinal::parse("w^3") == Ordinal::omega_pow(3));
  CHECK_THROWS(Ordinal::parse("w*0"));
  CHECK_THROWS(Ordinal::parse("1+w"));
  CHECK_THROWS(Ordinal::parse(""));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    Ordinal a = random_ordinal(rng);
    CHECK(Ordinal::parse(a.to_string()) == a);
  }
}

TEST_CASE("comparison is lexicographic on CNF") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    Ordinal a = random_ordinal(rng);
    Ordinal b = random_ordinal(rng);
    Ordinal c = random_ordinal(rng, 1, 4);
    if (a < b) {
      CHECK(c + a < c + b);   // left addition is strictly monotone
      CHECK(a + c <= b + c);  // right addition is weakly monotone
    }
    CHECK(((a < b) ^ (b < a) ^ (a == b)));
  }
}
