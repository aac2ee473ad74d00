#include <doctest.h>

#include <random>

#include "adklab/ideal_function.hpp"
#include "adklab/order_iso.hpp"
#include "oracles/brute_topology.hpp"
#include "support/random_functions.hpp"

using namespace adklab;

namespace {

const SpectrumSpace w1 = SpectrumSpace::interval(Ordinal::omega());
const SpectrumSpace w2 = SpectrumSpace::interval(Ordinal::omega_pow(2));

// The running example: value r past the cut, 1 at w ("tail r, w -> 1").
IdealFunction y_profile(std::uint64_t cut, std::uint64_t r) {
  std::vector<IdealFunction::Segment> segs;
  if (cut > 0) segs.push_back({Ordinal(cut), Rule::constant(0)});
  segs.push_back({Ordinal::omega(), Rule::constant(static_cast<std::int64_t>(r))});
  if (cut == 0) segs.insert(segs.begin(), {Ordinal(0), Rule::constant(0)});
  return IdealFunction(w1, std::move(segs), {{Ordinal::omega(), 1}}, true);
}

}  // namespace

TEST_CASE("evaluation and representation") {
  IdealFunction y0 = y_profile(0, 2);
  CHECK(y0.eval(Ordinal(0)) == 0);
  CHECK(y0.eval(Ordinal(1)) == 2);
  CHECK(y0.eval(Ordinal(17)) == 2);
  CHECK(y0.eval(Ordinal::omega()) == 1);
  CHECK(y0.sup() == ExtNat(2));
  CHECK(y0.is_lsc());

  // growing profile: value k at k, 1 at w
  IdealFunction grow(w1, {{Ordinal(0), Rule::constant(0)},
                          {Ordinal::omega(), Rule::linear(1, 0)}},
                     {{Ordinal::omega(), 1}}, true);
  CHECK(grow.eval(Ordinal(5)) == 5);
  CHECK(grow.sup() == ExtNat::infinity());
  CHECK(grow.is_lsc());
}

TEST_CASE("pointwise algebra matches brute force") {
  std::mt19937_64 rng(0xF00D);
  auto grid = oracle::probe_grid(w2, 8);
  for (int rep = 0; rep < 200; ++rep) {
    IdealFunction f = testgen::random_step_function(rng, w2);
    IdealFunction g = testgen::random_step_function(rng, w2);
    IdealFunction s = IdealFunction::add(f, g);
    IdealFunction mn = IdealFunction::min_fn(f, g);
    IdealFunction mx = IdealFunction::max_fn(f, g);
    for (const auto& p : grid) {
      CHECK(s.eval(p) == f.eval(p) + g.eval(p));
      CHECK(mn.eval(p) == std::min(f.eval(p), g.eval(p)));
      CHECK(mx.eval(p) == std::max(f.eval(p), g.eval(p)));
    }
    CHECK(IdealFunction::pointwise_leq(mn, f));
    CHECK(IdealFunction::pointwise_leq(f, s));
    IdealFunction d = IdealFunction::sub_exact(s, g);
    CHECK(d == f);
  }
}

TEST_CASE("linear rules combine with crossings") {
  IdealFunction lin(w1, {{Ordinal(0), Rule::constant(0)},
                         {Ordinal::omega(), Rule::linear(1, 0)}},
                    {{Ordinal::omega(), 3}}, true);
  IdealFunction c5 = IdealFunction::constant(w1, 5, true);
  IdealFunction mn = IdealFunction::min_fn(lin, c5);
  CHECK(mn.eval(Ordinal(2)) == 2);
  CHECK(mn.eval(Ordinal(5)) == 5);
  CHECK(mn.eval(Ordinal(9)) == 5);
  CHECK(mn.eval(Ordinal::omega()) == 3);
  CHECK(mn.sup() == ExtNat(5));
  IdealFunction mx = IdealFunction::max_fn(lin, c5);
  CHECK(mx.eval(Ordinal(2)) == 5);
  CHECK(mx.eval(Ordinal(9)) == 9);
  CHECK(mx.sup() == ExtNat::infinity());
  CHECK(IdealFunction::add(lin, lin).eval(Ordinal(7)) == 14);
}

TEST_CASE("sub_exact guards the order") {
  IdealFunction y0 = y_profile(0, 2);
  IdealFunction y3 = y_profile(3, 2);
  CHECK(IdealFunction::pointwise_leq(y3, y0));
  IdealFunction d = IdealFunction::sub_exact(y0, y3);
  CHECK(d.eval(Ordinal(2)) == 2);
  CHECK(d.eval(Ordinal(4)) == 0);
  CHECK(d.eval(Ordinal::omega()) == 0);
  CHECK_THROWS_AS((void)IdealFunction::sub_exact(y3, y0), AdkError);
  CHECK(IdealFunction::sub_exact(y0, y0).is_zero());
}

TEST_CASE("semicontinuity checks") {
  CHECK(y_profile(0, 2).is_lsc());
  // indicator of {w} in [0, w] jumps up at the limit
  IdealFunction bad(w1, {{Ordinal::omega(), Rule::constant(0)}}, {{Ordinal::omega(), 1}},
                    true);
  auto v = bad.lsc_violation();
  REQUIRE(v.has_value());
  CHECK(*v == Ordinal::omega());
  // constant functions are fine
  CHECK(IdealFunction::constant(w2, 3, true).is_lsc());

  // brute force: value at every limit vs liminf along the fundamental ladder
  std::mt19937_64 rng(0xF00E);
  auto grid = oracle::probe_grid(w2, 8);
  for (int rep = 0; rep < 400; ++rep) {
    IdealFunction f = testgen::random_step_function(rng, w2);
    bool brute = true;
    for (const auto& q : grid) {
      if (q.rank() == 0 || q.is_zero()) continue;
      std::uint64_t lim = UINT64_MAX;
      for (std::uint64_t m = 30; m <= 40; ++m)
        lim = std::min(lim, f.eval(oracle::fundamental(q, m)));
      if (f.eval(q) > lim) {
        brute = false;
        break;
      }
    }
    CHECK(f.is_lsc() == brute);
  }
}

TEST_CASE("level sets support radical") {
  IdealFunction y0 = y_profile(0, 2);
  PointSet l1 = y0.level_set(1);
  CHECK(l1 == PointSet::interval(w1, Ordinal(0), Ordinal::omega()));
  PointSet l2 = y0.level_set(2);
  CHECK(l2.contains(Ordinal(3)));
  CHECK(!l2.contains(Ordinal::omega()));
  CHECK(!l2.is_closed());  // tail without its limit
  CHECK(y0.support() == l1);

  IdealFunction rad = y0.radical();
  CHECK(rad.eval(Ordinal(5)) == 1);
  CHECK(rad.eval(Ordinal(0)) == 0);
  CHECK(rad.eval(Ordinal::omega()) == 1);
  CHECK(rad.radical() == rad);
  CHECK(IdealFunction::zero(w1).radical().is_zero());

  // level_set(f,1) == support
  std::mt19937_64 rng(0xF00F);
  for (int rep = 0; rep < 50; ++rep) {
    IdealFunction f = testgen::random_step_function(rng, w2);
    CHECK(f.level_set(1) == f.support());
  }
}

TEST_CASE("continuity and reconstruction") {
  IdealFunction two = IdealFunction::constant(w1, 2, true);
  CHECK(two.is_continuous());
  IdealFunction y0 = y_profile(0, 2);
  auto c = y0.continuity();
  CHECK(!c.continuous);
  CHECK(c.level.value() == 2);
  CHECK(IdealFunction::zero(w1).is_continuous());

  // continuous => exact sum of level indicators
  std::mt19937_64 rng(0xF010);
  for (int rep = 0; rep < 60; ++rep) {
    IdealFunction f = testgen::random_continuous_function(rng, w2);
    REQUIRE(f.is_continuous());
    ExtNat s = f.sup();
    IdealFunction acc = IdealFunction::zero(w2);
    for (std::uint64_t j = 1; j <= s.value(); ++j)
      acc = IdealFunction::add(acc, IdealFunction::indicator(f.level_set(j), true));
    CHECK(acc == f);
  }
}

TEST_CASE("sup over windows") {
  IdealFunction y0 = y_profile(0, 2);
  CHECK(y0.sup_over(PointSet::singleton(w1, Ordinal::omega())) == ExtNat(1));
  CHECK(y0.sup_over(PointSet::interval(w1, Ordinal(0), Ordinal(5))) == ExtNat(2));
  CHECK(y0.sup_over(PointSet::singleton(w1, Ordinal(0))) == ExtNat(0));
  IdealFunction grow(w1, {{Ordinal(0), Rule::constant(0)},
                          {Ordinal::omega(), Rule::linear(1, 0)}},
                     {{Ordinal::omega(), 1}}, true);
  CHECK(grow.sup_over(PointSet::interval(w1, Ordinal(0), Ordinal(9))) == ExtNat(9));
  CHECK(grow.sup_over(PointSet::whole(w1)) == ExtNat::infinity());

  // windowed sup agrees with brute max over the window members
  std::mt19937_64 rng(0xF011);
  auto grid = oracle::probe_grid(w2, 8);
  for (int rep = 0; rep < 60; ++rep) {
    IdealFunction f = testgen::random_step_function(rng, w2);
    PointSet win = PointSet::interval(w2, testgen::random_point(rng, w2), w2.bound());
    ExtNat lib = f.sup_over(win);
    std::uint64_t brute = 0;
    for (const auto& p : grid)
      if (win.contains(p)) brute = std::max(brute, f.eval(p));
    if (lib.is_finite()) CHECK(lib.value() >= brute);
  }
}

TEST_CASE("restriction re-indexes along the order type") {
  // restrict the y-profile to {w*a} union {w^2} inside [0, w^2]
  IdealFunction f(w2, {{Ordinal::omega() * Ordinal(3), Rule::constant(2)},
                       {w2.bound(), Rule::constant(4)}},
                  {{w2.bound(), 1}}, true);
  PointSet lims = PointSet::interval(w2, std::nullopt, w2.bound(), 1);
  OrderIso iso = order_type(lims);
  IdealFunction r = restrict_function(f, lims, iso);
  CHECK(r.space().bound() == Ordinal::omega());
  CHECK(r.eval(Ordinal(0)) == f.eval(Ordinal::omega()));
  CHECK(r.eval(Ordinal(2)) == f.eval(Ordinal::omega() * Ordinal(3)));
  CHECK(r.eval(Ordinal(3)) == f.eval(Ordinal::omega() * Ordinal(4)));
  CHECK(r.eval(Ordinal::omega()) == f.eval(w2.bound()));

  // restrict(zero) = zero; restriction matches pointwise everywhere
  CHECK(restrict_function(IdealFunction::zero(w2), lims, iso).is_zero());
  std::mt19937_64 rng(0xF012);
  auto grid = oracle::probe_grid(w2, 8);
  for (int rep = 0; rep < 40; ++rep) {
    IdealFunction g = testgen::random_step_function(rng, w2);
    IdealFunction rg = restrict_function(g, lims, iso);
    for (const auto& p : grid)
      if (lims.contains(p)) CHECK(rg.eval(iso.index_of(p)) == g.eval(p));
  }
}
