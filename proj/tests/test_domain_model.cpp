#include <doctest.h>

#include "adklab/builtins.hpp"
#include "adklab/json_io.hpp"
#include "oracles/brute_topology.hpp"

using namespace adklab;

TEST_CASE("builtin catalog constructs and validates") {
  for (const auto& name : builtin_names()) {
    auto m = make_builtin(name);
    REQUIRE(m.has_value());
    CHECK(m->name() == name);
    CHECK(m->validate().empty());
  }
  CHECK(!make_builtin("no-such-model").has_value());
  CHECK(make_builtin("example-7").has_value());
  CHECK(make_builtin("dedekind-finite-3").has_value());
}

TEST_CASE("example-r instance values match the construction") {
  // nu_{Y_t}(k) = r for k > t, 0 for k <= t, 1 at w
  for (std::uint64_t r : {2ull, 3ull, 5ull}) {
    auto m = make_builtin("example-" + std::to_string(r));
    const auto* chain = std::get_if<TailChain>(&m->generators()[1]);
    REQUIRE(chain != nullptr);
    for (std::uint64_t t : {0ull, 1ull, 4ull, 9ull}) {
      IdealFunction yt = chain->instantiate(t);
      CHECK(yt.eval(Ordinal::omega()) == 1);
      for (std::uint64_t k = 0; k <= t; ++k) CHECK(yt.eval(Ordinal(k)) == 0);
      for (std::uint64_t k = t + 1; k <= t + 5; ++k) CHECK(yt.eval(Ordinal(k)) == r);
      CHECK(yt.sup() == ExtNat(r));
      CHECK(yt.is_lsc());
      CHECK(yt.fg());
    }
  }
}

TEST_CASE("example-growing head is unbounded") {
  auto m = make_builtin("example-growing");
  const auto* chain = std::get_if<TailChain>(&m->generators()[1]);
  IdealFunction y0 = chain->instantiate(0);
  CHECK(y0.sup() == ExtNat::infinity());
  CHECK(y0.eval(Ordinal(7)) == 7);
  CHECK(y0.eval(Ordinal::omega()) == 1);
  CHECK(y0.is_lsc());
}

TEST_CASE("chain monotonicity holds and violations are caught") {
  auto m = make_builtin("example-2");
  const auto* chain = std::get_if<TailChain>(&m->generators()[1]);
  CHECK(!chain->monotonicity_violation().has_value());
  // instances are pointwise nonincreasing over a long range of cuts
  IdealFunction prev = chain->instantiate(0);
  for (std::uint64_t t = 1; t <= 32; ++t) {
    IdealFunction cur = chain->instantiate(t);
    CHECK(IdealFunction::pointwise_leq(cur, prev));
    prev = cur;
  }

  // an increasing template is rejected: value grows with t
  SpectrumSpace w1 = SpectrumSpace::interval(Ordinal::omega());
  std::vector<TailChain::Segment> segs{
      {TBreak::affine(0, 1, 0), Rule::constant(3)},
      {TBreak::at(Ordinal::omega()), Rule::constant(0)}};
  TailChain bad(w1, std::move(segs), {});
  CHECK(bad.monotonicity_violation().has_value());
}

TEST_CASE("positivity conditions at points") {
  auto m = make_builtin("example-2");
  // at w every chain member is positive
  PositiveFamily at_w = m->generators_positive_at(Ordinal::omega());
  REQUIRE(at_w.chains.size() == 1);
  CHECK(at_w.chains[0].all_t);
  CHECK(at_w.members.empty());

  // at 5: the indicator member plus the cuts t <= 4
  PositiveFamily at5 = m->generators_positive_at(Ordinal(5));
  REQUIRE(at5.members.size() == 1);
  CHECK(at5.members[0].second == Ordinal(5));
  REQUIRE(at5.chains.size() == 1);
  CHECK(!at5.chains[0].all_t);
  CHECK(at5.chains[0].bound == 4);

  // at 0 only the indicator family fires
  PositiveFamily at0 = m->generators_positive_at(Ordinal(0));
  CHECK(at0.members.size() == 1);
  CHECK(at0.chains.empty());
}

TEST_CASE("validation flags broken models") {
  SpectrumSpace w1 = SpectrumSpace::interval(Ordinal::omega());
  // non-LSC single: indicator of {w}
  IdealFunction bad(w1, {{Ordinal::omega(), Rule::constant(0)}}, {{Ordinal::omega(), 1}},
                    true);
  DomainModel m1("bad-lsc", w1,
                 {GeneratorSpec(PointFamily(w1, 0, 1, 1)), GeneratorSpec(bad)});
  auto v1 = m1.validate();
  REQUIRE(!v1.empty());
  bool found = false;
  for (const auto& v : v1)
    if (v.code == "SemicontinuityViolation" && v.point == Ordinal::omega()) found = true;
  CHECK(found);

  // uncovered isolated points
  IdealFunction only3 =
      IdealFunction(w1, {{Ordinal(2), Rule::constant(0)},
                         {Ordinal(3), Rule::constant(1)},
                         {Ordinal::omega(), Rule::constant(0)}},
                    {}, true);
  DomainModel m2("uncovered", w1, {GeneratorSpec(only3)});
  auto v2 = m2.validate();
  bool uncovered = false;
  for (const auto& v : v2)
    if (v.code == "UncoveredPoint") uncovered = true;
  CHECK(uncovered);

  // infinite support on the discrete spectrum
  SpectrumSpace d = SpectrumSpace::discrete();
  DomainModel m3("fat-discrete", d,
                 {GeneratorSpec(PointFamily(d, 0, 1, 1)),
                  GeneratorSpec(IdealFunction::constant(d, 1, true))});
  auto v3 = m3.validate();
  bool fat = false;
  for (const auto& v : v3)
    if (v.code == "NonCompactSupport") fat = true;
  CHECK(fat);
}

TEST_CASE("profile classes collapse correctly") {
  auto m = make_builtin("example-2");
  auto classes = m->profile_classes();
  // isolated points and the limit point: two classes
  CHECK(classes.size() == 2);
  PointSet un(m->space());
  for (const auto& c : classes) un = un.set_union(c.points);
  CHECK(un == PointSet::whole(m->space()));

  // ladder-2: one class per rank
  auto lad = make_builtin("ladder-2");
  auto lcl = lad->profile_classes();
  CHECK(lcl.size() == 3);

  // finite space: singleton classes
  auto fin = make_builtin("dedekind-finite-5");
  CHECK(fin->profile_classes().size() == 5);
}

TEST_CASE("model json round trip is bit exact") {
  for (const auto& name : builtin_names()) {
    auto m = make_builtin(name);
    Json j1 = to_json(*m);
    DomainModel back = model_from_json(j1);
    Json j2 = to_json(back);
    CHECK(j1.dump() == j2.dump());
    CHECK(model_hash(*m) == model_hash(back));
    CHECK(back.validate().empty());
  }
}

TEST_CASE("jacobson radical flag") {
  CHECK(make_builtin("example-2")->jacobson_nonzero());
  CHECK(make_builtin("dedekind-finite-5")->jacobson_nonzero());
  SpectrumSpace d = SpectrumSpace::discrete();
  DomainModel m("disc", d, {GeneratorSpec(PointFamily(d, 0, 1, 1))});
  CHECK(!m.jacobson_nonzero());
}
