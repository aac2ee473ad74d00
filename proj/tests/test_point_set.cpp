#include <doctest.h>

#include <random>

#include "adklab/inv_group.hpp"
#include "adklab/order_iso.hpp"
#include "adklab/point_set.hpp"
#include "oracles/brute_topology.hpp"

using namespace adklab;

namespace {

const SpectrumSpace w2 = SpectrumSpace::interval(Ordinal::omega_pow(2));
const SpectrumSpace w1 = SpectrumSpace::interval(Ordinal::omega());

PointSet random_set(std::mt19937_64& rng, const SpectrumSpace& s) {
  std::vector<PointSet::Piece> pieces;
  std::size_t n = 1 + rng() % 3;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Ordinal::Term> lo_t, hi_t;
    for (std::uint32_t e = s.max_rank() + 1; e-- > 0;) {
      if (rng() % 2) lo_t.push_back({e, 1 + rng() % 5});
      if (rng() % 2) hi_t.push_back({e, 1 + rng() % 5});
    }
    Ordinal lo(std::move(lo_t)), hi(std::move(hi_t));
    if (hi < lo) std::swap(lo, hi);
    if (lo == hi) hi = hi + Ordinal(1 + rng() % 4);
    hi = min(hi, s.bound());
    if (!(lo < hi)) continue;
    PointSet::Piece pc;
    if (rng() % 4 == 0) pc.lower = std::nullopt;
    else pc.lower = lo;
    pc.upper = hi;
    pc.rank_ge = rng() % (s.max_rank() + 1);
    if (rng() % 3 == 0) pc.rank_le = pc.rank_ge + rng() % 2;
    pieces.push_back(std::move(pc));
  }
  return PointSet::from_pieces(s, pieces);
}

}  // namespace

TEST_CASE("cb rank of points in an interval") {
  // successor ordinals are isolated
  CHECK((Ordinal::omega() * Ordinal(3) + Ordinal(5)).rank() == 0);
  // w*3 survives one derivative, w^2 two
  CHECK((Ordinal::omega() * Ordinal(3)).rank() == 1);
  CHECK(Ordinal::omega_pow(2).rank() == 2);

  // brute-force derivative oracle agrees on a grid
  auto grid = oracle::probe_grid(w2, 8);
  auto layers = oracle::derived_layers(grid, 5);
  for (const auto& q : grid)
    CHECK(oracle::cb_rank_oracle(layers, q) == q.rank());
}

TEST_CASE("whole / singleton / interval membership") {
  PointSet whole = PointSet::whole(w2);
  CHECK(whole.contains(Ordinal(0)));
  CHECK(whole.contains(Ordinal::omega()));
  CHECK(whole.contains(Ordinal::omega_pow(2)));
  CHECK(!whole.set_complement().contains(Ordinal(5)));
  CHECK(whole.set_complement().is_empty());

  PointSet s = PointSet::singleton(w2, Ordinal::omega() * Ordinal(2));
  CHECK(s.contains(Ordinal::omega() * Ordinal(2)));
  CHECK(!s.contains(Ordinal::omega()));
  CHECK(!s.contains(Ordinal::omega() * Ordinal(2) + Ordinal(1)));

  PointSet iv = PointSet::interval(w2, Ordinal(3), Ordinal::omega() * Ordinal(2));
  CHECK(iv.contains(Ordinal(4)));
  CHECK(!iv.contains(Ordinal(3)));
  CHECK(iv.contains(Ordinal::omega()));
  CHECK(iv.contains(Ordinal::omega() * Ordinal(2)));
  CHECK(!iv.contains(Ordinal::omega() * Ordinal(2) + Ordinal(1)));
}

TEST_CASE("boolean algebra against pointwise evaluation") {
  std::mt19937_64 rng(0xADC1);
  auto grid = oracle::probe_grid(w2, 8);
  for (int rep = 0; rep < 60; ++rep) {
    PointSet a = random_set(rng, w2);
    PointSet b = random_set(rng, w2);
    PointSet u = a.set_union(b);
    PointSet i = a.set_intersect(b);
    PointSet d = a.set_difference(b);
    PointSet c = a.set_complement();
    for (const auto& p : grid) {
      CHECK(u.contains(p) == (a.contains(p) || b.contains(p)));
      CHECK(i.contains(p) == (a.contains(p) && b.contains(p)));
      CHECK(d.contains(p) == (a.contains(p) && !b.contains(p)));
      CHECK(c.contains(p) == !a.contains(p));
    }
    CHECK(a.set_complement().set_complement() == a);
    // canonical form: equal sets compare equal
    CHECK(u == b.set_union(a));
  }
}

TEST_CASE("pieces round trip") {
  std::mt19937_64 rng(0xADC2);
  for (int rep = 0; rep < 80; ++rep) {
    PointSet a = random_set(rng, w2);
    PointSet back = PointSet::from_pieces(w2, a.pieces());
    CHECK(back == a);
  }
}

TEST_CASE("closure matches the definition") {
  // all isolated points of [0, w] close to the whole space
  PointSet iso = PointSet::interval(w1, std::nullopt, w1.bound(), 0, 0);
  CHECK(iso.closure() == PointSet::whole(w1));
  CHECK(iso.is_dense());

  // a clopen interval is closed already
  PointSet clop = PointSet::interval(w2, Ordinal(2), Ordinal::omega() * Ordinal(3));
  CHECK(clop.closure() == clop);
  CHECK(clop.is_clopen());

  // {w*a : a >= 1} in [0, w^2] gains w^2
  PointSet lims = PointSet::interval(w2, std::nullopt, w2.bound(), 1, 1);
  PointSet cl = lims.closure();
  CHECK(cl.contains(Ordinal::omega_pow(2)));
  CHECK(cl == lims.set_union(PointSet::singleton(w2, Ordinal::omega_pow(2))));

  // oracle agreement on random sets
  std::mt19937_64 rng(0xADC3);
  auto grid = oracle::probe_grid(w2, 8);
  for (int rep = 0; rep < 40; ++rep) {
    PointSet a = random_set(rng, w2);
    PointSet cls = a.closure();
    auto in_a = [&a](const Ordinal& x) { return a.contains(x); };
    for (const auto& p : grid)
      CHECK(cls.contains(p) == oracle::closure_oracle_contains(grid, in_a, p));
    CHECK(cls.closure() == cls);                 // idempotent
    CHECK(a.set_difference(cls).is_empty());     // extensive
  }
}

TEST_CASE("density checks") {
  PointSet iso2 = PointSet::interval(w2, std::nullopt, w2.bound(), 0, 0);
  CHECK(iso2.is_dense());
  CHECK(!PointSet::singleton(w1, Ordinal::omega()).is_dense());
  CHECK(PointSet::whole(w1).is_dense());
  // rank-filtered sets are not clopen
  PointSet ranked = PointSet::interval(w2, std::nullopt, w2.bound(), 1);
  CHECK(ranked.is_closed());
  CHECK(!ranked.is_clopen());
}

TEST_CASE("order types") {
  // finite set of k points -> k-1
  PointSet fin = PointSet::from_pieces(
      w2, {{Ordinal(2), Ordinal(5), 0, std::nullopt}});  // {3,4,5}
  OrderIso iso = order_type(fin);
  CHECK(iso.target().bound() == Ordinal(2));
  CHECK(iso.point_at(Ordinal(0)) == Ordinal(3));
  CHECK(iso.point_at(Ordinal(2)) == Ordinal(5));

  // whole [0, w] -> w (identity)
  OrderIso iso2 = order_type(PointSet::whole(w1));
  CHECK(iso2.target().bound() == Ordinal::omega());
  CHECK(iso2.point_at(Ordinal(5)) == Ordinal(5));
  CHECK(iso2.point_at(Ordinal::omega()) == Ordinal::omega());

  // limit slice {w*a} with its top -> w
  PointSet lims = PointSet::interval(w2, std::nullopt, w2.bound(), 1);
  OrderIso iso3 = order_type(lims.set_union(PointSet::singleton(w2, w2.bound())));
  CHECK(iso3.target().bound() == Ordinal::omega());
  CHECK(iso3.point_at(Ordinal(0)) == Ordinal::omega());
  CHECK(iso3.point_at(Ordinal(4)) == Ordinal::omega() * Ordinal(5));
  CHECK(iso3.point_at(Ordinal::omega()) == Ordinal::omega_pow(2));
  CHECK(iso3.index_of(Ordinal::omega() * Ordinal(3)) == Ordinal(2));

  // round trip on random closed sets
  std::mt19937_64 rng(0xADC4);
  auto grid = oracle::probe_grid(w2, 8);
  for (int rep = 0; rep < 40; ++rep) {
    PointSet a = random_set(rng, w2).closure();
    if (a.is_empty()) continue;
    OrderIso r = order_type(a);
    for (const auto& p : grid) {
      if (!a.contains(p)) continue;
      CHECK(r.point_at(r.index_of(p)) == p);
    }
    // enumeration respects order
    std::vector<Ordinal> members;
    for (const auto& p : grid)
      if (a.contains(p)) members.push_back(p);
    for (std::size_t i = 0; i + 1 < members.size(); ++i)
      CHECK(r.index_of(members[i]) < r.index_of(members[i + 1]));
  }
}

TEST_CASE("order type of a clopen interval equals CNF subtraction") {
  // (a, b] has order type b - a (+1 for the top when counting the max index)
  Ordinal a = Ordinal::omega() * Ordinal(2) + Ordinal(3);
  Ordinal b = Ordinal::omega() * Ordinal(5);
  PointSet iv = PointSet::interval(w2, a, b);
  OrderIso iso = order_type(iv);
  // left_sub gives w*3; the set (a, b] is order-isomorphic to (0, w*3],
  // whose top index is w*3 (limit reached as index).
  CHECK(iso.target().bound() == Ordinal::omega() * Ordinal(3));
}

TEST_CASE("min max sup of sets") {
  PointSet lims = PointSet::interval(w2, std::nullopt, w2.bound(), 1, 1);
  CHECK(lims.min_point().value() == Ordinal::omega());
  CHECK(!lims.max_point().has_value());  // sup w^2 is not a member
  CHECK(lims.sup_point().value() == Ordinal::omega_pow(2));
  PointSet closed = lims.closure();
  CHECK(closed.max_point().value() == Ordinal::omega_pow(2));

  std::vector<Ordinal> few;
  CHECK(PointSet::from_pieces(w2, {{Ordinal(0), Ordinal(4), 0, std::nullopt}})
            .finite_members(few));
  CHECK(few.size() == 4);
  CHECK(!PointSet::whole(w2).finite_members(few, 1000));
}

TEST_CASE("discrete space sets") {
  SpectrumSpace d = SpectrumSpace::discrete();
  PointSet whole = PointSet::whole(d);
  CHECK(whole.contains(Ordinal(12345)));
  CHECK(!whole.contains(Ordinal::omega()));
  CHECK(whole.is_dense());
  PointSet tail = PointSet::interval(d, Ordinal(10), d.bound());
  CHECK(tail.contains(Ordinal(11)));
  CHECK(!tail.contains(Ordinal(10)));
  CHECK(tail.closure() == tail);       // discrete: closure is identity
  CHECK(!tail.is_dense());
  CHECK(!tail.max_point().has_value());  // unbounded
  CHECK(tail.set_complement().contains(Ordinal(3)));
}
