#include "adklab/factorization.hpp"

#include <algorithm>

#include "adklab/errors.hpp"

namespace adklab {

Factorization radical_factorization(const IdealFunction& f) {
  if (!f.fg() || !f.is_proper())
    fail(ErrorCode::InvalidFunction, "radical factorization needs a proper fg function");
  auto cont = f.continuity();
  if (!cont.continuous) {
    std::string at = cont.level ? " at level " + std::to_string(*cont.level) : "";
    std::string wit = cont.witness ? " near " + cont.witness->to_string() : "";
    fail(ErrorCode::NotContinuous, "function is not continuous" + at + wit,
         cont.witness ? cont.witness->to_string() : "");
  }
  Factorization out;
  out.mode = Factorization::Mode::Radical;
  ExtNat s = f.sup();
  for (std::uint64_t j = 1; j <= s.value(); ++j) {
    IdealFunction factor = IdealFunction::indicator(f.level_set(j), true);
    out.certificates.push_back({factor.sup(), factor.support()});
    out.factors.push_back(std::move(factor));
  }
  return out;
}

namespace {

// Candidate pool of n-bounded family elements positive at p, in the
// deterministic pecking order: smallest sup first, then lexicographically
// smallest support. The full-family min certificate is always present when
// m_p <= n, so the pool cannot be empty for uncritical points.
std::optional<IdealFunction> best_bounded_candidate(const DomainModel& model,
                                                    const Ordinal& p, ExtNat limit) {
  PositiveFamily fam = model.generators_positive_at(p);
  std::vector<IdealFunction> pool;
  for (auto i : fam.singles) pool.push_back(std::get<IdealFunction>(model.generators()[i]));
  for (const auto& [i, q] : fam.members)
    pool.push_back(std::get<PointFamily>(model.generators()[i]).member_at(q));
  for (const auto& c : fam.chains) {
    const auto& chain = std::get<TailChain>(model.generators()[c.chain_index]);
    std::uint64_t top = c.all_t ? chain.crossing_bound_at(p) : c.bound;
    top = std::min<std::uint64_t>(top, 64);
    for (std::uint64_t t = 0; t <= top; ++t) pool.push_back(chain.instantiate(t));
  }
  BoundedSup ms = bounded_sup_at(model, p);
  if (ms.certificate) pool.push_back(*ms.certificate);

  std::optional<IdealFunction> best;
  ExtNat best_sup;
  PointSet best_supp(model.space());
  for (auto& g : pool) {
    ExtNat s = g.sup();
    if (s > limit || s == ExtNat(0)) continue;
    PointSet supp = g.support();
    bool better = !best || s < best_sup ||
                  (s == best_sup && PointSet::lex_compare(supp, best_supp) < 0);
    if (better) {
      best = std::move(g);
      best_sup = s;
      best_supp = std::move(supp);
    }
  }
  return best;
}

// Deterministic finite subcover of supp f by supports of bounded candidates,
// anchored at the maximum of the uncovered remainder (the anchors strictly
// descend, so the loop terminates).
std::vector<IdealFunction> support_cover(const DomainModel& model, const IdealFunction& f,
                                         ExtNat limit, ErrorCode obstruction) {
  std::vector<IdealFunction> cover;
  PointSet remaining = f.support();
  while (!remaining.is_empty()) {
    std::optional<Ordinal> anchor = remaining.max_point();
    if (!anchor) {
      // Unbounded discrete remainder cannot happen: fg supports are finite
      // on the discrete spectrum.
      fail(ErrorCode::Internal, "support cover: remainder without maximum");
    }
    auto j = best_bounded_candidate(model, *anchor, limit);
    if (!j)
      fail(obstruction, "no suitably bounded family element at " + anchor->to_string(),
           anchor->to_string());
    cover.push_back(*j);
    remaining = remaining.set_difference(j->support());
  }
  return cover;
}

}  // namespace

Factorization n_bounded_factorization(const DomainModel& model, const IdealFunction& f,
                                      std::uint64_t n) {
  require_same_space(model.space(), f.space());
  if (!f.is_proper() || !f.fg())
    fail(ErrorCode::InvalidFunction, "bounded factorization needs a proper fg function");
  if (n == 0) fail(ErrorCode::InvalidFunction, "bound must be positive");
  PointSet obstruction = f.support().set_intersect(crit_set(model, n));
  if (!obstruction.is_empty())
    fail(ErrorCode::CriticalObstruction,
         "V(f) meets the n-critical set at " + obstruction.min_point()->to_string(),
         obstruction.min_point()->to_string());

  Factorization out;
  out.mode = Factorization::Mode::Bounded;
  out.n = n;
  IdealFunction rest = f;
  while (rest.sup() > ExtNat(n)) {
    std::vector<IdealFunction> cover = support_cover(model, rest, ExtNat(n),
                                                     ErrorCode::CriticalObstruction);
    // L = max over the cover of min(f, J): keeps L <= f, supp L = supp f,
    // sup L <= n, and L >= 1 on the support, so the sup drops every round.
    std::optional<IdealFunction> L;
    for (const auto& j : cover) {
      IdealFunction piece = IdealFunction::min_fn(rest, j);
      L = L ? IdealFunction::max_fn(*L, piece) : piece;
    }
    out.factors.push_back(*L);
    rest = IdealFunction::sub_exact(rest, *L);
  }
  if (rest.is_proper()) out.factors.push_back(rest);
  for (const auto& g : out.factors) out.certificates.push_back({g.sup(), g.support()});

  // Round-trip safety net: factors must recompose exactly.
  IdealFunction check = IdealFunction::zero(f.space());
  for (const auto& g : out.factors) check = IdealFunction::add(check, g);
  if (!(check == f)) fail(ErrorCode::Internal, "factorization does not recompose");
  return out;
}

BoundWitness bounded_witness(const DomainModel& model, const IdealFunction& f) {
  require_same_space(model.space(), f.space());
  if (!f.is_proper())
    fail(ErrorCode::InvalidFunction, "bounded witness needs a proper function");
  PointSet obstruction = f.support().set_intersect(crit_set_omega(model));
  if (!obstruction.is_empty())
    fail(ErrorCode::OmegaCriticalObstruction,
         "V(f) meets the omega-critical set at " + obstruction.min_point()->to_string(),
         obstruction.min_point()->to_string());

  std::vector<IdealFunction> cover =
      support_cover(model, f, ExtNat::infinity(), ErrorCode::OmegaCriticalObstruction);
  // L as the product of the cover pieces (pointwise sum), then the power t
  // with f <= t*L found by doubling + binary search.
  std::optional<IdealFunction> L;
  for (const auto& j : cover) {
    IdealFunction piece = IdealFunction::min_fn(f, j);
    L = L ? IdealFunction::add(*L, piece) : piece;
  }
  std::uint64_t hi = 1;
  while (!IdealFunction::pointwise_leq(f, L->scale(hi))) {
    hi *= 2;
    if (hi > (1ull << 40)) fail(ErrorCode::Internal, "bounded witness: power runaway");
  }
  std::uint64_t lo = hi / 2;
  while (lo + 1 < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (IdealFunction::pointwise_leq(f, L->scale(mid)))
      hi = mid;
    else
      lo = mid;
  }
  std::uint64_t t = hi;
  ExtNat b = L->scale(t).sup();
  if (b.is_infinite() || ExtNat(b) < f.sup())
    fail(ErrorCode::Internal, "bounded witness: certificate failed");
  return {b.value(), *L, t};
}

PointSet semicont_construction(const IdealFunction& f, std::uint64_t n) {
  // (n+1)*rad(f) - f, positive exactly on {p in supp f : f(p) <= n}.
  IdealFunction rad = f.radical();
  IdealFunction lhs = rad.scale(n + 1);
  PointSet supp = f.support();
  PointSet level = f.level_set(n + 1);
  PointSet xn = supp.set_difference(level);
  // Cross-validate through the construction when the subtraction is legal.
  if (IdealFunction::pointwise_leq(IdealFunction::min_fn(f, lhs), lhs)) {
    IdealFunction capped = IdealFunction::min_fn(f, lhs);
    IdealFunction g = IdealFunction::sub_exact(lhs, capped);
    if (!(g.support() == xn))
      fail(ErrorCode::Internal, "semicontinuity construction mismatch");
  }
  if (f.is_lsc() && !xn.is_closed())
    fail(ErrorCode::Internal, "X_n not closed for a semicontinuous function");
  return xn;
}

}  // namespace adklab
