#include "adklab/criticality.hpp"

#include <algorithm>

#include "adklab/errors.hpp"
#include "adklab/order_iso.hpp"

namespace adklab {

namespace {

// Evaluation cut for the chains involved: beyond it every affine comparison
// between the moving template structure and the fixed functions has settled,
// so the monotone quantity sup(min(...)) is constant.
std::uint64_t settle_cut(const DomainModel& model, const Ordinal& p) {
  std::uint64_t acc = 4;
  for (const auto& t : p.terms()) acc += t.coeff;
  auto add_fn = [&acc](const IdealFunction& f) {
    for (const auto& s : f.segments()) {
      for (const auto& t : s.upper.terms()) acc += t.coeff;
      acc += static_cast<std::uint64_t>(std::llabs(s.rule.slope)) +
             static_cast<std::uint64_t>(std::llabs(s.rule.offset));
    }
    for (const auto& [q, v] : f.overrides()) {
      for (const auto& t : q.terms()) acc += t.coeff;
      acc += v;
    }
  };
  for (const auto& g : model.generators()) {
    if (const auto* f = std::get_if<IdealFunction>(&g)) {
      add_fn(*f);
    } else if (const auto* c = std::get_if<TailChain>(&g)) {
      acc += c->crossing_bound();
    } else {
      const auto& fam = std::get<PointFamily>(g);
      acc += fam.plateau() + fam.peak() + 2;
    }
  }
  return acc;
}

// min over the full positive family at p, with every unbounded chain cut at
// t (bounded chains sit at their own largest admissible cut).
std::optional<IdealFunction> family_min_at(const DomainModel& model, const Ordinal& p,
                                           const PositiveFamily& fam, std::uint64_t t) {
  std::optional<IdealFunction> acc;
  auto push = [&](const IdealFunction& f) {
    acc = acc ? IdealFunction::min_fn(*acc, f) : f;
  };
  for (auto i : fam.singles) push(std::get<IdealFunction>(model.generators()[i]));
  for (const auto& [i, q] : fam.members)
    push(std::get<PointFamily>(model.generators()[i]).member_at(q));
  for (const auto& c : fam.chains) {
    const auto& chain = std::get<TailChain>(model.generators()[c.chain_index]);
    std::uint64_t cut = c.all_t ? t : std::min(c.bound, t);
    push(chain.instantiate(cut));
  }
  (void)p;
  return acc;
}

BoundedSup bounded_sup_impl(const DomainModel& model, const Ordinal& p,
                            const PointSet& window) {
  model.space().require_point(p);
  PositiveFamily fam = model.generators_positive_at(p);
  BoundedSup res{ExtNat::infinity(), std::nullopt};
  if (fam.empty()) return res;  // nothing is positive at p: omega-critical

  std::uint64_t cut = settle_cut(model, p);
  auto h = [&](std::uint64_t t) {
    IdealFunction f = *family_min_at(model, p, fam, t);
    return std::make_pair(f.sup_over(window), std::move(f));
  };
  auto [v1, f1] = h(cut);
  auto [v2, f2] = h(cut + 1);
  if (!(v1 == v2))
    fail(ErrorCode::Internal,
         "bounded_sup: affine settling failed at " + p.to_string());
  res.value = v1;
  res.certificate = std::move(f1);
  return res;
}

}  // namespace

BoundedSup bounded_sup_at(const DomainModel& model, const Ordinal& p) {
  return bounded_sup_impl(model, p, PointSet::whole(model.space()));
}

BoundedSup bounded_sup_at(const DomainModel& model, const Ordinal& p,
                          const PointSet& window) {
  return bounded_sup_impl(model, p, window);
}

namespace {

struct StageClass {
  PointSet points;
  ExtNat m;
};

// Per-class m values over a restricted window. Classes are the profile
// classes refined by the window; the representative pair guards the
// class-constancy assumption.
std::vector<StageClass> stage_values(const DomainModel& model,
                                     const std::vector<ProfileClass>& classes,
                                     const PointSet& window) {
  std::vector<StageClass> out;
  for (const auto& cls : classes) {
    PointSet pts = cls.points.set_intersect(window);
    if (pts.is_empty()) continue;
    Ordinal rep = cls.points == pts && window.contains(cls.representative)
                      ? cls.representative
                      : *pts.min_point();
    ExtNat m = bounded_sup_impl(model, rep, window).value;
    // Guard with a second sample when available.
    std::optional<Ordinal> second;
    if (cls.second_representative && pts.contains(*cls.second_representative) &&
        !(*cls.second_representative == rep))
      second = cls.second_representative;
    else {
      std::uint32_t j = rep.rank();
      Ordinal cand = Ordinal::omega_pow(j, 1) *
                     rep.div_pow_omega(j).quotient.successor();
      if (pts.contains(cand)) second = cand;
    }
    if (second) {
      ExtNat m2 = bounded_sup_impl(model, *second, window).value;
      if (!(m2 == m))
        fail(ErrorCode::Internal, "profile class is not m-constant near " +
                                      rep.to_string());
    }
    out.push_back({std::move(pts), m});
  }
  return out;
}

PointSet collect(const SpectrumSpace& s, const std::vector<StageClass>& vals,
                 const ExtNat& threshold, bool omega) {
  PointSet out(s);
  for (const auto& v : vals) {
    bool in = omega ? v.m.is_infinite() : v.m > threshold;
    if (in) out = out.set_union(v.points);
  }
  return out;
}

}  // namespace

PointSet crit_set(const DomainModel& model, std::uint64_t n) {
  auto vals = stage_values(model, model.profile_classes(), PointSet::whole(model.space()));
  PointSet out = collect(model.space(), vals, ExtNat(n), false);
  if (!out.is_closed())
    fail(ErrorCode::Internal, "crit set not closed");  // Prop violated => bug
  return out;
}

PointSet crit_set_omega(const DomainModel& model) {
  auto vals = stage_values(model, model.profile_classes(), PointSet::whole(model.space()));
  PointSet out = collect(model.space(), vals, ExtNat(0), true);
  if (!out.is_closed()) fail(ErrorCode::Internal, "crit^omega set not closed");
  return out;
}

CritReport compute_crit_report(const DomainModel& model, const CritConfig& cfg) {
  CritReport rep(model.space());
  auto classes = model.profile_classes();
  auto vals = stage_values(model, classes, PointSet::whole(model.space()));
  // Over the whole space no class is skipped, so the lists zip.
  for (std::size_t i = 0; i < vals.size(); ++i)
    rep.m_values.push_back({classes[i], vals[i].m});
  std::uint64_t stable = 0;
  for (const auto& v : vals)
    if (v.m.is_finite()) stable = std::max(stable, v.m.value());
  rep.stable_from = stable;
  for (std::uint64_t n = 1; n <= cfg.max_n; ++n)
    rep.crit.push_back({n, collect(model.space(), vals, ExtNat(n), false)});
  rep.crit_omega = collect(model.space(), vals, ExtNat(0), true);
  rep.noncritical = rep.crit.empty()
                        ? PointSet::whole(model.space())
                        : rep.crit.front().second.set_complement();
  rep.noncritical_dense = rep.noncritical.is_dense();
  return rep;
}

ChainReport compute_crit_chain(const DomainModel& model, const CritConfig& cfg) {
  ChainReport rep;
  auto classes = model.profile_classes();
  PointSet current = PointSet::whole(model.space());
  Ordinal alpha;

  auto stage_id = [&](const Ordinal& a) {
    return model.name() + "#T" + a.to_string();
  };
  auto push_stage = [&](const Ordinal& a, const PointSet& s) {
    ChainStage st{a, s, stage_id(a), std::nullopt};
    if (!s.is_empty() && s.is_closed()) {
      OrderIso iso = order_type(s);
      if (iso.target().is_compact()) st.restricted_top = iso.target().bound();
      // An unbounded discrete stage restricts to the discrete space again.
    }
    rep.stages.push_back(std::move(st));
  };

  push_stage(alpha, current);
  for (std::uint64_t step = 0; step < cfg.chain_stage_cap; ++step) {
    auto vals = stage_values(model, classes, current);
    PointSet next = collect(model.space(), vals, ExtNat(1), false);
    alpha = alpha.successor();
    if (next == current) {
      // Stabilized without shrinking: nonempty means the model contradicts
      // SP-scatteredness and cannot come from an almost Dedekind domain.
      rep.sp_rank_stabilization = Ordinal::left_sub(Ordinal(1), alpha);
      if (!next.is_empty()) {
        rep.model_contradiction = true;
        rep.contradiction_point = next.min_point();
        BoundedSup ce = bounded_sup_impl(model, *rep.contradiction_point, current);
        rep.contradiction_note =
            "stable nonempty critical set; every family element positive at " +
            rep.contradiction_point->to_string() + " keeps restricted sup " +
            ce.value.to_string() + " > 1";
      } else {
        rep.sp_rank_emptiness = rep.sp_rank_stabilization;
        for (std::size_t i = 0; i + 1 < rep.stages.size(); ++i)
          rep.height_layers.push_back(
              {rep.stages[i].alpha,
               rep.stages[i].set.set_difference(rep.stages[i + 1].set)});
      }
      return rep;
    }
    push_stage(alpha, next);
    if (next.is_empty()) {
      rep.sp_rank_stabilization = alpha;
      rep.sp_rank_emptiness = alpha;
      for (std::size_t i = 0; i + 1 < rep.stages.size(); ++i)
        rep.height_layers.push_back(
            {rep.stages[i].alpha,
             rep.stages[i].set.set_difference(rep.stages[i + 1].set)});
      return rep;
    }
    current = std::move(next);
  }
  fail(ErrorCode::UnsupportedShape,
       "crit chain did not stabilize within " + std::to_string(cfg.chain_stage_cap) +
           " successor stages");
}

Ordinal sp_height(const DomainModel& model, const Ordinal& p, const CritConfig& cfg) {
  ChainReport rep = compute_crit_chain(model, cfg);
  if (rep.model_contradiction)
    fail(ErrorCode::UnsupportedShape, "sp_height undefined: chain does not empty");
  Ordinal h;
  for (const auto& st : rep.stages)
    if (st.set.contains(p)) h = st.alpha;
  return h;
}

NoncriticalDensity noncritical_density(const DomainModel& model) {
  NoncriticalDensity res{crit_set(model, 1).set_complement(), false};
  res.dense = res.noncritical.is_dense();
  return res;
}

std::vector<LevelDiagnostic> unbounded_level_diagnostics(const DomainModel& model,
                                                         const IdealFunction& f,
                                                         std::uint64_t max_n) {
  require_same_space(model.space(), f.space());
  std::vector<LevelDiagnostic> out;
  for (std::uint64_t n = 0; n <= max_n; ++n) {
    LevelDiagnostic d{n, f.level_set(n + 1), false, false};
    d.open = d.level.is_open();
    d.dense = d.level.is_dense();
    out.push_back(std::move(d));
  }
  return out;
}

BoundednessWitness completely_unbounded_check(const DomainModel& model) {
  PointSet comega = crit_set_omega(model);
  if (model.space().is_discrete() && !comega.is_empty()) {
    std::vector<Ordinal> pts;
    if (!comega.finite_members(pts, 1024))
      return {BoundednessWitness::Status::NotApplicable, std::nullopt, std::nullopt,
              "omega-restricted overring has zero Jacobson radical"};
  }
  if (comega == PointSet::whole(model.space()))
    return {BoundednessWitness::Status::NoneFound, std::nullopt, std::nullopt,
            "every maximal ideal is bounded-critical (not realizable by a domain)"};

  // Hunt a family element supported away from Crit^omega; its ideal function
  // is then bounded. Singles first, then family members, then chain cuts,
  // then pairwise sums (min) to shrink supports.
  std::vector<IdealFunction> pool;
  for (const auto& g : model.generators()) {
    if (const auto* f = std::get_if<IdealFunction>(&g)) {
      pool.push_back(*f);
    } else if (const auto* famp = std::get_if<PointFamily>(&g)) {
      PointSet anchors = PointSet::interval(model.space(), std::nullopt,
                                            model.space().bound(), famp->rank(),
                                            famp->rank());
      if (famp->region()) anchors = anchors.set_intersect(*famp->region());
      std::vector<Ordinal> qs;
      anchors.finite_members(qs, 32);
      if (qs.empty()) {
        // infinite anchor supply: take the first few
        Ordinal q = *anchors.min_point();
        for (int i = 0; i < 4 && anchors.contains(q); ++i) {
          qs.push_back(q);
          q = Ordinal::omega_pow(famp->rank(), 1) *
              q.div_pow_omega(famp->rank()).quotient.successor();
        }
      }
      for (const auto& q : qs) pool.push_back(famp->member_at(q));
    } else {
      const auto& c = std::get<TailChain>(g);
      for (std::uint64_t t = 0; t <= 4; ++t) pool.push_back(c.instantiate(t));
    }
  }
  auto try_elem = [&](const IdealFunction& g) -> std::optional<BoundednessWitness> {
    if (!g.is_proper()) return std::nullopt;
    if (!g.support().set_intersect(comega).is_empty()) return std::nullopt;
    ExtNat s = g.sup();
    if (s.is_infinite()) return std::nullopt;  // cannot happen off Crit^omega
    return BoundednessWitness{BoundednessWitness::Status::Witness, g, s.value(), ""};
  };
  for (const auto& g : pool)
    if (auto w = try_elem(g)) return *w;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      if (auto w = try_elem(IdealFunction::min_fn(pool[i], pool[j]))) return *w;
  return {BoundednessWitness::Status::NoneFound, std::nullopt, std::nullopt,
          "no bounded element found in the search pool"};
}

}  // namespace adklab
