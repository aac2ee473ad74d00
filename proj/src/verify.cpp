#include "adklab/verify.hpp"

#include <algorithm>
#include <random>

#include "adklab/builtins.hpp"
#include "adklab/errors.hpp"
#include "adklab/factorization.hpp"
#include "adklab/inv_group.hpp"

namespace adklab {

namespace {

struct Suite {
  const DomainModel& model;
  const VerifyConfig& cfg;
  std::vector<TheoremCheck> out;
  std::mt19937_64 rng;

  // Shared computations.
  CritReport crit;
  std::vector<IdealFunction> instance_pool;
  std::vector<IdealFunction> samples;

  Suite(const DomainModel& m, const VerifyConfig& c)
      : model(m), cfg(c), rng(c.seed), crit(compute_crit_report(m, {c.max_n, 64})) {
    build_pool();
    build_samples();
  }

  void build_pool() {
    for (const auto& g : model.generators()) {
      if (const auto* f = std::get_if<IdealFunction>(&g)) {
        instance_pool.push_back(*f);
      } else if (const auto* c = std::get_if<TailChain>(&g)) {
        for (std::uint64_t t = 0; t <= 8; ++t) instance_pool.push_back(c->instantiate(t));
      } else {
        const auto& fam = std::get<PointFamily>(g);
        PointSet anchors = PointSet::interval(model.space(), std::nullopt,
                                              model.space().bound(), fam.rank(), fam.rank());
        if (fam.region()) anchors = anchors.set_intersect(*fam.region());
        Ordinal q = anchors.min_point() ? *anchors.min_point() : Ordinal(0);
        for (int i = 0; i < 6 && anchors.contains(q); ++i) {
          instance_pool.push_back(fam.member_at(q));
          std::uint32_t j = fam.rank();
          q = Ordinal::omega_pow(j, 1) * q.div_pow_omega(j).quotient.successor();
        }
      }
    }
  }

  void build_samples() {
    if (instance_pool.empty()) return;
    samples.push_back(instance_pool.front());
    for (std::size_t s = 0; s + 1 < cfg.samples; ++s) {
      std::size_t parts = 1 + rng() % 3;
      IdealFunction acc = instance_pool[rng() % instance_pool.size()];
      for (std::size_t i = 0; i < parts; ++i) {
        const IdealFunction& nxt = instance_pool[rng() % instance_pool.size()];
        acc = (rng() % 2) ? IdealFunction::add(acc, nxt) : IdealFunction::min_fn(acc, nxt);
      }
      if (acc.is_proper()) samples.push_back(std::move(acc));
    }
  }

  void report(std::string id, std::string statement, bool ok, std::string detail = {},
              bool contradiction_on_fail = true) {
    TheoremCheck c{std::move(id), std::move(statement),
                   ok ? TheoremCheck::Status::Pass : TheoremCheck::Status::Fail,
                   std::move(detail), false};
    if (!ok && contradiction_on_fail) c.model_contradiction = true;
    out.push_back(std::move(c));
  }
  void not_applicable(std::string id, std::string statement, std::string reason) {
    out.push_back({std::move(id), std::move(statement), TheoremCheck::Status::NotApplicable,
                   std::move(reason), false});
  }

  const PointSet& crit_n(std::uint64_t n) const {
    for (const auto& [k, s] : crit.crit)
      if (k == n) return s;
    fail(ErrorCode::Internal, "crit level not computed");
  }

  void critx_a() {
    // Crit^1 membership == no radical (0/1-valued) family element positive
    // at the point, probed by independent search over the instance pool.
    bool ok = true;
    std::string wit;
    for (const auto& p : truncation_points(model.space(), 48)) {
      bool has_radical = false;
      for (const auto& g : instance_pool) {
        if (g.eval(p) >= 1 && g.sup() <= ExtNat(1)) has_radical = true;
        if (has_radical) break;
      }
      // Pairwise sums (ideal sums = pointwise min) can only shrink sups.
      if (!has_radical)
        for (std::size_t i = 0; i < instance_pool.size() && !has_radical; ++i)
          for (std::size_t j = i; j < instance_pool.size() && !has_radical; ++j) {
            IdealFunction m = IdealFunction::min_fn(instance_pool[i], instance_pool[j]);
            if (m.eval(p) >= 1 && m.sup() <= ExtNat(1)) has_radical = true;
          }
      bool critical = crit_n(1).contains(p);
      if (critical == has_radical) {
        ok = false;
        wit = p.to_string();
        break;
      }
    }
    report("critx-a", "Crit^1 = {P : no radical fg element inside P}", ok, wit, false);
  }

  void critx_b() {
    bool ok = true;
    std::string wit;
    for (std::uint64_t n = 1; n < cfg.max_n; ++n) {
      const PointSet& a = crit_n(n + 1);
      const PointSet& b = crit_n(n);
      if (!a.set_difference(b).is_empty() || !b.is_closed()) {
        ok = false;
        wit = "n=" + std::to_string(n);
        break;
      }
    }
    report("critx-b", "Crit^{n+1} subset of Crit^n, each closed", ok, wit, false);
  }

  void critx_c() {
    PointSet inter = PointSet::whole(model.space());
    for (const auto& [k, s] : crit.crit) {
      (void)k;
      inter = inter.set_intersect(s);
    }
    bool ok = crit.crit_omega.is_closed();
    if (crit.stable_from <= cfg.max_n)
      ok = ok && crit.crit_omega == inter;
    else
      ok = ok && crit.crit_omega.set_difference(inter).is_empty();
    report("critx-c", "Crit^omega = intersection of the Crit^n, closed", ok, "", false);
  }

  void idbounded() {
    bool ok = true;
    std::string wit;
    for (const auto& f : samples) {
      bool off_crit = f.support().set_intersect(crit.crit_omega).is_empty();
      bool bounded = f.sup().is_finite();
      if (off_crit != bounded) {
        ok = false;
        wit = f.to_string();
        break;
      }
    }
    report("idbounded", "V(I) misses Crit^omega <=> nu_I bounded (fg case)", ok, wit);
  }

  void nfact() {
    bool ok = true;
    std::string wit;
    std::uint64_t n = 2;
    for (const auto& f : samples) {
      bool off_crit = f.support().set_intersect(crit_n(n)).is_empty();
      bool factors = true;
      try {
        auto fz = n_bounded_factorization(model, f, n);
        for (const auto& g : fz.factors)
          if (g.sup() > ExtNat(n)) factors = false;
      } catch (const AdkError& e) {
        if (e.code() != ErrorCode::CriticalObstruction) throw;
        factors = false;
      }
      if (off_crit != factors) {
        ok = false;
        wit = f.to_string();
        break;
      }
    }
    report("nfact", "V(I) misses Crit^n <=> I is a product of n-bounded fg ideals", ok, wit);
  }

  void sp_bounded() {
    if (!crit.crit_omega.is_empty()) {
      Ordinal p = *crit.crit_omega.min_point();
      auto ms = bounded_sup_at(model, p);
      report("sp-bounded",
             "Crit^omega empty <=> every fg proper ideal bounded",
             ms.value.is_infinite(), p.to_string());
      return;
    }
    bool ok = true;
    std::string wit;
    for (const auto& f : samples) {
      try {
        bounded_witness(model, f);
      } catch (const AdkError&) {
        ok = false;
        wit = f.to_string();
        break;
      }
    }
    report("sp-bounded", "Crit^omega empty <=> every fg proper ideal bounded", ok, wit);
  }

  void nsp_bounded() {
    std::uint64_t n = std::max<std::uint64_t>(crit.stable_from, 1);
    if (!crit_within(n).is_empty()) {
      not_applicable("nsp-bounded", "Crit^n empty => every fg ideal factors n-bounded",
                     "Crit^" + std::to_string(n) + " nonempty");
      return;
    }
    bool ok = true;
    std::string wit;
    for (const auto& f : samples) {
      try {
        auto fz = n_bounded_factorization(model, f, n);
        IdealFunction acc = IdealFunction::zero(model.space());
        for (const auto& g : fz.factors) {
          if (g.sup() > ExtNat(n)) ok = false;
          acc = IdealFunction::add(acc, g);
        }
        if (!(acc == f)) ok = false;
      } catch (const AdkError&) {
        ok = false;
      }
      if (!ok) {
        wit = f.to_string();
        break;
      }
    }
    report("nsp-bounded", "Crit^n empty => every fg ideal factors n-bounded", ok, wit);
  }

  PointSet crit_within(std::uint64_t n) {
    if (n <= cfg.max_n) return crit_n(n);
    return crit.crit_omega;  // stabilized past the table
  }

  void inscrit_full() {
    PointSet whole = PointSet::whole(model.space());
    bool full1 = crit_n(1) == whole;
    bool fulln_any = false, fulln_all = true;
    for (const auto& [k, s] : crit.crit) {
      (void)k;
      fulln_any = fulln_any || s == whole;
      fulln_all = fulln_all && s == whole;
    }
    bool fullo = crit.crit_omega == whole;
    bool ok = (full1 == fulln_any) && (fulln_any == fulln_all) && (fulln_all == fullo);
    report("inscrit-full",
           "Crit = Max <=> Crit^n = Max (any n) <=> Crit^omega = Max <=> no fg bounded",
           ok, "", false);
  }

  void semicont() {
    bool ok = true;
    std::string wit;
    for (const auto& f : samples) {
      if (auto bad = f.lsc_violation()) {
        ok = false;
        wit = bad->to_string();
        break;
      }
      ExtNat s = f.sup();
      std::uint64_t top = s.is_finite() ? std::min<std::uint64_t>(s.value(), 4) : 4;
      for (std::uint64_t n = 0; n <= top; ++n) {
        PointSet xn = semicont_construction(f, n);
        if (!xn.is_closed()) {
          ok = false;
          wit = f.to_string();
          break;
        }
      }
      if (!ok) break;
    }
    report("semicont", "nu_I lower semicontinuous; {nu <= n} closed inside V(I)", ok, wit);
  }

  void lemma_dense() {
    if (!(crit_n(1) == PointSet::whole(model.space()))) {
      not_applicable("lemma-dense",
                     "anti-SP with Jac != 0 => Y_n = {nu_I > n} dense for I in Jac",
                     "model is not anti-SP (see exist-noncrit)");
      return;
    }
    if (!model.jacobson_nonzero()) {
      not_applicable("lemma-dense",
                     "anti-SP with Jac != 0 => Y_n = {nu_I > n} dense for I in Jac",
                     "Jacobson radical is zero");
      return;
    }
    // Anti-SP data cannot come from a domain; still report the diagnostics.
    bool ok = true;
    for (const auto& f : samples) {
      if (!(f.support() == PointSet::whole(model.space()))) continue;
      for (const auto& d : unbounded_level_diagnostics(model, f, 4))
        if (!d.open || !d.dense) ok = false;
      break;
    }
    report("lemma-dense", "anti-SP with Jac != 0 => Y_n dense", ok, "");
  }

  void exist_noncrit() {
    report("exist-noncrit", "the noncritical set is nonempty",
           !crit.noncritical.is_empty(), "");
  }

  void dense_theorem() {
    report("dense", "the noncritical set is dense in Max", crit.noncritical_dense, "");
  }

  void sp_scat() {
    try {
      ChainReport chain = compute_crit_chain(model, {cfg.max_n, 64});
      report("sp-scat", "the crit chain reaches the empty set",
             chain.scattered() && !chain.model_contradiction,
             chain.model_contradiction ? chain.contradiction_note : "");
    } catch (const AdkError& e) {
      report("sp-scat", "the crit chain reaches the empty set", false, e.what());
    }
  }

  void compl_unbound() {
    bool applicable = true;
    std::string why;
    if (model.space().is_discrete()) {
      std::vector<Ordinal> pts;
      if (!crit.crit_omega.is_empty() && !crit.crit_omega.finite_members(pts, 512)) {
        applicable = false;
        why = "omega-restricted overring has zero Jacobson radical";
      }
    }
    if (!applicable) {
      not_applicable("compl-unbound-jac",
                     "Jac(T_1^omega) != 0 => some principal element is bounded", why);
    } else {
      auto w = completely_unbounded_check(model);
      report("compl-unbound-jac",
             "Jac(T_1^omega) != 0 => some principal element is bounded",
             w.status == BoundednessWitness::Status::Witness, w.note);
    }
    if (!model.jacobson_nonzero()) {
      not_applicable("jac-complunbounded", "Jac(D) != 0 => D is not completely unbounded",
                     "Jacobson radical is zero (non-compact spectrum)");
    } else {
      auto w = completely_unbounded_check(model);
      report("jac-complunbounded", "Jac(D) != 0 => D is not completely unbounded",
             w.status == BoundednessWitness::Status::Witness, w.note);
    }
  }

  void freekernel() {
    bool ok = true;
    std::string wit;
    std::size_t checked = 0;
    for (std::size_t i = 0; i + 1 < samples.size() && checked < 8; i += 2, ++checked) {
      GroupElement g{FractionalFunction(samples[i], samples[i + 1]), "sample"};
      auto cert = kernel_membership(model, g, std::nullopt);
      bool disjoint = g.value.support().set_intersect(crit.crit_omega).is_empty();
      if (cert.in_kernel != disjoint) {
        ok = false;
        wit = "support/kernel mismatch";
        break;
      }
      if (cert.in_kernel &&
          (!cert.num_bound.has_value() || !cert.den_bound.has_value())) {
        ok = false;
        wit = "kernel member without bound certificates";
        break;
      }
      // Monotone consistency: kernel at a finite level forces kernel at omega.
      auto lvl = kernel_membership(model, g, 1);
      if (lvl.in_kernel && !cert.in_kernel) {
        ok = false;
        wit = "kernel at level 1 but not at omega";
        break;
      }
    }
    report("freekernel", "ker(Psi) = {g : supp g misses Crit} with bounded halves", ok, wit);
  }

  void invfree() {
    try {
      ChainReport chain = compute_crit_chain(model, {cfg.max_n, 64});
      if (chain.model_contradiction) {
        report("invfree", "layer decomposition along the chain reassembles elements",
               false, chain.contradiction_note);
        return;
      }
      bool ok = true;
      std::string wit;
      // Layers partition the space.
      PointSet acc(model.space());
      for (const auto& [a, layer] : chain.height_layers) {
        (void)a;
        if (!acc.set_intersect(layer).is_empty()) ok = false;
        acc = acc.set_union(layer);
      }
      if (!(acc == PointSet::whole(model.space()))) ok = false;
      if (!ok) wit = "layers do not partition Max";
      // Reconstruction on sampled elements and points.
      if (ok && samples.size() >= 2) {
        GroupElement g{FractionalFunction(samples[0], samples[1]), "sample"};
        ComponentProfile prof = component_profile(model, g);
        for (const auto& p : truncation_points(model.space(), 64)) {
          if (prof.eval_through_layers(g, p) != g.value.eval(p)) {
            ok = false;
            wit = "reconstruction differs at " + p.to_string();
            break;
          }
        }
      }
      report("invfree", "layer decomposition along the chain reassembles elements", ok, wit);
    } catch (const AdkError& e) {
      report("invfree", "layer decomposition along the chain reassembles elements", false,
             e.what());
    }
  }
};

}  // namespace

std::vector<TheoremCheck> run_suite(const DomainModel& model, const VerifyConfig& cfg) {
  model.require_valid();
  Suite s(model, cfg);
  s.critx_a();
  s.critx_b();
  s.critx_c();
  s.idbounded();
  s.nfact();
  s.sp_bounded();
  s.nsp_bounded();
  s.inscrit_full();
  s.semicont();
  s.lemma_dense();
  s.exist_noncrit();
  s.compl_unbound();
  s.sp_scat();
  s.dense_theorem();
  s.freekernel();
  s.invfree();
  std::sort(s.out.begin(), s.out.end(),
            [](const TheoremCheck& a, const TheoremCheck& b) { return a.id < b.id; });
  return s.out;
}

bool all_green(const std::vector<TheoremCheck>& checks) {
  for (const auto& c : checks)
    if (c.status == TheoremCheck::Status::Fail) return false;
  return true;
}

}  // namespace adklab
