#include "adklab/domain_model.hpp"

#include <algorithm>
#include <set>

#include "adklab/errors.hpp"

namespace adklab {

DomainModel::DomainModel(std::string name, SpectrumSpace space,
                         std::vector<GeneratorSpec> generators)
    : name_(std::move(name)), space_(std::move(space)), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (const auto* f = std::get_if<IdealFunction>(&g))
      require_same_space(space_, f->space());
    else if (const auto* c = std::get_if<TailChain>(&g))
      require_same_space(space_, c->space());
    else
      require_same_space(space_, std::get<PointFamily>(g).space());
  }
}

namespace {

void check_instance(const SpectrumSpace& space, const IdealFunction& f,
                    const std::string& who, std::vector<Violation>& out) {
  if (auto bad = f.lsc_violation())
    out.push_back({"SemicontinuityViolation", *bad,
                   who + " is not lower semicontinuous at " + bad->to_string()});
  if (!f.is_proper())
    out.push_back({"ImproperGenerator", std::nullopt, who + " is identically zero"});
  PointSet supp = f.support();
  if (!supp.is_clopen())
    out.push_back({"SupportNotClopen", supp.min_point(),
                   who + " has a non-clopen support"});
  if (space.is_discrete()) {
    std::vector<Ordinal> pts;
    if (!supp.finite_members(pts, 4096))
      out.push_back({"NonCompactSupport", std::nullopt,
                     who + " has infinite support on a discrete spectrum"});
  }
}

}  // namespace

std::vector<Violation> DomainModel::validate() const {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    std::string who = "generator #" + std::to_string(i);
    if (const auto* f = std::get_if<IdealFunction>(&generators_[i])) {
      check_instance(space_, *f, who, out);
      if (!f->fg())
        out.push_back({"NotFinitelyGenerated", std::nullopt, who + " lacks the fg flag"});
    } else if (const auto* c = std::get_if<TailChain>(&generators_[i])) {
      if (auto bad = c->monotonicity_violation())
        out.push_back({"ChainNotDescending", bad->second,
                       who + " violates monotonicity at cut " + std::to_string(bad->first)});
      std::uint64_t probe = std::min<std::uint64_t>(c->crossing_bound() + 2, 64);
      for (std::uint64_t t = 0; t <= probe; ++t)
        check_instance(space_, c->instantiate(t), who + " (t=" + std::to_string(t) + ")", out);
    } else {
      const auto& fam = std::get<PointFamily>(generators_[i]);
      // Constructor enforces the shape; spot-check a few members.
      PointSet anchors = PointSet::interval(space_, std::nullopt, space_.bound(),
                                            fam.rank(), fam.rank());
      if (fam.region()) anchors = anchors.set_intersect(*fam.region());
      std::vector<Ordinal> pts;
      anchors.finite_members(pts, 4);
      for (const auto& q : pts)
        check_instance(space_, fam.member_at(q), who + " member", out);
    }
  }
  // Every isolated point must lie inside some generator's support.
  PointSet isolated = PointSet::interval(space_, std::nullopt, space_.bound(), 0, 0);
  PointSet uncovered = isolated.set_difference(covered_points());
  if (!uncovered.is_empty())
    out.push_back({"UncoveredPoint", uncovered.min_point(),
                   "no generator is positive at isolated point " +
                       uncovered.min_point()->to_string()});
  return out;
}

void DomainModel::require_valid() const {
  auto v = validate();
  if (!v.empty())
    fail(ErrorCode::InvalidModel, "model '" + name_ + "' invalid: " + v.front().code +
                                      " (" + v.front().message + ")");
}

PointSet DomainModel::covered_points() const {
  PointSet out(space_);
  for (const auto& g : generators_) {
    if (const auto* f = std::get_if<IdealFunction>(&g))
      out = out.set_union(f->support());
    else if (const auto* c = std::get_if<TailChain>(&g))
      out = out.set_union(c->instantiate(0).support());
    else
      out = out.set_union(std::get<PointFamily>(g).covered());
  }
  return out;
}

PositiveFamily DomainModel::generators_positive_at(const Ordinal& p) const {
  space_.require_point(p);
  PositiveFamily res;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (const auto* f = std::get_if<IdealFunction>(&generators_[i])) {
      if (f->eval(p) >= 1) res.singles.push_back(i);
    } else if (const auto* c = std::get_if<TailChain>(&generators_[i])) {
      auto pos = c->positivity_at(p);
      if (pos.kind == TailChain::Positivity::Kind::AllT)
        res.chains.push_back({i, true, 0});
      else if (pos.kind == TailChain::Positivity::Kind::Bounded)
        res.chains.push_back({i, false, pos.bound});
    } else {
      const auto& fam = std::get<PointFamily>(generators_[i]);
      if (auto q = fam.anchor_for(p)) {
        if (fam.member_at(*q).eval(p) >= 1) res.members.push_back({i, *q});
      }
    }
  }
  return res;
}

namespace {

// Structural boundaries that can change the positive-generator profile.
std::vector<Ordinal> profile_boundaries(const SpectrumSpace& space,
                                        const std::vector<GeneratorSpec>& gens) {
  std::vector<Ordinal> bounds;
  bounds.push_back(Ordinal(0));
  bounds.push_back(space.bound());
  auto add_function = [&](const IdealFunction& f) {
    Ordinal lo;
    bool first = true;
    for (const auto& s : f.segments()) {
      bounds.push_back(s.upper);
      // Positivity threshold of a linear rule inside its segment.
      if (!s.rule.is_const() && s.rule.slope != 0) {
        std::int64_t a = s.rule.slope, b = s.rule.offset;
        std::int64_t k = (a > 0) ? (1 - b + a - 1) / a : (b - 1) / (-a);
        if (k > 0) bounds.push_back(Ordinal(static_cast<std::uint64_t>(k)));
        if (k > 1) bounds.push_back(Ordinal(static_cast<std::uint64_t>(k - 1)));
      }
      lo = s.upper;
      first = false;
    }
    (void)lo;
    (void)first;
    for (const auto& [p, v] : f.overrides()) {
      bounds.push_back(p);
      if (auto pr = p.predecessor()) bounds.push_back(*pr);
    }
  };
  for (const auto& g : gens) {
    if (const auto* f = std::get_if<IdealFunction>(&g)) {
      add_function(*f);
    } else if (const auto* c = std::get_if<TailChain>(&g)) {
      add_function(c->instantiate(0));
      add_function(c->limit_function());
    } else {
      const auto& fam = std::get<PointFamily>(g);
      if (fam.region())
        for (const auto& a : fam.region()->atoms()) {
          bounds.push_back(a.lo);
          bounds.push_back(a.hi);
        }
    }
  }
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
  return bounds;
}

std::string signature_of(const PositiveFamily& fam) {
  std::string s = "s:";
  for (auto i : fam.singles) s += std::to_string(i) + ",";
  s += ";f:";
  for (const auto& [i, q] : fam.members) s += std::to_string(i) + ",";
  s += ";c:";
  for (const auto& c : fam.chains)
    s += std::to_string(c.chain_index) + (c.all_t ? "*" : "<") + ",";
  return s;
}

}  // namespace

std::vector<ProfileClass> DomainModel::profile_classes() const {
  std::vector<Ordinal> bounds = profile_boundaries(space_, generators_);
  // Per-rank atoms between consecutive boundaries.
  struct RawAtom {
    PointSet points;
    Ordinal rep;
    std::optional<Ordinal> rep2;
    std::string sig;
  };
  std::vector<RawAtom> atoms;

  auto push_atom = [&](PointSet pts) {
    if (pts.is_empty()) return;
    std::vector<Ordinal> sample;
    bool finite = pts.finite_members(sample, 2);
    RawAtom a{std::move(pts), Ordinal(0), std::nullopt, ""};
    if (finite && !sample.empty()) {
      a.rep = sample[0];
      if (sample.size() > 1) a.rep2 = sample[1];
    } else {
      a.rep = *a.points.min_point();
      // Second member: bump the quotient of the least point.
      std::uint32_t j = a.rep.rank();
      Ordinal q = a.rep.div_pow_omega(j).quotient.successor();
      Ordinal cand = Ordinal::omega_pow(j, 1) * q;
      if (a.points.contains(cand)) a.rep2 = cand;
    }
    a.sig = signature_of(generators_positive_at(a.rep));
    atoms.push_back(std::move(a));
  };

  if (space_.is_discrete()) {
    // Finite boundary structure over the naturals: atoms split at bounds.
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
      PointSet pts = PointSet::interval(space_, bounds[i], bounds[i + 1], 0, 0);
      push_atom(std::move(pts));
    }
    push_atom(PointSet::singleton(space_, Ordinal(0)));
  } else {
    push_atom(PointSet::singleton(space_, Ordinal(0)));
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
      for (std::uint32_t j = 0; j <= space_.max_rank(); ++j) {
        PointSet pts = PointSet::interval(space_, bounds[i], bounds[i + 1], j, j);
        push_atom(std::move(pts));
      }
    }
  }

  // Merge atoms with equal signatures into classes; keep space order. Finite
  // spaces keep singleton granularity (each point is its own class).
  bool split_fine = false;
  {
    std::vector<Ordinal> all;
    split_fine = PointSet::whole(space_).finite_members(all, 512);
  }
  std::vector<ProfileClass> classes;
  if (split_fine) {
    for (auto& a : atoms) {
      std::vector<Ordinal> pts;
      a.points.finite_members(pts);
      for (const auto& p : pts)
        classes.push_back({PointSet::singleton(space_, p), p, std::nullopt,
                           signature_of(generators_positive_at(p))});
    }
    std::sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) {
      return x.representative < y.representative;
    });
    return classes;
  }
  std::vector<std::pair<std::string, std::size_t>> seen;  // sig -> class idx
  std::sort(atoms.begin(), atoms.end(),
            [](const RawAtom& x, const RawAtom& y) { return x.rep < y.rep; });
  for (auto& a : atoms) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& kv) { return kv.first == a.sig; });
    if (it == seen.end()) {
      seen.push_back({a.sig, classes.size()});
      classes.push_back({a.points, a.rep, a.rep2, a.sig});
    } else {
      ProfileClass& c = classes[it->second];
      c.points = c.points.set_union(a.points);
      if (!c.second_representative && !(a.rep == c.representative))
        c.second_representative = a.rep;
    }
  }
  return classes;
}

}  // namespace adklab
