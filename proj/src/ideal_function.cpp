#include "adklab/ideal_function.hpp"

#include <algorithm>

#include "adklab/errors.hpp"
#include "adklab/order_iso.hpp"

namespace adklab {

namespace {

// Number of points of the spectrum inside (lo, hi]; infinite when the
// ordinal difference is infinite. (In the discrete space hi may be w,
// denoting an unbounded tail of naturals.)
bool interval_point_count(const Ordinal& lo, const Ordinal& hi, std::uint64_t& count) {
  Ordinal d = Ordinal::left_sub(lo, hi);
  if (!d.is_finite()) return false;
  count = d.finite_value();
  return true;
}

std::uint64_t checked_value(std::int64_t v, const char* what) {
  if (v < 0) fail(ErrorCode::NegativeValue, std::string(what) + ": negative value");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

IdealFunction::IdealFunction(SpectrumSpace space, std::vector<Segment> segments,
                             std::map<Ordinal, std::uint64_t> overrides, bool fg)
    : space_(std::move(space)),
      segments_(std::move(segments)),
      overrides_(std::move(overrides)),
      fg_(fg) {
  normalize();
}

void IdealFunction::normalize() {
  if (segments_.empty())
    fail(ErrorCode::InvalidFunction, "function needs at least one segment");
  for (std::size_t i = 0; i + 1 < segments_.size(); ++i)
    if (!(segments_[i].upper < segments_[i + 1].upper))
      fail(ErrorCode::InvalidFunction, "segment uppers must increase");
  if (!(segments_.back().upper == space_.bound()))
    fail(ErrorCode::InvalidFunction, "segments must cover the space");

  Ordinal lo;  // exclusive lower of the current segment (0 => includes 0)
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const Segment& s = segments_[i];
    if (s.rule.kind == Rule::Kind::Linear) {
      if (!(s.upper <= Ordinal::omega()))
        fail(ErrorCode::InvalidFunction, "linear rule beyond the finite part");
      if (space_.is_compact() && s.upper == Ordinal::omega() &&
          !overrides_.count(Ordinal::omega()))
        fail(ErrorCode::InvalidFunction, "linear rule needs an override at w");
      // Value bounds: check both ends of the finite index range.
      std::uint64_t k0 = lo.is_finite() ? lo.finite_value() + 1 : 0;
      if (!lo.is_finite()) fail(ErrorCode::InvalidFunction, "linear segment below a limit");
      if (s.rule.eval_at(k0) < 0)
        fail(ErrorCode::NegativeValue, "linear rule negative at segment start");
      if (s.upper.is_finite()) {
        if (s.rule.eval_at(s.upper.finite_value()) < 0)
          fail(ErrorCode::NegativeValue, "linear rule negative at segment end");
      } else if (s.rule.slope < 0) {
        fail(ErrorCode::NegativeValue, "negative slope on an unbounded segment");
      }
    } else if (s.rule.offset < 0) {
      fail(ErrorCode::NegativeValue, "negative constant value");
    }
    lo = s.upper;
  }

  for (const auto& [p, v] : overrides_) {
    if (!space_.contains(p))
      fail(ErrorCode::InvalidFunction, "override outside space at " + p.to_string());
  }
  // Drop overrides that agree with the underlying rule.
  for (auto it = overrides_.begin(); it != overrides_.end();) {
    const Segment& s = segments_[segment_index(it->first)];
    bool redundant = false;
    if (s.rule.is_const()) {
      redundant = static_cast<std::int64_t>(it->second) == s.rule.offset;
    } else if (it->first.is_finite()) {
      redundant = s.rule.eval_at(it->first.finite_value()) ==
                  static_cast<std::int64_t>(it->second);
    }
    it = redundant ? overrides_.erase(it) : ++it;
  }
  // Merge adjacent segments with identical rules.
  std::vector<Segment> merged;
  for (auto& s : segments_) {
    if (!merged.empty() && merged.back().rule == s.rule)
      merged.back().upper = s.upper;
    else
      merged.push_back(s);
  }
  segments_ = std::move(merged);
}

std::size_t IdealFunction::segment_index(const Ordinal& p) const {
  // First segment whose upper is >= p.
  std::size_t lo = 0, hi = segments_.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (segments_[mid].upper < p)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo;
}

IdealFunction IdealFunction::constant(const SpectrumSpace& s, std::uint64_t c, bool fg) {
  return IdealFunction(s, {{s.bound(), Rule::constant(static_cast<std::int64_t>(c))}},
                       {}, fg);
}

IdealFunction IdealFunction::with_fg(bool fg) const {
  IdealFunction f = *this;
  f.fg_ = fg;
  return f;
}

std::uint64_t IdealFunction::eval(const Ordinal& p) const {
  space_.require_point(p);
  auto it = overrides_.find(p);
  if (it != overrides_.end()) return it->second;
  const Segment& s = segments_[segment_index(p)];
  if (s.rule.is_const()) return checked_value(s.rule.offset, "eval");
  if (!p.is_finite()) fail(ErrorCode::Internal, "linear rule hit a limit point");
  return checked_value(s.rule.eval_at(p.finite_value()), "eval");
}

bool IdealFunction::is_zero() const {
  for (const auto& s : segments_)
    if (!(s.rule == Rule::constant(0))) return false;
  for (const auto& [p, v] : overrides_)
    if (v != 0) return false;
  return true;
}

ExtNat IdealFunction::sup() const { return sup_over(PointSet::whole(space_)); }

ExtNat IdealFunction::sup_over(const PointSet& window) const {
  require_same_space(space_, window.space());
  ExtNat best = 0;
  bool any = false;
  auto consider = [&](ExtNat v) {
    best = any ? max(best, v) : v;
    any = true;
  };

  // Override contributions.
  for (const auto& [p, v] : overrides_)
    if (window.contains(p)) consider(ExtNat(v));

  // Rule contributions per segment x window slice piece, skipping pieces
  // fully eaten by overrides.
  Ordinal lo;
  bool first_segment = true;
  for (const auto& seg : segments_) {
    for (std::uint32_t j = 0; j < window.slices().size(); ++j) {
      Ordinal qlo = lo.div_pow_omega(j).quotient;
      Ordinal qhi = seg.upper.div_pow_omega(j).quotient;
      for (const auto& iv : window.slices()[j]) {
        Ordinal c = max(qlo, iv.lo);
        Ordinal d = min(qhi, iv.hi);
        if (!(c < d)) continue;
        std::uint64_t npts = 0;
        bool finite = interval_point_count(c, d, npts);
        if (finite && npts <= overrides_.size()) {
          // Small piece: walk the points, skipping overridden ones (their
          // values were already considered).
          Ordinal q = c;
          for (std::uint64_t t = 0; t < npts; ++t) {
            q = q.successor();
            Ordinal pt = Ordinal::omega_pow(j, 1) * q;
            if (overrides_.count(pt)) continue;
            if (seg.rule.is_const())
              consider(ExtNat(checked_value(seg.rule.offset, "sup")));
            else if (pt.is_finite())
              consider(ExtNat(checked_value(seg.rule.eval_at(pt.finite_value()), "sup")));
            else
              fail(ErrorCode::Internal, "linear rule at a non-overridden limit");
          }
          continue;
        }
        if (seg.rule.is_const()) {
          consider(ExtNat(checked_value(seg.rule.offset, "sup")));
        } else {
          // Linear rules live on finite indices (j == 0).
          if (j != 0) fail(ErrorCode::Internal, "linear rule on a limit slice");
          if (!finite) {
            if (seg.rule.slope > 0)
              consider(ExtNat::infinity());
            else
              consider(ExtNat(checked_value(seg.rule.offset, "sup")));
          } else {
            // Affine max sits at an endpoint; probe both, skipping overrides.
            Ordinal q = d;
            std::uint64_t steps = 0;
            while (q > c && steps <= overrides_.size()) {
              if (!overrides_.count(q)) {
                consider(ExtNat(checked_value(seg.rule.eval_at(q.finite_value()), "sup")));
                break;
              }
              q = *q.predecessor();
              ++steps;
            }
            q = c.successor();
            steps = 0;
            while (q <= d && steps <= overrides_.size()) {
              if (!overrides_.count(q)) {
                consider(ExtNat(checked_value(seg.rule.eval_at(q.finite_value()), "sup")));
                break;
              }
              q = q.successor();
              ++steps;
            }
          }
        }
      }
    }
    if (first_segment && window.has_zero() && !overrides_.count(Ordinal(0))) {
      // The bottom point 0 belongs to the first segment.
      if (seg.rule.is_const())
        consider(ExtNat(checked_value(seg.rule.offset, "sup")));
      else
        consider(ExtNat(checked_value(seg.rule.eval_at(0), "sup")));
    }
    first_segment = false;
    lo = seg.upper;
  }
  if (!any) return ExtNat(0);
  return best;
}

std::optional<Ordinal> IdealFunction::lsc_violation() const {
  if (space_.is_discrete()) return std::nullopt;
  // The left-liminf at a limit point is read off the rule of its own
  // segment: the approach region lies in the same segment and finitely many
  // overrides cannot affect a liminf.
  auto liminf_at = [&](const Ordinal& p) -> ExtNat {
    const Segment& s = segments_[segment_index(p)];
    if (s.rule.is_const()) return ExtNat(checked_value(s.rule.offset, "liminf"));
    // Linear segment: the only limit point it can own is w.
    if (s.rule.slope > 0) return ExtNat::infinity();
    return ExtNat(checked_value(s.rule.offset, "liminf"));
  };
  // Only overridden limit points can violate: elsewhere the value IS the
  // rule value, which equals the liminf.
  for (const auto& [p, v] : overrides_) {
    if (!space_.is_limit_point(p)) continue;
    if (ExtNat(v) > liminf_at(p)) return p;
  }
  // A linear segment owning the point w without an override is rejected at
  // construction, so rule-valued limit points are consistent by design.
  return std::nullopt;
}

PointSet IdealFunction::level_set(std::uint64_t j) const {
  PointSet out(space_);
  if (j == 0) return PointSet::whole(space_);
  std::int64_t lvl = static_cast<std::int64_t>(j);
  Ordinal lo;
  bool first = true;
  for (const auto& seg : segments_) {
    std::optional<Ordinal> plo = first ? std::nullopt : std::optional<Ordinal>(lo);
    if (seg.rule.is_const()) {
      if (seg.rule.offset >= lvl)
        out = out.set_union(PointSet::interval(space_, plo, seg.upper));
    } else {
      // slope*k + offset >= lvl on a sub-range of finite indices.
      std::int64_t a = seg.rule.slope, b = seg.rule.offset;
      std::int64_t k_lo = first ? 0 : static_cast<std::int64_t>(lo.finite_value()) + 1;
      if (a == 0) {
        if (b >= lvl)
          out = out.set_union(PointSet::interval(space_, plo, seg.upper));
      } else if (a > 0) {
        // k >= ceil((lvl - b) / a)
        std::int64_t num = lvl - b;
        std::int64_t k0 = num <= 0 ? k_lo : (num + a - 1) / a;
        k0 = std::max(k0, k_lo);
        Ordinal cut(static_cast<std::uint64_t>(std::max<std::int64_t>(k0 - 1, 0)));
        if (cut < seg.upper) {
          std::optional<Ordinal> l2 =
              (k0 == 0) ? std::nullopt : std::optional<Ordinal>(cut);
          if (k0 <= k_lo) l2 = plo;
          out = out.set_union(PointSet::interval(space_, l2, seg.upper));
        }
      } else {
        // decreasing: k <= floor((b - lvl) / (-a))
        std::int64_t kmax = (b - lvl) / (-a);
        if (b - lvl >= 0 && kmax >= k_lo) {
          Ordinal hi = min(seg.upper, Ordinal(static_cast<std::uint64_t>(kmax)));
          out = out.set_union(PointSet::interval(space_, plo, hi));
        }
      }
    }
    lo = seg.upper;
    first = false;
  }
  for (const auto& [p, v] : overrides_) {
    PointSet single = PointSet::singleton(space_, p);
    if (v >= j)
      out = out.set_union(single);
    else
      out = out.set_difference(single);
  }
  return out;
}

IdealFunction IdealFunction::indicator(const PointSet& support, bool fg) {
  const SpectrumSpace& sp = support.space();
  std::uint32_t mr = sp.max_rank();
  // Pieces with a full realizable mask become constant-1 segments; sparse or
  // co-sparse remainders become finitely many per-point overrides.
  std::vector<std::pair<Ordinal, Ordinal>> one_intervals;  // (lo, hi]
  std::map<Ordinal, std::uint64_t> overrides;
  bool zero_in = support.has_zero();
  std::size_t budget = 64;  // representable slack around the interval part

  for (const auto& a : support.atoms()) {
    std::uint64_t realizable = PointSet::realizable_mask(a.lo, a.hi, mr);
    if ((a.mask & realizable) == realizable) {
      one_intervals.emplace_back(a.lo, a.hi);
      continue;
    }
    std::uint64_t missing = realizable & ~a.mask;
    // Try co-finite first: full interval plus 0-overrides at missing points.
    PointSet miss(sp);
    PointSet atom_full = PointSet::interval(sp, a.lo, a.hi);
    PointSet atom_set = PointSet(sp);
    for (std::uint32_t jj = 0; jj <= mr; ++jj) {
      if (missing & (1ull << jj)) {
        PointSet band = PointSet::interval(sp, a.lo, a.hi, jj, jj);
        miss = miss.set_union(band);
      }
    }
    std::vector<Ordinal> pts;
    if (miss.finite_members(pts, budget)) {
      one_intervals.emplace_back(a.lo, a.hi);
      for (const auto& p : pts) overrides[p] = 0;
      continue;
    }
    // Otherwise the atom itself must be a finite scatter of points.
    PointSet present(sp);
    for (std::uint32_t jj = 0; jj <= mr; ++jj)
      if (a.mask & (1ull << jj))
        present = present.set_union(PointSet::interval(sp, a.lo, a.hi, jj, jj));
    if (present.finite_members(pts, budget)) {
      for (const auto& p : pts) overrides[p] = 1;
      continue;
    }
    fail(ErrorCode::UnsupportedShape,
         "indicator: set is not an interval union modulo finitely many points");
  }

  // Assemble the 0/1 segment partition.
  std::vector<Segment> segs;
  std::sort(one_intervals.begin(), one_intervals.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  Ordinal cur;
  bool zero_covered = false;
  for (const auto& [lo, hi] : one_intervals) {
    if (cur < lo) segs.push_back({lo, Rule::constant(0)});
    segs.push_back({hi, Rule::constant(1)});
    if (lo.is_zero()) zero_covered = true;
    cur = hi;
  }
  if (cur < sp.bound()) segs.push_back({sp.bound(), Rule::constant(0)});
  if (segs.empty()) segs.push_back({sp.bound(), Rule::constant(0)});
  // Point 0 rides on the first segment; fix it up via override when needed.
  bool first_is_one = !one_intervals.empty() && one_intervals.front().first.is_zero();
  bool zero_value = zero_in;
  (void)zero_covered;
  if (first_is_one != zero_value) overrides[Ordinal(0)] = zero_value ? 1 : 0;
  return IdealFunction(sp, std::move(segs), std::move(overrides), fg);
}

IdealFunction IdealFunction::radical() const { return indicator(support(), fg_); }

IdealFunction::Continuity IdealFunction::continuity() const {
  Continuity res;
  ExtNat s = sup();
  if (s.is_infinite()) {
    if (space_.is_discrete()) {
      res.continuous = true;  // discrete: every level set is clopen
      return res;
    }
    res.continuous = false;
    res.level = std::nullopt;  // unbounded on a compact space
    return res;
  }
  for (std::uint64_t j = 1; j <= s.value(); ++j) {
    PointSet ls = level_set(j);
    if (!ls.is_clopen()) {
      res.continuous = false;
      res.level = j;
      // Witness: a boundary point (in the closure of one side, outside it).
      PointSet cl = ls.closure();
      PointSet diff = cl.set_difference(ls);
      if (diff.is_empty())
        diff = ls.set_complement().closure().set_difference(ls.set_complement());
      res.witness = diff.min_point();
      return res;
    }
  }
  res.continuous = true;
  return res;
}

namespace {

// Shared refinement walk: calls visit(lo, hi, rule_f, rule_g, first) on each
// refined piece, where the piece is (lo, hi] (or [0, hi] when first).
template <typename Visit>
void refine_walk(const IdealFunction& f, const IdealFunction& g, Visit visit) {
  const auto& fs = f.segments();
  const auto& gs = g.segments();
  std::size_t i = 0, j = 0;
  Ordinal lo;
  bool first = true;
  while (i < fs.size() && j < gs.size()) {
    Ordinal hi = min(fs[i].upper, gs[j].upper);
    visit(lo, hi, fs[i].rule, gs[j].rule, first);
    if (fs[i].upper == hi) ++i;
    if (gs[j].upper == hi) ++j;
    lo = hi;
    first = false;
  }
}

// Least k > k_lo at which the sign of slope*k+offset of (a-b) flips, if the
// flip happens inside (k_lo, k_hi]. Affine differences are monotone, so
// there is at most one cut.
std::optional<std::int64_t> crossing_cut(const Rule& a, const Rule& b,
                                         std::int64_t k_lo,
                                         std::optional<std::int64_t> k_hi) {
  std::int64_t da = a.slope - b.slope;
  if (da == 0) return std::nullopt;
  std::int64_t db = a.offset - b.offset;
  auto nonneg = [&](std::int64_t k) { return da * k + db >= 0; };
  std::int64_t start = k_lo + 1;
  bool start_sign = nonneg(start);
  if (start_sign == (da > 0)) return std::nullopt;  // already at eventual sign
  std::int64_t hi_k =
      k_hi ? *k_hi
           : std::max<std::int64_t>(start + 2, std::llabs(db) / std::llabs(da) + 2);
  if (nonneg(hi_k) == start_sign) return std::nullopt;  // no flip inside
  std::int64_t lo_k = start;
  while (lo_k + 1 < hi_k) {
    std::int64_t mid = lo_k + (hi_k - lo_k) / 2;
    if (nonneg(mid) == start_sign)
      lo_k = mid;
    else
      hi_k = mid;
  }
  return lo_k;  // last index with the starting sign
}

}  // namespace

IdealFunction combine(const IdealFunction& f, const IdealFunction& g,
                      std::int64_t (*op)(std::int64_t, std::int64_t), bool needs_cross,
                      const char* what) {
  require_same_space(f.space(), g.space());
  std::vector<IdealFunction::Segment> segs;
  refine_walk(f, g, [&](const Ordinal& lo, const Ordinal& hi, const Rule& rf,
                        const Rule& rg, bool first) {
    if (rf.is_const() && rg.is_const()) {
      segs.push_back({hi, Rule::constant(op(rf.offset, rg.offset))});
      return;
    }
    // At least one linear rule: the piece lies in the finite part.
    std::int64_t k_lo = first ? -1 : static_cast<std::int64_t>(lo.finite_value());
    std::optional<std::int64_t> k_hi;
    if (hi.is_finite()) k_hi = static_cast<std::int64_t>(hi.finite_value());

    std::vector<std::pair<std::int64_t, Ordinal>> ranges;  // (start index, upper)
    std::optional<std::int64_t> cut;
    if (needs_cross) cut = crossing_cut(rf, rg, k_lo, k_hi);
    if (cut) {
      ranges.push_back({k_lo, Ordinal(static_cast<std::uint64_t>(*cut))});
      ranges.push_back({*cut, hi});
    } else {
      ranges.push_back({k_lo, hi});
    }
    for (auto& [rlo, up] : ranges) {
      Rule r;
      if (needs_cross) {
        // min/max: the comparison sign is constant on the range, so one side
        // wins; break value ties by slope so divergence picks the right side.
        std::uint64_t ks = static_cast<std::uint64_t>(std::max<std::int64_t>(rlo + 1, 0));
        auto key_f = std::make_pair(rf.eval_at(ks), rf.slope);
        auto key_g = std::make_pair(rg.eval_at(ks), rg.slope);
        bool min_op = op(0, 1) == 0;
        r = (min_op == (key_f <= key_g)) ? rf : rg;
      } else {
        r = Rule::linear(op(rf.slope, rg.slope), op(rf.offset, rg.offset));
      }
      if (r.kind == Rule::Kind::Linear && r.slope == 0) r = Rule::constant(r.offset);
      segs.push_back({up, r});
    }
  });
  // Overrides: recompute the op value at every overridden point.
  std::map<Ordinal, std::uint64_t> ov;
  for (const auto& [p, v] : f.overrides()) {
    std::int64_t val = op(static_cast<std::int64_t>(v), static_cast<std::int64_t>(g.eval(p)));
    ov[p] = checked_value(val, what);
  }
  for (const auto& [p, v] : g.overrides()) {
    if (ov.count(p)) continue;
    std::int64_t val = op(static_cast<std::int64_t>(f.eval(p)), static_cast<std::int64_t>(v));
    ov[p] = checked_value(val, what);
  }
  bool fg = f.fg() && g.fg();
  return IdealFunction(f.space(), std::move(segs), std::move(ov), fg);
}

IdealFunction IdealFunction::add(const IdealFunction& f, const IdealFunction& g) {
  return combine(f, g, [](std::int64_t a, std::int64_t b) { return a + b; }, false, "add");
}

IdealFunction IdealFunction::min_fn(const IdealFunction& f, const IdealFunction& g) {
  return combine(f, g, [](std::int64_t a, std::int64_t b) { return std::min(a, b); }, true,
                 "min_fn");
}

IdealFunction IdealFunction::max_fn(const IdealFunction& f, const IdealFunction& g) {
  return combine(f, g, [](std::int64_t a, std::int64_t b) { return std::max(a, b); }, true,
                 "max_fn");
}

IdealFunction IdealFunction::sub_exact(const IdealFunction& f, const IdealFunction& g) {
  if (!pointwise_leq(g, f))
    fail(ErrorCode::NegativeValue, "sub_exact: subtrahend exceeds minuend");
  return combine(f, g, [](std::int64_t a, std::int64_t b) { return a - b; }, false,
                 "sub_exact");
}

IdealFunction IdealFunction::scale(std::uint64_t n) const {
  IdealFunction out = *this;
  std::int64_t m = static_cast<std::int64_t>(n);
  for (auto& s : out.segments_) {
    s.rule.slope *= m;
    s.rule.offset *= m;
  }
  for (auto& [p, v] : out.overrides_) v *= n;
  out.normalize();
  return out;
}

bool IdealFunction::pointwise_leq(const IdealFunction& f, const IdealFunction& g) {
  require_same_space(f.space(), g.space());
  bool ok = true;
  refine_walk(f, g, [&](const Ordinal& lo, const Ordinal& hi, const Rule& rf,
                        const Rule& rg, bool first) {
    if (!ok) return;
    if (rf.is_const() && rg.is_const()) {
      ok = rf.offset <= rg.offset;
      return;
    }
    std::int64_t k0 = first ? 0 : static_cast<std::int64_t>(lo.finite_value()) + 1;
    if (rf.eval_at(static_cast<std::uint64_t>(k0)) > rg.eval_at(static_cast<std::uint64_t>(k0))) {
      ok = false;
      return;
    }
    if (hi.is_finite()) {
      std::int64_t k1 = static_cast<std::int64_t>(hi.finite_value());
      if (rf.eval_at(static_cast<std::uint64_t>(k1)) > rg.eval_at(static_cast<std::uint64_t>(k1)))
        ok = false;
    } else if (rf.slope > rg.slope) {
      ok = false;
    }
  });
  if (!ok) return false;
  for (const auto& [p, v] : f.overrides())
    if (v > g.eval(p)) return false;
  for (const auto& [p, v] : g.overrides())
    if (f.eval(p) > v) return false;
  return true;
}

bool IdealFunction::operator==(const IdealFunction& o) const {
  return space_ == o.space_ && segments_ == o.segments_ && overrides_ == o.overrides_;
}

std::string IdealFunction::to_string() const {
  std::string s = "{";
  Ordinal lo;
  bool first = true;
  for (const auto& seg : segments_) {
    if (!first) s += ", ";
    s += (first ? "[0," : "(" + lo.to_string() + ",") + seg.upper.to_string() + "]=>";
    if (seg.rule.is_const())
      s += std::to_string(seg.rule.offset);
    else
      s += std::to_string(seg.rule.slope) + "k+" + std::to_string(seg.rule.offset);
    lo = seg.upper;
    first = false;
  }
  for (const auto& [p, v] : overrides_)
    s += ", " + p.to_string() + "=>" + std::to_string(v);
  return s + "}";
}

IdealFunction restrict_function(const IdealFunction& f, const PointSet& window,
                                const OrderIso& iso) {
  require_same_space(f.space(), window.space());
  const SpectrumSpace& target = iso.target();

  // 1) Cut the window into runs on which f follows a single rule, in space
  //    order, each with its enumeration length.
  struct Run {
    Ordinal length;
    Rule rule;
  };
  std::vector<Run> runs;
  if (iso.zero_member()) runs.push_back({Ordinal(1), f.segments().front().rule});
  for (const auto& b : iso.blocks()) {
    Ordinal lo = b.atom.lo;
    for (const auto& seg : f.segments()) {
      if (!(lo < seg.upper)) continue;
      Ordinal hi = min(seg.upper, b.atom.hi);
      std::uint64_t mask =
          b.atom.mask & PointSet::realizable_mask(lo, hi, f.space().max_rank());
      if (mask != 0) {
        PointSet::Atom sub{lo, hi, mask};
        std::vector<PointSet::Piece> pcs;
        for (std::uint32_t j = 0; j <= window.space().max_rank(); ++j)
          if (mask & (1ull << j)) pcs.push_back({lo, hi, j, j});
        OrderIso sub_iso = order_type(PointSet::from_pieces(window.space(), pcs));
        Ordinal len;
        for (const auto& sb : sub_iso.blocks()) len = len + sb.length;
        runs.push_back({len, seg.rule});
      }
      lo = hi;
      if (!(lo < b.atom.hi)) break;
    }
  }

  // 2) Assemble segments over the index space. A run whose length is a limit
  //    ordinal has no last index; its segment swallows the following limit
  //    index, which is patched by an override (the Y-profile pattern).
  std::vector<IdealFunction::Segment> segs;
  std::map<Ordinal, std::uint64_t> ov;
  Ordinal cursor;  // first index of the current run
  bool stole_first = false;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    Ordinal len = runs[i].length;
    if (stole_first) {
      stole_first = false;
      if (len == Ordinal(1)) continue;  // fully consumed by the override
      len = Ordinal::left_sub(Ordinal(1), len);
    }
    Rule r = runs[i].rule;
    if (!r.is_const()) {
      if (!cursor.is_finite())
        fail(ErrorCode::UnsupportedShape, "restrict: linear rule past an infinite prefix");
      Ordinal p0 = iso.point_at(cursor);
      std::int64_t shift = static_cast<std::int64_t>(p0.finite_value()) -
                           static_cast<std::int64_t>(cursor.finite_value());
      r = Rule::linear(r.slope, r.offset + r.slope * shift);
    }
    Ordinal end = cursor + len;
    if (end.is_successor()) {
      segs.push_back({*end.predecessor(), r});
      cursor = end;
    } else {
      segs.push_back({end, r});
      if (i + 1 < runs.size()) {
        ov[end] = f.eval(iso.point_at(end));
        stole_first = true;
        cursor = end.successor();
      } else {
        cursor = end;  // discrete target: the bound is not a point
      }
    }
  }
  // 3) Relocate f's overrides that sit inside the window.
  for (const auto& [p, v] : f.overrides())
    if (window.contains(p)) ov[iso.index_of(p)] = v;

  if (segs.empty() || segs.back().upper < target.bound())
    segs.push_back({target.bound(), Rule::constant(0)});
  std::vector<IdealFunction::Segment> clean;
  for (auto& s : segs) {
    if (!clean.empty() && !(clean.back().upper < s.upper)) continue;
    clean.push_back(s);
  }
  return IdealFunction(target, std::move(clean), std::move(ov), f.fg());
}

}  // namespace adklab
