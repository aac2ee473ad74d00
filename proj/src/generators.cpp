#include "adklab/generators.hpp"

#include <algorithm>

#include "adklab/errors.hpp"

namespace adklab {

TailChain::TailChain(SpectrumSpace space, std::vector<Segment> segments,
                     std::map<Ordinal, std::uint64_t> limit_overrides)
    : space_(std::move(space)),
      segments_(std::move(segments)),
      limit_overrides_(std::move(limit_overrides)) {
  if (segments_.empty())
    fail(ErrorCode::InvalidModel, "chain template needs segments");
  if (segments_.back().upper.moving)
    fail(ErrorCode::InvalidModel, "chain template must end at a fixed upper");
  if (!(segments_.back().upper.fixed == space_.bound()))
    fail(ErrorCode::InvalidModel, "chain template must cover the space");
  // Moving breakpoints must share one scale and form one contiguous stretch.
  std::optional<std::uint32_t> scale;
  bool seen_moving = false, closed_moving = false;
  for (const auto& s : segments_) {
    if (s.upper.moving) {
      if (closed_moving)
        fail(ErrorCode::InvalidModel, "moving breakpoints must be contiguous");
      if (scale && *scale != s.upper.scale_exp)
        fail(ErrorCode::InvalidModel, "moving breakpoints must share a scale");
      if (s.upper.t_coeff == 0)
        fail(ErrorCode::InvalidModel, "moving breakpoint needs a positive t coefficient");
      scale = s.upper.scale_exp;
      seen_moving = true;
    } else if (seen_moving) {
      closed_moving = true;
    }
  }
  for (const auto& [p, v] : limit_overrides_) {
    if (!space_.is_limit_point(p))
      fail(ErrorCode::InvalidModel,
           "chain override at non-limit point " + p.to_string());
  }
  // Sanity: a few instances must build as valid functions.
  instantiate(0);
  instantiate(crossing_bound());
}

IdealFunction TailChain::instantiate(std::uint64_t t) const {
  std::vector<IdealFunction::Segment> segs;
  for (const auto& s : segments_) {
    Ordinal up = s.upper.value(t);
    if (!segs.empty() && !(segs.back().upper < up)) continue;  // collapsed
    segs.push_back({up, s.rule});
  }
  std::map<Ordinal, std::uint64_t> ov(limit_overrides_.begin(), limit_overrides_.end());
  return IdealFunction(space_, std::move(segs), std::move(ov), true);
}

IdealFunction TailChain::limit_function() const {
  // Fixed prefix stays; the first moving segment's rule sweeps everything the
  // moving block ever reaches; fixed suffix stays.
  std::vector<IdealFunction::Segment> segs;
  std::map<Ordinal, std::uint64_t> ov(limit_overrides_.begin(), limit_overrides_.end());

  std::size_t first_moving = segments_.size();
  for (std::size_t i = 0; i < segments_.size(); ++i)
    if (segments_[i].upper.moving) {
      first_moving = i;
      break;
    }
  if (first_moving == segments_.size()) return instantiate(0);  // static template

  for (std::size_t i = 0; i < first_moving; ++i)
    segs.push_back({segments_[i].upper.fixed, segments_[i].rule});

  std::uint32_t scale = segments_[first_moving].upper.scale_exp;
  Ordinal swept = Ordinal::omega_pow(scale + 1, 1);
  // First fixed upper after the moving stretch (the template ends fixed).
  std::size_t after = first_moving;
  while (after < segments_.size() && segments_[after].upper.moving) ++after;
  const Ordinal& cap = segments_[after].upper.fixed;
  const Rule& swell = segments_[first_moving].rule;
  const Rule& cap_rule = segments_[after].rule;

  if (cap <= swept) {
    segs.push_back({cap, swell});
  } else {
    segs.push_back({swept, swell});
    // The point w^(scale+1) itself is never overtaken by a moving breakpoint.
    if (!ov.count(swept)) {
      if (!cap_rule.is_const())
        fail(ErrorCode::Internal, "limit_function: linear rule at a limit cap");
      ov[swept] = static_cast<std::uint64_t>(cap_rule.offset);
    }
    segs.push_back({cap, cap_rule});
  }
  for (std::size_t i = after + 1; i < segments_.size(); ++i)
    segs.push_back({segments_[i].upper.fixed, segments_[i].rule});
  return IdealFunction(space_, std::move(segs), std::move(ov), false);
}

std::uint64_t TailChain::crossing_bound() const {
  // Any affine comparison among breakpoints, rule thresholds and fixed
  // boundaries settles beyond the sum of the constants involved.
  std::uint64_t acc = 4;
  for (const auto& s : segments_) {
    if (s.upper.moving) {
      acc += s.upper.offset + s.upper.t_coeff;
    } else {
      for (const auto& t : s.upper.fixed.terms()) acc += t.coeff;
    }
    acc += static_cast<std::uint64_t>(std::llabs(s.rule.offset)) +
           static_cast<std::uint64_t>(std::llabs(s.rule.slope)) + 1;
  }
  return acc;
}

std::uint64_t TailChain::crossing_bound_at(const Ordinal& p) const {
  std::uint64_t acc = crossing_bound();
  for (const auto& t : p.terms()) acc += t.coeff;
  return acc;
}

TailChain::Positivity TailChain::positivity_at(const Ordinal& p) const {
  auto value = [&](std::uint64_t t) { return instantiate(t).eval(p); };
  Positivity res;
  if (value(0) == 0) return res;  // Never (monotone descent)
  std::uint64_t hi = crossing_bound_at(p);
  if (value(hi) >= 1) {
    res.kind = Positivity::Kind::AllT;  // settled affine regime stays positive
    return res;
  }
  std::uint64_t lo = 0;
  while (lo + 1 < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (value(mid) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  res.kind = Positivity::Kind::Bounded;
  res.bound = lo;
  return res;
}

std::optional<std::pair<std::uint64_t, Ordinal>> TailChain::monotonicity_violation() const {
  // Affine comparisons settle past the crossing bound, so checking the
  // descending property for consecutive cuts up to it is a complete proof.
  std::uint64_t lim = crossing_bound() + 2;
  IdealFunction prev = instantiate(0);
  for (std::uint64_t t = 1; t <= lim; ++t) {
    IdealFunction cur = instantiate(t);
    if (!IdealFunction::pointwise_leq(cur, prev)) {
      // Locate a witness point by scanning the refinement boundaries.
      for (const auto& seg : cur.segments()) {
        Ordinal q = seg.upper;
        if (cur.eval(q) > prev.eval(q)) return std::make_pair(t, q);
      }
      for (const auto& seg : prev.segments()) {
        Ordinal q = seg.upper;
        if (cur.eval(q) > prev.eval(q)) return std::make_pair(t, q);
      }
      for (std::uint64_t k = 0; k <= lim + 2; ++k) {
        Ordinal q(k);
        if (space_.contains(q) && cur.eval(q) > prev.eval(q))
          return std::make_pair(t, q);
      }
      return std::make_pair(t, Ordinal(0));
    }
    prev = std::move(cur);
  }
  return std::nullopt;
}

PointFamily::PointFamily(SpectrumSpace space, std::uint32_t rank, std::uint64_t plateau,
                         std::uint64_t peak, std::optional<PointSet> region)
    : space_(std::move(space)),
      rank_(rank),
      plateau_(plateau),
      peak_(peak),
      region_(std::move(region)) {
  if (rank_ > space_.max_rank())
    fail(ErrorCode::InvalidModel, "family rank beyond the space");
  if (peak_ == 0)
    fail(ErrorCode::InvalidModel, "family peak must be positive");
  if (rank_ > 0 && (plateau_ == 0 || peak_ > plateau_))
    fail(ErrorCode::InvalidModel,
         "family needs peak <= plateau with positive plateau (semicontinuity)");
  if (region_) require_same_space(space_, region_->space());
}

std::optional<Ordinal> PointFamily::anchor_for(const Ordinal& p) const {
  if (p.rank() > rank_) return std::nullopt;
  Ordinal anchor;
  if (rank_ == 0) {
    anchor = p;
  } else {
    auto dp = p.div_pow_omega(rank_);
    if (dp.remainder.is_zero()) {
      if (p.is_zero() || !dp.quotient.is_successor()) return std::nullopt;
      anchor = p;
    } else {
      anchor = Ordinal::omega_pow(rank_, 1) * dp.quotient.successor();
    }
  }
  if (!space_.contains(anchor)) return std::nullopt;
  if (region_ && !region_->contains(anchor)) return std::nullopt;
  return anchor;
}

IdealFunction PointFamily::member_at(const Ordinal& anchor) const {
  space_.require_point(anchor);
  std::vector<IdealFunction::Segment> segs;
  std::map<Ordinal, std::uint64_t> ov;
  if (rank_ == 0) {
    if (anchor.is_zero()) {
      segs.push_back({space_.bound(), Rule::constant(0)});
      ov[Ordinal(0)] = peak_;
    } else {
      Ordinal prev = *anchor.predecessor();
      if (!prev.is_zero()) segs.push_back({prev, Rule::constant(0)});
      segs.push_back({anchor, Rule::constant(static_cast<std::int64_t>(peak_))});
      if (anchor < space_.bound()) segs.push_back({space_.bound(), Rule::constant(0)});
    }
  } else {
    Ordinal q = anchor.div_pow_omega(rank_).quotient;
    Ordinal block_lo = Ordinal::omega_pow(rank_, 1) * *q.predecessor();
    if (!block_lo.is_zero())
      segs.push_back({block_lo, Rule::constant(0)});
    else
      ov[Ordinal(0)] = 0;  // blocks are half-open below, 0 stays outside
    segs.push_back({anchor, Rule::constant(static_cast<std::int64_t>(plateau_))});
    if (anchor < space_.bound()) segs.push_back({space_.bound(), Rule::constant(0)});
    if (peak_ != plateau_) ov[anchor] = peak_;
  }
  return IdealFunction(space_, std::move(segs), std::move(ov), true);
}

PointSet PointFamily::covered() const {
  PointSet anchors = region_ ? PointSet::interval(space_, std::nullopt, space_.bound(),
                                                  rank_, rank_)
                                   .set_intersect(*region_)
                             : PointSet::interval(space_, std::nullopt, space_.bound(),
                                                  rank_, rank_);
  if (rank_ == 0) {
    PointSet out = anchors;
    if (!region_ || region_->contains(Ordinal(0)))
      out = out.set_union(PointSet::singleton(space_, Ordinal(0)));
    return out;
  }
  // Blocks fill everything below their anchors: project anchor quotient
  // intervals down to full spans, ranks 0..rank_.
  PointSet out(space_);
  for (const auto& iv : anchors.slices()[rank_]) {
    Ordinal w = Ordinal::omega_pow(rank_, 1);
    PointSet span = PointSet::interval(space_, w * iv.lo, w * iv.hi, 0, rank_);
    out = out.set_union(span);
  }
  return out;
}

const char* generator_kind(const GeneratorSpec& g) {
  if (std::holds_alternative<IdealFunction>(g)) return "single";
  if (std::holds_alternative<TailChain>(g)) return "chain";
  return "family";
}

}  // namespace adklab
