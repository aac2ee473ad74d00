#include "adklab/point_set.hpp"

#include <algorithm>
#include <map>

#include "adklab/errors.hpp"

namespace adklab {

namespace {

using Iv = PointSet::Iv;

// Sorted-disjoint (lo, hi] interval algebra over ordinals.

std::vector<Iv> iv_normalize(std::vector<Iv> v) {
  std::erase_if(v, [](const Iv& i) { return !(i.lo < i.hi); });
  std::sort(v.begin(), v.end(),
            [](const Iv& a, const Iv& b) { return a.lo < b.lo; });
  std::vector<Iv> out;
  for (auto& i : v) {
    if (!out.empty() && i.lo <= out.back().hi)
      out.back().hi = max(out.back().hi, i.hi);
    else
      out.push_back(i);
  }
  return out;
}

std::vector<Iv> iv_union(const std::vector<Iv>& a, const std::vector<Iv>& b) {
  std::vector<Iv> v = a;
  v.insert(v.end(), b.begin(), b.end());
  return iv_normalize(std::move(v));
}

std::vector<Iv> iv_intersect(const std::vector<Iv>& a, const std::vector<Iv>& b) {
  std::vector<Iv> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Ordinal lo = max(x.lo, y.lo);
      Ordinal hi = min(x.hi, y.hi);
      if (lo < hi) out.push_back({lo, hi});
    }
  return iv_normalize(std::move(out));
}

// a minus b
std::vector<Iv> iv_subtract(const std::vector<Iv>& a, const std::vector<Iv>& b) {
  std::vector<Iv> out;
  for (const auto& x : a) {
    Ordinal cur = x.lo;
    for (const auto& y : b) {
      if (y.hi <= cur || x.hi <= y.lo) continue;
      if (cur < y.lo) out.push_back({cur, min(y.lo, x.hi)});
      cur = max(cur, y.hi);
      if (!(cur < x.hi)) break;
    }
    if (cur < x.hi) out.push_back({cur, x.hi});
  }
  return iv_normalize(std::move(out));
}

bool iv_contains(const std::vector<Iv>& a, const Ordinal& q) {
  for (const auto& x : a)
    if (x.lo < q && q <= x.hi) return true;
  return false;
}

}  // namespace

PointSet::PointSet(SpectrumSpace space) : space_(std::move(space)) {
  if (space_.max_rank() > 62)
    fail(ErrorCode::UnsupportedShape, "spectrum rank too large for set algebra");
  slices_.resize(space_.max_rank() + 1);
}

std::uint64_t PointSet::realizable_mask(const Ordinal& lo, const Ordinal& hi,
                                        std::uint32_t max_rank) {
  std::uint64_t m = 0;
  for (std::uint32_t j = 0; j <= max_rank; ++j) {
    if (lo.div_pow_omega(j).quotient < hi.div_pow_omega(j).quotient)
      m |= (1ull << j);
  }
  return m;
}

void PointSet::add_slice_interval(std::uint32_t j, Ordinal lo, Ordinal hi) {
  if (j >= slices_.size()) return;
  Ordinal cap = space_.quotient_bound(j);
  hi = min(hi, cap);
  if (lo < hi) slices_[j].push_back({std::move(lo), std::move(hi)});
}

void PointSet::normalize() {
  for (auto& s : slices_) s = iv_normalize(std::move(s));
}

PointSet PointSet::whole(const SpectrumSpace& s) {
  PointSet p(s);
  p.has_zero_ = true;
  for (std::uint32_t j = 0; j < p.slices_.size(); ++j)
    p.add_slice_interval(j, Ordinal(0), s.quotient_bound(j));
  p.normalize();
  return p;
}

PointSet PointSet::singleton(const SpectrumSpace& s, const Ordinal& p) {
  s.require_point(p);
  PointSet out(s);
  if (p.is_zero()) {
    out.has_zero_ = true;
    return out;
  }
  std::uint32_t j = p.rank();
  Ordinal q = p.div_pow_omega(j).quotient;
  out.add_slice_interval(j, *q.predecessor(), q);
  out.normalize();
  return out;
}

PointSet PointSet::interval(const SpectrumSpace& s, std::optional<Ordinal> lower,
                            Ordinal upper, std::uint32_t rank_ge,
                            std::optional<std::uint32_t> rank_le) {
  PointSet out(s);
  upper = min(upper, s.bound());
  std::uint32_t hi_rank = rank_le.value_or(s.max_rank());
  hi_rank = std::min(hi_rank, s.max_rank());
  Ordinal lo = lower.value_or(Ordinal(0));
  if (!lower.has_value() && rank_ge == 0) out.has_zero_ = true;
  if (lower.has_value() && !(lo < upper)) return out;  // empty interval
  for (std::uint32_t j = rank_ge; j <= hi_rank; ++j)
    out.add_slice_interval(j, lo.div_pow_omega(j).quotient,
                           upper.div_pow_omega(j).quotient);
  out.normalize();
  return out;
}

PointSet PointSet::from_pieces(const SpectrumSpace& s, const std::vector<Piece>& pieces) {
  PointSet out(s);
  for (const auto& pc : pieces) {
    PointSet one = interval(s, pc.lower, pc.upper, pc.rank_ge, pc.rank_le);
    out = out.set_union(one);
  }
  return out;
}

bool PointSet::is_empty() const {
  if (has_zero_) return false;
  for (const auto& s : slices_)
    if (!s.empty()) return false;
  return true;
}

bool PointSet::contains(const Ordinal& p) const {
  if (!space_.contains(p)) return false;
  if (p.is_zero()) return has_zero_;
  std::uint32_t j = p.rank();
  if (j >= slices_.size()) return false;
  return iv_contains(slices_[j], p.div_pow_omega(j).quotient);
}

PointSet PointSet::set_union(const PointSet& o) const {
  require_same_space(space_, o.space_);
  PointSet out(space_);
  out.has_zero_ = has_zero_ || o.has_zero_;
  for (std::size_t j = 0; j < slices_.size(); ++j)
    out.slices_[j] = iv_union(slices_[j], o.slices_[j]);
  return out;
}

PointSet PointSet::set_intersect(const PointSet& o) const {
  require_same_space(space_, o.space_);
  PointSet out(space_);
  out.has_zero_ = has_zero_ && o.has_zero_;
  for (std::size_t j = 0; j < slices_.size(); ++j)
    out.slices_[j] = iv_intersect(slices_[j], o.slices_[j]);
  return out;
}

PointSet PointSet::set_difference(const PointSet& o) const {
  require_same_space(space_, o.space_);
  PointSet out(space_);
  out.has_zero_ = has_zero_ && !o.has_zero_;
  for (std::size_t j = 0; j < slices_.size(); ++j)
    out.slices_[j] = iv_subtract(slices_[j], o.slices_[j]);
  return out;
}

PointSet PointSet::set_complement() const {
  return whole(space_).set_difference(*this);
}

PointSet PointSet::closure() const {
  if (space_.is_discrete()) return *this;  // every point isolated
  PointSet out = *this;
  for (std::uint32_t j = 0; j < slices_.size(); ++j) {
    for (const auto& iv : slices_[j]) {
      // Limit points of {w^j * q : q in (lo, hi]} are the w^j * q' with q'
      // a limit ordinal in the same quotient range; splitting q' by its own
      // rank r lands them in slice j + r.
      for (std::uint32_t r = 1; j + r < slices_.size() + 0u && j + r <= space_.max_rank(); ++r) {
        out.add_slice_interval(j + r, iv.lo.div_pow_omega(r).quotient,
                               iv.hi.div_pow_omega(r).quotient);
      }
    }
  }
  out.normalize();
  return out;
}

std::optional<Ordinal> PointSet::min_point() const {
  if (has_zero_) return Ordinal(0);
  std::optional<Ordinal> best;
  for (std::uint32_t j = 0; j < slices_.size(); ++j) {
    if (slices_[j].empty()) continue;
    // w^j * (lo+1) is the least member of the slice
    Ordinal cand = Ordinal::omega_pow(j, 1) * slices_[j][0].lo.successor();
    if (!best || cand < *best) best = cand;
  }
  return best;
}

std::optional<Ordinal> PointSet::sup_point() const {
  std::optional<Ordinal> best;
  auto upd = [&best](const Ordinal& c) {
    if (!best || *best < c) best = c;
  };
  if (has_zero_) upd(Ordinal(0));
  for (std::uint32_t j = 0; j < slices_.size(); ++j)
    if (!slices_[j].empty())
      upd(Ordinal::omega_pow(j, 1) * slices_[j].back().hi);
  return best;
}

std::optional<Ordinal> PointSet::max_point() const {
  auto s = sup_point();
  if (!s) return std::nullopt;
  if (space_.is_discrete() && !s->is_finite()) return std::nullopt;
  return contains(*s) ? s : std::nullopt;
}

bool PointSet::finite_members(std::vector<Ordinal>& out, std::size_t cap) const {
  std::vector<Ordinal> pts;
  if (has_zero_) pts.push_back(Ordinal(0));
  for (std::uint32_t j = 0; j < slices_.size(); ++j) {
    for (const auto& iv : slices_[j]) {
      // Successor quotients in (lo, hi]: finitely many iff hi = lo + n.
      Ordinal cur = iv.lo;
      while (true) {
        Ordinal nxt = cur.successor();
        if (iv.hi < nxt) break;
        pts.push_back(Ordinal::omega_pow(j, 1) * nxt);
        if (pts.size() > cap) return false;
        Ordinal diff = Ordinal::left_sub(nxt, iv.hi);
        if (!diff.is_finite()) return false;  // infinitely many successors left
        cur = nxt;
      }
    }
  }
  std::sort(pts.begin(), pts.end());
  out = std::move(pts);
  return true;
}

std::vector<PointSet::Atom> PointSet::atoms() const {
  // Map every slice interval to its spanned space interval, refine on the
  // collected boundaries, then merge neighbours with compatible masks.
  std::vector<Ordinal> bounds;
  struct Span {
    Ordinal lo, hi;
    std::uint32_t j;
  };
  std::vector<Span> spans;
  for (std::uint32_t j = 0; j < slices_.size(); ++j)
    for (const auto& iv : slices_[j]) {
      Ordinal w = Ordinal::omega_pow(j, 1);
      spans.push_back({w * iv.lo, w * iv.hi, j});
      bounds.push_back(spans.back().lo);
      bounds.push_back(spans.back().hi);
    }
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

  std::vector<Atom> atoms;
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    Atom a{bounds[i], bounds[i + 1], 0};
    for (const auto& sp : spans)
      if (!(a.lo < sp.lo) && !(sp.hi < a.hi)) a.mask |= (1ull << sp.j);
    if (a.mask) atoms.push_back(std::move(a));
  }
  // Merge adjacent atoms when their realizable mask content agrees.
  std::vector<Atom> merged;
  std::uint32_t mr = space_.max_rank();
  for (auto& a : atoms) {
    if (!merged.empty() && merged.back().hi == a.lo) {
      Atom& b = merged.back();
      std::uint64_t rb = realizable_mask(b.lo, b.hi, mr);
      std::uint64_t ra = realizable_mask(a.lo, a.hi, mr);
      std::uint64_t u = (b.mask & rb) | (a.mask & ra);
      if ((u & rb) == (b.mask & rb) && (u & ra) == (a.mask & ra)) {
        b.mask = u;
        b.hi = a.hi;
        continue;
      }
    }
    merged.push_back(a);
  }
  for (auto& a : merged) a.mask &= realizable_mask(a.lo, a.hi, mr);
  std::erase_if(merged, [](const Atom& a) { return a.mask == 0; });
  return merged;
}

std::vector<PointSet::Piece> PointSet::pieces() const {
  std::vector<Piece> rows;
  std::uint32_t mr = space_.max_rank();
  auto atom_list = atoms();
  bool zero_merged = false;
  if (has_zero_ && !atom_list.empty() && atom_list.front().lo.is_zero() &&
      (atom_list.front().mask & 1)) {
    zero_merged = true;
  }
  if (has_zero_ && !zero_merged)
    rows.push_back({std::nullopt, Ordinal(0), 0, 0});
  for (std::size_t ai = 0; ai < atom_list.size(); ++ai) {
    const Atom& a = atom_list[ai];
    std::uint64_t realizable = realizable_mask(a.lo, a.hi, mr);
    // Collect realizable ranks in order; group consecutive runs inside mask.
    std::vector<std::uint32_t> ranks;
    for (std::uint32_t j = 0; j <= mr; ++j)
      if (realizable & (1ull << j)) ranks.push_back(j);
    std::size_t i = 0;
    while (i < ranks.size()) {
      if (!(a.mask & (1ull << ranks[i]))) {
        ++i;
        continue;
      }
      std::size_t k = i;
      while (k + 1 < ranks.size() && (a.mask & (1ull << ranks[k + 1]))) ++k;
      Piece pc;
      bool merge_zero = zero_merged && ai == 0 && ranks[i] == ranks.front();
      pc.lower = merge_zero ? std::nullopt : std::optional<Ordinal>(a.lo);
      pc.upper = a.hi;
      pc.rank_ge = (i == 0) ? 0 : ranks[i];
      if (k + 1 < ranks.size()) pc.rank_le = ranks[k];
      rows.push_back(std::move(pc));
      i = k + 1;
    }
  }
  return rows;
}

bool PointSet::operator==(const PointSet& o) const {
  return space_ == o.space_ && has_zero_ == o.has_zero_ && slices_ == o.slices_;
}

int PointSet::lex_compare(const PointSet& a, const PointSet& b) {
  if (a.has_zero_ != b.has_zero_) return a.has_zero_ ? -1 : 1;
  for (std::size_t j = 0; j < std::max(a.slices_.size(), b.slices_.size()); ++j) {
    const auto& x = j < a.slices_.size() ? a.slices_[j] : std::vector<Iv>{};
    const auto& y = j < b.slices_.size() ? b.slices_[j] : std::vector<Iv>{};
    for (std::size_t i = 0; i < std::max(x.size(), y.size()); ++i) {
      if (i >= x.size()) return -1;
      if (i >= y.size()) return 1;
      if (x[i].lo != y[i].lo) return x[i].lo < y[i].lo ? -1 : 1;
      if (x[i].hi != y[i].hi) return x[i].hi < y[i].hi ? -1 : 1;
    }
  }
  return 0;
}

std::string PointSet::to_string() const {
  if (is_empty()) return "{}";
  std::string s = "{";
  bool first = true;
  for (const auto& pc : pieces()) {
    if (!first) s += ", ";
    first = false;
    if (pc.lower)
      s += "(" + pc.lower->to_string() + ",";
    else
      s += "[0,";
    s += pc.upper.to_string() + "]";
    if (pc.rank_ge > 0) s += " rank>=" + std::to_string(pc.rank_ge);
    if (pc.rank_le) s += " rank<=" + std::to_string(*pc.rank_le);
  }
  return s + "}";
}

}  // namespace adklab
