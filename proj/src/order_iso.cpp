#include "adklab/order_iso.hpp"

#include <bit>

#include "adklab/errors.hpp"

namespace adklab {

namespace {

// Order type of {p in (0, w^e] : rank(p) in mask}.
Ordinal block_type(std::uint32_t e, std::uint64_t mask) {
  Ordinal b = (mask & 1) ? Ordinal(1) : Ordinal(0);
  for (std::uint32_t k = 1; k <= e; ++k) {
    b = b * Ordinal::omega();
    if (mask & (1ull << k)) b = b + Ordinal(1);
  }
  return b;
}

// delta * m for finite m.
Ordinal mul_nat(const Ordinal& delta, std::uint64_t m) {
  return delta * Ordinal(m);
}

// Largest finite m with delta * m <= i, given 0 < delta and i < delta * cap.
// Returns m and the remainder i - delta*m.
std::pair<std::uint64_t, Ordinal> ord_div(const Ordinal& i, const Ordinal& delta) {
  if (i < delta) return {0, i};
  std::uint32_t f = delta.leading_exp();
  std::uint64_t d = delta.terms().front().coeff;
  if (i.leading_exp() != f)
    fail(ErrorCode::Internal, "ord_div: degree mismatch");
  std::uint64_t m = i.terms().front().coeff / d;
  while (m > 0 && i < mul_nat(delta, m)) --m;
  while (!(i < mul_nat(delta, m + 1))) ++m;
  return {m, Ordinal::left_sub(mul_nat(delta, m), i)};
}

// Index of z within (0, w^e] under mask; z must belong to the filtered set.
Ordinal index_in_block(std::uint32_t e, std::uint64_t mask, const Ordinal& z) {
  if (e == 0) return Ordinal(0);  // z == 1
  Ordinal sub = block_type(e - 1, mask);
  if (z == Ordinal::omega_pow(e, 1)) return sub * Ordinal::omega();
  auto dp = z.div_pow_omega(e - 1);
  std::uint64_t u = dp.quotient.finite_value();
  std::uint64_t m;
  Ordinal z2;
  if (dp.remainder.is_zero()) {
    m = u - 1;
    z2 = Ordinal::omega_pow(e - 1, 1);
  } else {
    m = u;
    z2 = dp.remainder;
  }
  return mul_nat(sub, m) + index_in_block(e - 1, mask, z2);
}

// Inverse of index_in_block.
Ordinal point_in_block(std::uint32_t e, std::uint64_t mask, const Ordinal& idx) {
  if (e == 0) return Ordinal(1);
  Ordinal sub = block_type(e - 1, mask);
  if ((mask & (1ull << e)) && idx == sub * Ordinal::omega())
    return Ordinal::omega_pow(e, 1);
  if (sub.is_zero()) fail(ErrorCode::Internal, "point_in_block: empty sub-block");
  auto [m, rem] = ord_div(idx, sub);
  return Ordinal::omega_pow(e - 1, m) + point_in_block(e - 1, mask, rem);
}

struct AtomGeometry {
  // CNF walk over gamma = hi - lo after reducing by the lowest mask rank.
  std::uint32_t shift;       // lowest rank in mask
  Ordinal lo_q, hi_q;        // reduced interval bounds
  std::uint64_t mask_q;      // reduced mask (bit 0 set)
};

AtomGeometry reduce_atom(const PointSet::Atom& a) {
  std::uint64_t m = a.mask;
  if (m == 0) fail(ErrorCode::Internal, "empty atom mask");
  std::uint32_t j = static_cast<std::uint32_t>(std::countr_zero(m));
  AtomGeometry g;
  g.shift = j;
  g.lo_q = a.lo.div_pow_omega(j).quotient;
  g.hi_q = a.hi.div_pow_omega(j).quotient;
  g.mask_q = m >> j;
  return g;
}

Ordinal atom_type(const PointSet::Atom& a) {
  AtomGeometry g = reduce_atom(a);
  Ordinal gamma = Ordinal::left_sub(g.lo_q, g.hi_q);
  Ordinal total;
  for (const auto& t : gamma.terms())
    total = total + mul_nat(block_type(t.exp, g.mask_q), t.coeff);
  return total;
}

Ordinal atom_index_of(const PointSet::Atom& a, const Ordinal& p) {
  AtomGeometry g = reduce_atom(a);
  Ordinal y = Ordinal::left_sub(g.lo_q, p.div_pow_omega(g.shift).quotient);
  Ordinal gamma = Ordinal::left_sub(g.lo_q, g.hi_q);
  Ordinal acc;
  for (const auto& t : gamma.terms()) {
    Ordinal span = Ordinal::omega_pow(t.exp, t.coeff);
    Ordinal btype = block_type(t.exp, g.mask_q);
    if (span < y) {
      y = Ordinal::left_sub(span, y);
      acc = acc + mul_nat(btype, t.coeff);
      continue;
    }
    auto dp = y.div_pow_omega(t.exp);
    std::uint64_t u = dp.quotient.finite_value();
    std::uint64_t m;
    Ordinal z;
    if (dp.remainder.is_zero()) {
      m = u - 1;
      z = Ordinal::omega_pow(t.exp, 1);
    } else {
      m = u;
      z = dp.remainder;
    }
    return acc + mul_nat(btype, m) + index_in_block(t.exp, g.mask_q, z);
  }
  fail(ErrorCode::Internal, "atom_index_of: point beyond atom");
}

Ordinal atom_point_at(const PointSet::Atom& a, const Ordinal& idx) {
  AtomGeometry g = reduce_atom(a);
  Ordinal gamma = Ordinal::left_sub(g.lo_q, g.hi_q);
  Ordinal i = idx;
  Ordinal base = g.lo_q;
  for (const auto& t : gamma.terms()) {
    Ordinal btype = block_type(t.exp, g.mask_q);
    Ordinal cap = mul_nat(btype, t.coeff);
    if (!(i < cap)) {
      i = Ordinal::left_sub(cap, i);
      base = base + Ordinal::omega_pow(t.exp, t.coeff);
      continue;
    }
    std::uint64_t m = 0;
    Ordinal rem = i;
    if (!btype.is_zero()) {
      auto d = ord_div(i, btype);
      m = d.first;
      rem = d.second;
    }
    Ordinal z = point_in_block(t.exp, g.mask_q, rem);
    Ordinal q = base + Ordinal::omega_pow(t.exp, m) + z;
    return Ordinal::omega_pow(g.shift, 1) * q;
  }
  fail(ErrorCode::Internal, "atom_point_at: index beyond atom");
}

}  // namespace

OrderIso order_type(const PointSet& s) {
  if (s.is_empty())
    fail(ErrorCode::UnsupportedShape, "order_type of empty set");
  OrderIso iso;
  iso.source_ = s.space();
  iso.zero_member_ = s.has_zero();
  Ordinal total;
  if (s.has_zero()) total = Ordinal(1);
  for (const auto& a : s.atoms()) {
    OrderIso::Block b{a, total, atom_type(a)};
    total = total + b.length;
    iso.blocks_.push_back(std::move(b));
  }
  if (s.space().is_discrete()) {
    if (total.is_finite())
      iso.target_ = SpectrumSpace::interval(Ordinal(total.finite_value() - 1));
    else
      iso.target_ = SpectrumSpace::discrete();
    return iso;
  }
  auto pred = total.predecessor();
  if (!pred)
    fail(ErrorCode::UnsupportedShape,
         "order_type: set has no maximum (not closed), type " + total.to_string());
  iso.target_ = SpectrumSpace::interval(*pred);
  return iso;
}

Ordinal OrderIso::index_of(const Ordinal& p) const {
  if (p.is_zero()) {
    if (zero_member_) return Ordinal(0);
    fail(ErrorCode::PointOutsideSpace, "index_of: 0 not a member");
  }
  for (const auto& b : blocks_) {
    if (b.atom.lo < p && p <= b.atom.hi && (b.atom.mask & (1ull << p.rank())))
      return b.offset + atom_index_of(b.atom, p);
  }
  fail(ErrorCode::PointOutsideSpace, "index_of: " + p.to_string() + " not a member");
}

Ordinal OrderIso::point_at(const Ordinal& idx) const {
  if (zero_member_ && idx.is_zero()) return Ordinal(0);
  for (const auto& b : blocks_) {
    if (!(idx < b.offset) && idx < b.offset + b.length)
      return atom_point_at(b.atom, Ordinal::left_sub(b.offset, idx));
  }
  fail(ErrorCode::PointOutsideSpace, "point_at: index " + idx.to_string() + " out of range");
}

}  // namespace adklab
