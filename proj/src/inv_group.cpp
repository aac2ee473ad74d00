#include "adklab/inv_group.hpp"

#include <algorithm>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "adklab/errors.hpp"
#include "adklab/factorization.hpp"

namespace adklab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::rational<BigInt>;

KernelCertificate kernel_membership(const DomainModel& model, const GroupElement& g,
                                    std::optional<std::uint64_t> level) {
  PointSet crit = level ? crit_set(model, *level) : crit_set_omega(model);
  KernelCertificate cert;
  PointSet overlap = g.value.support().set_intersect(crit);
  if (!overlap.is_empty()) {
    cert.in_kernel = false;
    cert.blocking_point = overlap.min_point();
    return cert;
  }
  cert.in_kernel = true;
  // Both halves live away from Crit^omega (contained in the level set), so
  // they are bounded; produce the bounds explicitly.
  auto half_bound = [&](const IdealFunction& h) -> std::uint64_t {
    if (!h.is_proper()) return 0;
    return bounded_witness(model, h).bound;
  };
  cert.num_bound = half_bound(g.value.num());
  cert.den_bound = half_bound(g.value.den());
  return cert;
}

ComponentProfile component_profile(const DomainModel& model, const GroupElement& g) {
  ChainReport chain = compute_crit_chain(model);
  if (chain.model_contradiction)
    fail(ErrorCode::UnsupportedShape, "component profile needs a scattered chain");
  ComponentProfile prof;
  for (const auto& [alpha, layer] : chain.height_layers) {
    ComponentLayer cl{alpha, layer, true};
    cl.zero = g.value.support().set_intersect(layer).is_empty();
    prof.layers.push_back(std::move(cl));
  }
  return prof;
}

std::int64_t ComponentProfile::eval_through_layers(const GroupElement& g,
                                                   const Ordinal& p) const {
  for (const auto& l : layers)
    if (l.window.contains(p)) return l.zero ? 0 : g.value.eval(p);
  return 0;  // outside all layers only when the chain never contained p
}

RankResult zrank(const std::vector<GroupElement>& elements,
                 const std::vector<Ordinal>& window) {
  RankResult res;
  const std::size_t rows = window.size();
  const std::size_t cols = elements.size();
  std::vector<std::vector<BigRat>> m(rows, std::vector<BigRat>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m[i][j] = BigRat(BigInt(elements[j].value.eval(window[i])));

  // Fraction-free enough for this scale: exact rational Gauss-Jordan with
  // column bookkeeping so a kernel vector can be read off.
  std::vector<std::size_t> pivot_of_col(cols, SIZE_MAX);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pr = SIZE_MAX;
    for (std::size_t r = rank; r < rows; ++r)
      if (m[r][c] != BigRat(0)) {
        pr = r;
        break;
      }
    if (pr == SIZE_MAX) continue;
    std::swap(m[rank], m[pr]);
    BigRat inv = m[rank][c];
    for (std::size_t j = 0; j < cols; ++j) m[rank][j] /= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == BigRat(0)) continue;
      BigRat f = m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    pivot_of_col[c] = rank;
    ++rank;
  }
  res.rank = rank;
  if (rank == cols) {
    res.verdict = RankResult::Verdict::Independent;
    return res;
  }

  // Free column => combination vanishing on the window.
  std::size_t free_col = SIZE_MAX;
  for (std::size_t c = 0; c < cols; ++c)
    if (pivot_of_col[c] == SIZE_MAX) {
      free_col = c;
      break;
    }
  std::vector<BigRat> combo(cols, BigRat(0));
  combo[free_col] = BigRat(1);
  for (std::size_t c = 0; c < cols; ++c)
    if (pivot_of_col[c] != SIZE_MAX) combo[c] = -m[pivot_of_col[c]][free_col];
  BigInt lcm = 1;
  for (const auto& q : combo)
    lcm = boost::multiprecision::lcm(lcm, q.denominator());
  std::vector<std::int64_t> icombo(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    BigInt v = combo[c].numerator() * (lcm / combo[c].denominator());
    if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN))
      fail(ErrorCode::Internal, "zrank: kernel coefficients overflow");
    icombo[c] = static_cast<std::int64_t>(v);
  }

  // Decide whether the dependence is genuine by symbolic recombination.
  FractionalFunction acc(elements.front().value.space());
  for (std::size_t c = 0; c < cols; ++c)
    if (icombo[c] != 0)
      acc = FractionalFunction::add(acc, elements[c].value.scale(icombo[c]));
  if (acc.is_zero()) {
    res.verdict = RankResult::Verdict::Dependent;
    res.kernel_combination = std::move(icombo);
  } else {
    res.verdict = RankResult::Verdict::WindowTooSmall;
    res.kernel_combination = std::move(icombo);
    res.suggested_extension = acc.support().min_point();
  }
  return res;
}

std::vector<Ordinal> truncation_points(const SpectrumSpace& space, std::size_t depth) {
  std::set<Ordinal> pts;
  pts.insert(Ordinal(0));
  const Ordinal& bound = space.bound();
  bool discrete = space.is_discrete();
  if (!discrete) pts.insert(bound);

  // Small limit points: every CNF with coefficients <= 8 and positive rank.
  std::vector<Ordinal> limits;
  if (!discrete && space.max_rank() > 0) {
    std::vector<Ordinal> frontier{Ordinal()};
    for (std::uint32_t e = space.max_rank(); e >= 1; --e) {
      std::vector<Ordinal> next;
      for (const auto& base : frontier)
        for (std::uint64_t c = 0; c <= 8; ++c) {
          Ordinal cand = base + Ordinal::omega_pow(e, c);
          if (cand <= bound) next.push_back(cand);
        }
      frontier = std::move(next);
    }
    for (const auto& o : frontier)
      if (!o.is_zero() && o.is_limit()) limits.push_back(o);
  }
  std::size_t streams = std::max<std::size_t>(1, limits.size());
  std::size_t ladder = std::max<std::size_t>(4, depth / streams);

  // Prefix of the isolated part.
  for (std::uint64_t k = 0; k < ladder; ++k) {
    Ordinal p(k);
    if (space.contains(p)) pts.insert(p);
  }
  // Approach ladders under every collected limit.
  for (const auto& l : limits) {
    pts.insert(l);
    std::uint32_t e = l.rank();
    auto base_terms = l.terms();
    base_terms.back().coeff -= 1;
    if (base_terms.back().coeff == 0) base_terms.pop_back();
    Ordinal base(std::move(base_terms));
    for (std::uint64_t mstep = 1; mstep <= ladder; ++mstep) {
      Ordinal p = base + Ordinal::omega_pow(e - 1, mstep);
      if (space.contains(p)) pts.insert(p);
    }
  }
  return std::vector<Ordinal>(pts.begin(), pts.end());
}

}  // namespace adklab
