#pragma once

// Independent topology oracle: limit-point and closure questions answered by
// unfolding the order-topology definitions along fundamental sequences, with
// existence probed on a fine ordinal grid. Sound for the small-coefficient
// sets exercised by the tests (every set here has piece coefficients well
// under the probe resolution).

#include <functional>
#include <set>
#include <vector>

#include "adklab/ordinal.hpp"
#include "adklab/point_set.hpp"
#include "adklab/spectrum.hpp"

namespace oracle {

using adklab::Ordinal;
using adklab::PointSet;
using adklab::SpectrumSpace;

// All CNF ordinals <= bound with every coefficient <= cap.
inline std::vector<Ordinal> probe_grid(const SpectrumSpace& space, std::uint64_t cap) {
  std::vector<Ordinal> acc{Ordinal()};
  for (std::uint32_t e = space.max_rank() + 1; e-- > 0;) {
    std::vector<Ordinal> next;
    for (const auto& base : acc)
      for (std::uint64_t c = 0; c <= cap; ++c) {
        Ordinal cand = base + Ordinal::omega_pow(e, c);
        if (space.contains(cand)) next.push_back(cand);
      }
    acc = std::move(next);
  }
  std::set<Ordinal> uniq(acc.begin(), acc.end());
  return {uniq.begin(), uniq.end()};
}

// m-th element of the canonical fundamental sequence of a limit ordinal.
inline Ordinal fundamental(const Ordinal& q, std::uint64_t m) {
  auto terms = q.terms();
  std::uint32_t e = terms.back().exp;  // rank >= 1
  terms.back().coeff -= 1;
  if (terms.back().coeff == 0) terms.pop_back();
  return Ordinal(terms) + Ordinal::omega_pow(e - 1, m);
}

// q is a limit point of S: every tail (d_m, q) of the fundamental sequence
// meets S. Membership existence is probed on the grid.
// `tails` must exceed the piece coefficients of the probed set, and the grid
// cap must exceed `tails` so witnesses remain visible.
inline bool limit_point_oracle(const std::vector<Ordinal>& grid,
                               const std::function<bool(const Ordinal&)>& in_s,
                               const Ordinal& q, std::uint64_t tails = 6) {
  if (!q.is_limit()) return false;
  for (std::uint64_t m = 1; m <= tails; ++m) {
    Ordinal d = fundamental(q, m);
    bool hit = false;
    for (const auto& x : grid)
      if (d < x && x < q && in_s(x)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

inline bool closure_oracle_contains(const std::vector<Ordinal>& grid,
                                    const std::function<bool(const Ordinal&)>& in_s,
                                    const Ordinal& q) {
  return in_s(q) || limit_point_oracle(grid, in_s, q);
}

// Iterated derived sets of the whole space over the grid; layer j holds the
// grid points surviving j derivative steps.
inline std::vector<std::set<Ordinal>> derived_layers(const std::vector<Ordinal>& grid,
                                                     std::size_t max_layers) {
  std::vector<std::set<Ordinal>> layers;
  layers.emplace_back(grid.begin(), grid.end());
  while (layers.size() < max_layers) {
    const std::set<Ordinal>& prev = layers.back();
    auto in_prev = [&prev](const Ordinal& x) { return prev.count(x) > 0; };
    std::set<Ordinal> next;
    for (const auto& q : prev)
      if (limit_point_oracle(grid, in_prev, q)) next.insert(q);
    if (next.empty()) break;
    layers.push_back(std::move(next));
  }
  return layers;
}

inline std::size_t cb_rank_oracle(const std::vector<std::set<Ordinal>>& layers,
                                  const Ordinal& q) {
  std::size_t rank = 0;
  for (std::size_t j = 1; j < layers.size(); ++j)
    if (layers[j].count(q)) rank = j;
  return rank;
}

}  // namespace oracle
