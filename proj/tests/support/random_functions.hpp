#pragma once

// Deterministic random generators for the property suites: LSC step
// functions, continuous functions built from radical factors, and valid
// random models.

#include <random>
#include <vector>

#include "adklab/domain_model.hpp"
#include "adklab/ideal_function.hpp"

namespace testgen {

using namespace adklab;

inline std::uint64_t env_seed(std::uint64_t fallback = 0x41444B31) {
  if (const char* s = std::getenv("ADKLAB_SEED")) return std::strtoull(s, nullptr, 0);
  return fallback;
}

// Random ordinal below the bound with small coefficients.
inline Ordinal random_point(std::mt19937_64& rng, const SpectrumSpace& s,
                            std::uint64_t coeff_cap = 7) {
  while (true) {
    std::vector<Ordinal::Term> t;
    for (std::uint32_t e = s.max_rank() + 1; e-- > 0;)
      if (rng() % 2) t.push_back({e, 1 + rng() % coeff_cap});
    Ordinal o(std::move(t));
    if (s.contains(o)) return o;
  }
}

// Lower semicontinuous function: random increasing breakpoints with constant
// rules, overrides at limit points never exceeding the approach value.
inline IdealFunction random_lsc_function(std::mt19937_64& rng, const SpectrumSpace& s,
                                         std::uint64_t max_val = 4) {
  std::vector<Ordinal> cuts;
  std::size_t n = rng() % 4;
  for (std::size_t i = 0; i < n; ++i) {
    Ordinal p = random_point(rng, s);
    if (!p.is_zero() && p < s.bound()) cuts.push_back(p);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.push_back(s.bound());
  std::vector<IdealFunction::Segment> segs;
  for (const auto& c : cuts)
    segs.push_back({c, Rule::constant(static_cast<std::int64_t>(rng() % (max_val + 1)))});
  IdealFunction base(s, std::move(segs), {}, true);
  // Lower some limit points (always legal for semicontinuity).
  std::map<Ordinal, std::uint64_t> ov;
  for (int i = 0; i < 2; ++i) {
    Ordinal p = random_point(rng, s);
    if (s.is_limit_point(p)) {
      std::uint64_t v = base.eval(p);
      if (v > 0) ov[p] = rng() % v;
    }
  }
  if (ov.empty()) return base;
  std::map<Ordinal, std::uint64_t> merged(base.overrides());
  for (auto& [k, v] : ov) merged[k] = v;
  return IdealFunction(s, base.segments(), std::move(merged), true);
}

// A function that may violate semicontinuity (for negative tests).
inline IdealFunction random_step_function(std::mt19937_64& rng, const SpectrumSpace& s,
                                          std::uint64_t max_val = 4) {
  IdealFunction f = random_lsc_function(rng, s, max_val);
  std::map<Ordinal, std::uint64_t> ov(f.overrides());
  for (int i = 0; i < 2; ++i) {
    Ordinal p = random_point(rng, s);
    ov[p] = rng() % (max_val + 2);
  }
  return IdealFunction(s, f.segments(), std::move(ov), true);
}

// Continuous by construction: a sum of indicators of clopen interval unions.
inline IdealFunction random_continuous_function(std::mt19937_64& rng,
                                                const SpectrumSpace& s,
                                                std::size_t factors = 3) {
  IdealFunction acc = IdealFunction::zero(s);
  std::size_t n = 1 + rng() % factors;
  PointSet carrier(s);
  for (std::size_t i = 0; i < n; ++i) {
    // nested supports keep the level sets clopen
    Ordinal cut = random_point(rng, s);
    PointSet supp = i == 0 ? PointSet::whole(s)
                           : PointSet::interval(s, cut < s.bound() ? cut : Ordinal(0),
                                                s.bound());
    carrier = i == 0 ? supp : carrier.set_intersect(supp);
    if (carrier.is_empty()) break;
    acc = IdealFunction::add(acc, IdealFunction::indicator(carrier, true));
  }
  if (acc.is_zero()) acc = IdealFunction::indicator(PointSet::whole(s), true);
  return acc.with_fg(true);
}

}  // namespace testgen
