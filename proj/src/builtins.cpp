#include "adklab/builtins.hpp"

#include <charconv>

#include "adklab/errors.hpp"

namespace adklab {

namespace {

std::optional<std::uint64_t> suffix_number(const std::string& name, const std::string& prefix) {
  if (name.rfind(prefix, 0) != 0) return std::nullopt;
  std::uint64_t v = 0;
  const char* b = name.data() + prefix.size();
  const char* e = name.data() + name.size();
  auto res = std::from_chars(b, e, v);
  if (res.ec != std::errc() || res.ptr != e) return std::nullopt;
  return v;
}

DomainModel make_example_r(std::uint64_t r) {
  SpectrumSpace s = SpectrumSpace::interval(Ordinal::omega());
  std::vector<GeneratorSpec> gens;
  gens.emplace_back(PointFamily(s, 0, 1, 1));
  // Y_t: zero on [0, t], the constant exponent r past t, value 1 at w.
  std::vector<TailChain::Segment> segs{
      {TBreak::affine(0, 1, 0), Rule::constant(0)},
      {TBreak::at(Ordinal::omega()), Rule::constant(static_cast<std::int64_t>(r))}};
  gens.emplace_back(TailChain(s, std::move(segs), {{Ordinal::omega(), 1}}));
  return DomainModel("example-" + std::to_string(r), s, std::move(gens));
}

DomainModel make_example_growing() {
  SpectrumSpace s = SpectrumSpace::interval(Ordinal::omega());
  std::vector<GeneratorSpec> gens;
  gens.emplace_back(PointFamily(s, 0, 1, 1));
  // Y_t: value k at the k-th point for k > t, value 1 at w.
  std::vector<TailChain::Segment> segs{
      {TBreak::affine(0, 1, 0), Rule::constant(0)},
      {TBreak::at(Ordinal::omega()), Rule::linear(1, 0)}};
  gens.emplace_back(TailChain(s, std::move(segs), {{Ordinal::omega(), 1}}));
  return DomainModel("example-growing", s, std::move(gens));
}

DomainModel make_ladder(std::uint64_t k) {
  if (k < 1 || k > 6) fail(ErrorCode::ParseError, "ladder rank must be in 1..6");
  SpectrumSpace s = SpectrumSpace::interval(Ordinal::omega_pow(static_cast<std::uint32_t>(k), 1));
  std::vector<GeneratorSpec> gens;
  gens.emplace_back(PointFamily(s, 0, 1, 1));
  for (std::uint32_t j = 1; j < k; ++j) gens.emplace_back(PointFamily(s, j, 2, 1));
  std::vector<TailChain::Segment> segs{
      {TBreak::affine(static_cast<std::uint32_t>(k - 1), 1, 0), Rule::constant(0)},
      {TBreak::at(s.bound()), Rule::constant(2)}};
  gens.emplace_back(TailChain(s, std::move(segs), {{s.bound(), 1}}));
  return DomainModel("ladder-" + std::to_string(k), s, std::move(gens));
}

DomainModel make_dedekind_finite(std::uint64_t n) {
  if (n == 0) fail(ErrorCode::ParseError, "dedekind-finite needs at least one point");
  SpectrumSpace s = SpectrumSpace::interval(Ordinal(n - 1));
  std::vector<GeneratorSpec> gens;
  gens.emplace_back(PointFamily(s, 0, 1, 1));
  return DomainModel("dedekind-finite-" + std::to_string(n), s, std::move(gens));
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"example-2",     "example-3",          "example-5",
          "example-growing", "ladder-2",          "ladder-3",
          "dedekind-finite-5"};
}

std::optional<DomainModel> make_builtin(const std::string& name) {
  if (name == "example-growing") return make_example_growing();
  if (auto r = suffix_number(name, "example-")) {
    if (*r < 2) fail(ErrorCode::ParseError, "example-r needs r >= 2");
    return make_example_r(*r);
  }
  if (auto k = suffix_number(name, "ladder-")) return make_ladder(*k);
  if (auto n = suffix_number(name, "dedekind-finite-")) return make_dedekind_finite(*n);
  return std::nullopt;
}

std::vector<IdealFunction> canonical_generators(const DomainModel& model, std::size_t count) {
  std::vector<IdealFunction> out;
  const PointFamily* fam = nullptr;
  const TailChain* chain = nullptr;
  for (const auto& g : model.generators()) {
    if (!fam) fam = std::get_if<PointFamily>(&g);
    if (!chain) chain = std::get_if<TailChain>(&g);
  }
  if (chain && count > 0) out.push_back(chain->instantiate(0));
  if (fam) {
    Ordinal q(0);
    std::uint32_t j = fam->rank();
    while (out.size() < count) {
      auto anchor = fam->anchor_for(j == 0 ? q : Ordinal::omega_pow(j, 1) * q.successor());
      if (anchor) out.push_back(fam->member_at(*anchor));
      q = q.successor();
      if (!model.space().contains(Ordinal::omega_pow(j, 1) * q)) break;
    }
  }
  for (const auto& g : model.generators()) {
    if (out.size() >= count) break;
    if (const auto* f = std::get_if<IdealFunction>(&g)) out.push_back(*f);
  }
  if (out.size() < count)
    fail(ErrorCode::WindowTooSmall, "model has fewer than " + std::to_string(count) +
                                        " canonical generator instances");
  while (out.size() > count) out.pop_back();
  return out;
}

}  // namespace adklab
