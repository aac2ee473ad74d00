#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adklab/extnat.hpp"
#include "adklab/ordinal.hpp"
#include "adklab/point_set.hpp"
#include "adklab/spectrum.hpp"

namespace adklab {

// Piecewise rule: constant, or affine in the finite index of the point
// (value at the finite ordinal k is slope*k + offset). Affine rules are the
// one unbounded shape admitted; they only live on segments of finite points.
struct Rule {
  enum class Kind { Const, Linear };
  Kind kind = Kind::Const;
  std::int64_t slope = 0;
  std::int64_t offset = 0;

  static Rule constant(std::int64_t c) { return {Kind::Const, 0, c}; }
  static Rule linear(std::int64_t a, std::int64_t b) { return {Kind::Linear, a, b}; }

  bool is_const() const { return kind == Kind::Const; }
  std::int64_t eval_at(std::uint64_t k) const {
    return is_const() ? offset : slope * static_cast<std::int64_t>(k) + offset;
  }
  friend bool operator==(const Rule&, const Rule&) = default;
};

// nu_I as data: a finite partition of the spectrum into segments with rules,
// plus finitely many per-point overrides. Values are naturals; the fg flag
// marks functions standing for finitely generated ideals (clopen support).
class IdealFunction {
 public:
  // Segment i covers (upper[i-1], upper[i]]; segment 0 covers [0, upper[0]].
  struct Segment {
    Ordinal upper;
    Rule rule;
    friend bool operator==(const Segment&, const Segment&) = default;
  };

  IdealFunction(SpectrumSpace space, std::vector<Segment> segments,
                std::map<Ordinal, std::uint64_t> overrides, bool fg);

  static IdealFunction constant(const SpectrumSpace& s, std::uint64_t c, bool fg = false);
  static IdealFunction zero(const SpectrumSpace& s) { return constant(s, 0, false); }
  // 0/1 indicator of a set differing from an interval union by finitely many
  // points; anything else is an UnsupportedShape.
  static IdealFunction indicator(const PointSet& support, bool fg = true);

  const SpectrumSpace& space() const { return space_; }
  const std::vector<Segment>& segments() const { return segments_; }
  const std::map<Ordinal, std::uint64_t>& overrides() const { return overrides_; }
  bool fg() const { return fg_; }
  IdealFunction with_fg(bool fg) const;

  std::uint64_t eval(const Ordinal& p) const;

  ExtNat sup() const;
  ExtNat sup_over(const PointSet& window) const;

  bool is_zero() const;
  // Proper: positive somewhere (stands for an ideal strictly below the ring).
  bool is_proper() const { return !is_zero(); }

  // Lower semicontinuity; on failure returns a violating limit point.
  std::optional<Ordinal> lsc_violation() const;
  bool is_lsc() const { return !lsc_violation().has_value(); }

  PointSet level_set(std::uint64_t j) const;  // {p : value >= j}
  PointSet support() const { return level_set(1); }
  IdealFunction radical() const;

  struct Continuity {
    bool continuous = false;
    std::optional<std::uint64_t> level;   // offending level when false
    std::optional<Ordinal> witness;       // boundary point of the level set
  };
  Continuity continuity() const;
  bool is_continuous() const { return continuity().continuous; }

  static IdealFunction add(const IdealFunction& f, const IdealFunction& g);
  static IdealFunction min_fn(const IdealFunction& f, const IdealFunction& g);
  static IdealFunction max_fn(const IdealFunction& f, const IdealFunction& g);
  // Pointwise difference; requires g <= f everywhere (NegativeValue otherwise).
  static IdealFunction sub_exact(const IdealFunction& f, const IdealFunction& g);
  IdealFunction scale(std::uint64_t n) const;

  static bool pointwise_leq(const IdealFunction& f, const IdealFunction& g);

  bool operator==(const IdealFunction& o) const;

  std::string to_string() const;

 private:
  void normalize();
  std::size_t segment_index(const Ordinal& p) const;

  SpectrumSpace space_;
  std::vector<Segment> segments_;
  std::map<Ordinal, std::uint64_t> overrides_;
  bool fg_ = false;
};

class OrderIso;
// Re-index f along the enumeration of a closed set (the overring view: the
// restricted spectrum becomes a space in its own right).
IdealFunction restrict_function(const IdealFunction& f, const PointSet& window,
                                const OrderIso& iso);

}  // namespace adklab
