#pragma once

#include <optional>
#include <vector>

#include "adklab/ordinal.hpp"
#include "adklab/point_set.hpp"
#include "adklab/spectrum.hpp"

namespace adklab {

// Monotone enumeration of a closed representable set: the set with its
// induced topology is order-isomorphic to a spectrum [0, top] (or to the
// countable discrete space), and the isomorphism is realized blockwise so
// both directions are computable exactly.
class OrderIso {
 public:
  struct Block {
    PointSet::Atom atom;   // source points
    Ordinal offset;        // index of the first point of the block
    Ordinal length;        // order type of the block
  };

  const SpectrumSpace& source() const { return source_; }
  const SpectrumSpace& target() const { return target_; }

  // Index of a member point; the point must belong to the set.
  Ordinal index_of(const Ordinal& p) const;
  // Member point at a given index of the target space.
  Ordinal point_at(const Ordinal& idx) const;

  const std::vector<Block>& blocks() const { return blocks_; }
  bool zero_member() const { return zero_member_; }

 private:
  friend OrderIso order_type(const PointSet& s);
  SpectrumSpace source_ = SpectrumSpace::interval(Ordinal(0));
  SpectrumSpace target_ = SpectrumSpace::interval(Ordinal(0));
  bool zero_member_ = false;
  std::vector<Block> blocks_;
};

// Order type of a closed nonempty representable set; fails with
// UnsupportedShape when the set is empty or has no interval model (the only
// such case is a non-closed input, which callers are expected to avoid).
OrderIso order_type(const PointSet& s);

}  // namespace adklab
