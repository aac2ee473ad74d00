#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adklab/ordinal.hpp"
#include "adklab/spectrum.hpp"

namespace adklab {

// Subsets of a spectrum representable as finite unions of intervals
// intersected with Cantor-Bendixson rank bands. Internally the set is kept in
// a canonical "slice" form: for each rank j, the quotients q of the rank-j
// members w^j*q form a sorted list of half-open intervals (lo, hi] of
// successor ordinals. This form is unique per point set, so equality is
// structural, and the class is closed under union, intersection and
// complement (so open sets like "the isolated points" are representable,
// not just the clopen/closed fragment).
class PointSet {
 public:
  // Quotient interval (lo, hi], holding the successor ordinals in between.
  struct Iv {
    Ordinal lo;
    Ordinal hi;
    friend bool operator==(const Iv&, const Iv&) = default;
  };

  // A serialization / iteration row: points of the interval with rank in
  // [rank_ge, rank_le]. lower == nullopt means the interval starts at 0
  // inclusive.
  struct Piece {
    std::optional<Ordinal> lower;
    Ordinal upper;
    std::uint32_t rank_ge = 0;
    std::optional<std::uint32_t> rank_le;
  };

  // Disjoint space intervals annotated with the rank mask they carry; the
  // normal form used by order_type, enumeration and serialization.
  struct Atom {
    Ordinal lo;  // exclusive
    Ordinal hi;  // inclusive
    std::uint64_t mask = 0;
  };

  explicit PointSet(SpectrumSpace space);

  static PointSet empty(const SpectrumSpace& s) { return PointSet(s); }
  static PointSet whole(const SpectrumSpace& s);
  static PointSet singleton(const SpectrumSpace& s, const Ordinal& p);
  // (lower, upper], or [0, upper] when lower is nullopt; optionally rank-banded.
  static PointSet interval(const SpectrumSpace& s, std::optional<Ordinal> lower,
                           Ordinal upper, std::uint32_t rank_ge = 0,
                           std::optional<std::uint32_t> rank_le = std::nullopt);
  static PointSet from_pieces(const SpectrumSpace& s, const std::vector<Piece>& pieces);

  const SpectrumSpace& space() const { return space_; }

  bool is_empty() const;
  bool contains(const Ordinal& p) const;

  PointSet set_union(const PointSet& o) const;
  PointSet set_intersect(const PointSet& o) const;
  PointSet set_difference(const PointSet& o) const;
  PointSet set_complement() const;

  PointSet closure() const;
  bool is_closed() const { return *this == closure(); }
  bool is_open() const { return set_complement().is_closed(); }
  bool is_clopen() const { return is_closed() && is_open(); }
  bool is_dense() const { return closure() == whole(space_); }

  // Smallest member (sets are well-ordered). nullopt when empty.
  std::optional<Ordinal> min_point() const;
  // Largest member; nullopt when empty or when the set has no maximum
  // (possible for non-closed sets and for unbounded discrete sets).
  std::optional<Ordinal> max_point() const;
  // Supremum of the set inside the ambient interval; nullopt when empty.
  std::optional<Ordinal> sup_point() const;

  // True when the set has finitely many points; fills them in order.
  bool finite_members(std::vector<Ordinal>& out, std::size_t cap = SIZE_MAX) const;

  std::vector<Atom> atoms() const;
  std::vector<Piece> pieces() const;

  bool operator==(const PointSet& o) const;
  // Deterministic total order (used for tie-breaking), not containment.
  static int lex_compare(const PointSet& a, const PointSet& b);

  std::string to_string() const;

  bool has_zero() const { return has_zero_; }
  const std::vector<std::vector<Iv>>& slices() const { return slices_; }

  // Ranks j for which (lo, hi] contains a rank-j point.
  static std::uint64_t realizable_mask(const Ordinal& lo, const Ordinal& hi,
                                       std::uint32_t max_rank);

 private:
  void add_slice_interval(std::uint32_t j, Ordinal lo, Ordinal hi);
  void normalize();

  SpectrumSpace space_;
  bool has_zero_ = false;
  std::vector<std::vector<Iv>> slices_;  // index = rank
};

}  // namespace adklab
