#pragma once

// Relative sign functions and oriented Lagrangian matroids.  A sign
// assignment on the bases (fixed +1 at a fundamental basis F) is an
// orientation when, on every 2-dimensional cube face, long polytope edges
// between equal-height bases join equal signs, long edges between bases two
// apart in height join opposite signs, and in a four-basis short-edged
// square an odd-one-out sign sits at the extreme height.  Orientations
// extend to a two-argument sign table which is the canonical identity of
// the oriented matroid.

#include <optional>
#include <vector>

#include "lagmat/matroid.hpp"
#include "lagmat/represent.hpp"

namespace lagmat {

inline constexpr int kMaxOrientationBases = 24;  // 2^(|B|-1) scan guard

// Signs on the bases of one matroid, aligned with BasisSystem::bases order.
struct RelativeSigns {
  Transversal fundamental;
  std::vector<std::int8_t> signs;  // +1 / -1 per basis

  int at(const BasisSystem& m, const Transversal& t) const;
};

RelativeSigns make_relative_signs(
    const BasisSystem& m, const Transversal& fundamental,
    const std::vector<std::pair<Transversal, int>>& assignment);

// Constant sign rules, numbered for violation reports.
enum class OrientationRule {
  HorizontalLongEqual = 1,   // long edge, equal heights: signs agree
  VerticalLongOpposite = 2,  // long edge, heights two apart: signs differ
  ShortSquareExtreme = 3,    // 3-vs-1 split only at the lowest/highest basis
  FundamentalPositive = 4,   // sign at the fundamental basis is +1
};

struct OrientationViolation {
  OrientationRule rule;
  int axis_i = 0, axis_j = 0;        // 1-based cube-face coordinates
  Mask fixed_stars = 0;              // star pattern on the other coordinates
  std::vector<Transversal> members;  // bases involved
};

std::string describe(const OrientationViolation& v);

// Empty result iff rs is an orientation relative to rs.fundamental.
// Checking walks one cube 2-face at a time.
std::vector<OrientationViolation> validate_orientation(const BasisSystem& m,
                                                       const RelativeSigns& rs);

// Total two-argument table; 0 whenever an argument is not a basis.
struct SignTable {
  int n = 0;
  std::vector<Transversal> bases;  // notation order
  std::vector<std::int8_t> table;  // table[i * |B| + j] = s(bases[i], bases[j])

  int index_of(const Transversal& t) const;
  int sign(const Transversal& a, const Transversal& b) const;

  friend bool operator==(const SignTable&, const SignTable&) = default;
};

// s(G, A) = s_F(A) * s_F(G) * (-1)^{|G \ (F u A)|}; requires rs valid.
SignTable extend_signs(const BasisSystem& m, const RelativeSigns& rs);

// Row of the table at a new fundamental basis; valid by construction.
RelativeSigns change_fundamental(const SignTable& st, const Transversal& g);

// All distinct orientations, scanning the 2^(|B|-1) sign assignments seeded
// at the lexicographically least basis, in assignment order.  The kernel
// evaluates precompiled face constraints (OpenMP); the serial reference
// re-validates every assignment with validate_orientation.
std::vector<SignTable> enumerate_orientations(const BasisSystem& m);
std::vector<SignTable> enumerate_orientations_serial(const BasisSystem& m);

// The unique orientation of an even matroid: (-1)^(h/2) relative to the
// lexicographically least basis.
SignTable canonical_even_orientation(const BasisSystem& m);

// Relative signs read off a representation: diagonal-minor signs of the
// fundamental reduction, one per basis.
RelativeSigns orientation_from_representation(const FundamentalReduction& fr,
                                              const BasisSystem& m);

// First signed permutation (in ordering enumeration order) carrying the
// bases of m1 onto m2, and the table s1 onto s2 when given.
std::optional<AdmissibleOrdering> find_isomorphism(const BasisSystem& m1,
                                                   const BasisSystem& m2);
std::optional<AdmissibleOrdering> find_isomorphism(const BasisSystem& m1,
                                                   const SignTable& s1,
                                                   const BasisSystem& m2,
                                                   const SignTable& s2);

}  // namespace lagmat
