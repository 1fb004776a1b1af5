#pragma once

// Ground-set combinatorics on J = {1,...,n} u {1*,...,n*}: the star
// involution, admissible sets and transversals stored as bit masks,
// signed-permutation orderings of J, Gale comparison of admissible sets,
// and parsing/formatting of the compact basis notation ("12*3").

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lagmat/errors.hpp"

namespace lagmat {

using Mask = std::uint32_t;

inline constexpr int kMaxGround = 16;        // bit-mask capacity
inline constexpr int kMaxOrderingGround = 8; // 2^n * n! enumeration guard

inline constexpr Mask full_mask(int n) { return (Mask{1} << n) - 1; }
int popcount(Mask m);

// One element of J: an underlying index in 1..n, possibly starred.
struct GroundIndex {
  int underlying = 1;
  bool starred = false;

  friend bool operator==(const GroundIndex&, const GroundIndex&) = default;
  friend auto operator<=>(const GroundIndex&, const GroundIndex&) = default;
};

// The involution i <-> i*.
inline GroundIndex star(GroundIndex x) { return {x.underlying, !x.starred}; }

// True iff no pair {i, i*} is contained in the collection.
bool is_admissible(const std::vector<GroundIndex>& elems);

// A subset of J with at most one of {i, i*} per underlying index.
// Bit i-1 of `plus` marks membership of i, bit i-1 of `stars` of i*.
struct AdmissibleSet {
  int n = 0;
  Mask plus = 0;
  Mask stars = 0;

  static AdmissibleSet make(int n, const std::vector<GroundIndex>& elems);

  int size() const { return popcount(plus | stars); }
  bool contains(GroundIndex x) const;
  std::vector<GroundIndex> members() const;  // ascending underlying index

  friend bool operator==(const AdmissibleSet&, const AdmissibleSet&) = default;
};

// An admissible n-subset: one of {i, i*} for every i.  Bit i-1 of `stars`
// set means i* was chosen (cube coordinate -1), clear means i (+1).
struct Transversal {
  int n = 0;
  Mask stars = 0;

  int sign(int i) const { return (stars >> (i - 1)) & 1 ? -1 : +1; }
  bool contains(GroundIndex x) const;
  AdmissibleSet as_set() const;

  friend bool operator==(const Transversal&, const Transversal&) = default;
};

// --- basis notation ---------------------------------------------------
//
// Elements are written in ascending underlying order, each as its decimal
// index optionally followed by '*'.  For n <= 9 tokens are concatenated
// ("12*3"); for larger ground sets they are comma-separated ("1,2*,10").

std::string to_string(const AdmissibleSet& s);
std::string to_string(const Transversal& t);
AdmissibleSet parse_admissible_set(const std::string& text, int n);
Transversal parse_transversal(const std::string& text, int n);

// Deterministic order on transversals: byte order of canonical notation.
bool notation_less(const Transversal& a, const Transversal& b);
bool notation_less(const AdmissibleSet& a, const AdmissibleSet& b);

// --- signed-permutation orderings --------------------------------------
//
// An element w of the hyperoctahedral group, encoded by the permutation it
// applies to the underlying indices plus a flip bit per position.  w induces
// the ordering of J obtained by applying w to the base order
//   n* < (n-1)* < ... < 1* < 1 < 2 < ... < n,
// so position k from below holds perm[k-1], starred when bit k-1 of flips
// is set.  Induced orders are admissible: i < j implies j* < i*.
struct AdmissibleOrdering {
  int n = 0;
  std::vector<int> perm;  // permutation of 1..n
  Mask flips = 0;         // bit k-1: position k flipped

  static AdmissibleOrdering base(int n);  // identity: the base order itself

  friend bool operator==(const AdmissibleOrdering&,
                         const AdmissibleOrdering&) = default;
};

inline constexpr int element_code(int underlying, bool starred) {
  return 2 * (underlying - 1) + (starred ? 1 : 0);
}

// Rank of every element of J under the order induced by w (0 = smallest).
struct OrderingRanks {
  int n = 0;
  std::array<std::int8_t, 2 * kMaxGround> rank{};

  int of(GroundIndex x) const {
    return rank[element_code(x.underlying, x.starred)];
  }
};

OrderingRanks ordering_ranks(const AdmissibleOrdering& w);

// The group action behind the ordering: w sends i to perm[i-1], starred when
// bit i-1 of flips is set, and commutes with the star involution.
GroundIndex apply(const AdmissibleOrdering& w, GroundIndex x);
Transversal apply(const AdmissibleOrdering& w, const Transversal& t);

// All 2^n * n! orderings, lexicographic in (perm, flips).  Guarded by
// kMaxOrderingGround.  The callback form enumerates without materializing;
// returning false from the callback stops early.
std::vector<AdmissibleOrdering> enumerate_orderings(int n);
void for_each_ordering(int n,
                       const std::function<bool(const AdmissibleOrdering&)>& fn);
long long ordering_count(int n);

enum class GaleOrder { Less, Greater, Equal, Incomparable };

// Componentwise comparison of equal-size admissible sets after sorting each
// ascending under the order induced by w.
GaleOrder compare_sets(const AdmissibleOrdering& w, const AdmissibleSet& a,
                       const AdmissibleSet& b);

// Sorted ranks of a set's members under precomputed ordering ranks
// (ascending); the workhorse behind compare_sets and the maximality scan.
std::vector<int> sorted_ranks(const OrderingRanks& r, const AdmissibleSet& s);

}  // namespace lagmat
