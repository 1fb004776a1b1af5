#pragma once

// Basis systems and the Maximality Property: a collection of admissible
// k-sets is a symplectic matroid iff every signed-permutation ordering has a
// Gale-dominant member.  Rank-n (Lagrangian) systems are the ones the rest
// of the library operates on.  Also: height, evenness, and the exhaustive
// census of small Lagrangian matroids (OpenMP kernel + serial reference).

#include <optional>
#include <vector>

#include "lagmat/ground.hpp"

namespace lagmat {

inline constexpr int kMaxCensusGround = 4;  // 2^(2^n) candidate collections

struct BasisSystem {
  int n = 0;
  int k = 0;
  std::vector<AdmissibleSet> bases;  // sorted by notation, duplicates removed

  static BasisSystem make(int n, int k, std::vector<AdmissibleSet> bases);
  static BasisSystem lagrangian(int n, const std::vector<Transversal>& bases);

  bool is_lagrangian() const { return k == n; }
  std::vector<Transversal> transversals() const;  // requires k == n
  bool contains(const Transversal& t) const;
  // Position of t in `bases`, or -1.  Relative-sign vectors are aligned to
  // this order.
  int index_of(const Transversal& t) const;

  friend bool operator==(const BasisSystem&, const BasisSystem&) = default;
};

struct MaximalityReport {
  bool holds = false;
  std::optional<AdmissibleOrdering> witness;  // first ordering with no maximum
};

// Scan every ordering; report the first one without a Gale-dominant basis.
MaximalityReport check_maximality(const BasisSystem& s);
// Reference implementation: all-pairs compare_sets dominance per ordering.
MaximalityReport check_maximality_naive(const BasisSystem& s);

// Height of a relative to the fundamental transversal f: n - |a n f|.
int height(const Transversal& a, const Transversal& f);

// All star-counts share one parity (rank n only).
bool is_even(const BasisSystem& s);

// Every non-empty collection of transversals passing check_maximality, in
// increasing order of the collection bit mask (transversal t = star mask
// contributes bit t).  OpenMP kernel and serial reference.
std::vector<BasisSystem> enumerate_lagrangian_matroids(int n);
std::vector<BasisSystem> enumerate_lagrangian_matroids_serial(int n);

// Mask-level census used by the kernels and the acceptance equivalences:
// flag[mask] for every non-empty collection mask.
std::vector<char> lagrangian_collection_flags(int n, bool parallel);

BasisSystem collection_from_mask(int n, unsigned long long mask);

}  // namespace lagmat
