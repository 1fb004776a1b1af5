#pragma once

// Inertia of symmetric rational matrices by two independent routes:
//   - congruence diagonalization (simultaneous row/column elimination), and
//   - the principal-minor method: permute to a regular arrangement, then
//     count sign changes in the sequence of leading principal minors with
//     zero entries discounted.
// Signs do not exist in characteristic 2, so everything here is Q-only.

#include <vector>

#include "lagmat/exact.hpp"

namespace lagmat {

struct InertiaProfile {
  int rank = 0;
  int positives = 0;
  int negatives = 0;

  int signature() const { return positives - negatives; }
  int index() const { return negatives; }

  friend bool operator==(const InertiaProfile&, const InertiaProfile&) = default;
};

// Diagonalize by congruence and count diagonal signs.  Zero diagonal pivots
// are repaired by adding a suitable row/column pair before pivoting.
InertiaProfile congruence_diagonalize(const QMatrix& s);

// A permutation p (0-based, arranged(i,j) = s(p[i], p[j])) such that in the
// permuted matrix no two consecutive leading principal minors P_{i-1}, P_i
// vanish for 1 <= i < r and P_r is non-zero, r = rank(s).  Depth-first
// search, smallest index first.  Existence is classical; exhaustion of the
// search signals an internal bug, not bad input.
std::vector<int> regular_arrangement(const QMatrix& s);

QMatrix apply_symmetric_permutation(const QMatrix& s, const std::vector<int>& p);

// Leading principal minors P_0 = 1, P_1, ..., P_len of a square matrix.
std::vector<Rat> leading_principal_minors(const QMatrix& s, int len);

// Index = number of sign changes in P_0..P_r of a regular arrangement after
// deleting zero entries; rank always from exact elimination.
InertiaProfile kronecker_index(const QMatrix& s);

}  // namespace lagmat
