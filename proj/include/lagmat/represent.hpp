#pragma once

// Matrix representations of Lagrangian matroids: a pair of square blocks
// (left columns labeled 1..n, right columns 1*..n*) whose product
// left * right^T is symmetric.  Bases are the admissible column sets with
// non-vanishing minor; the fundamental reduction moves a chosen basis F to
// the right block and normalizes it to the identity, leaving a symmetric
// left block whose diagonal minors carry the basis signs.

#include <vector>

#include "lagmat/exact.hpp"
#include "lagmat/matroid.hpp"

namespace lagmat {

template <class F>
struct Representation {
  int n = 0;
  Matrix<F> left;
  Matrix<F> right;

  // Validates: blocks square of equal size, left*right^T symmetric, and the
  // n x 2n concatenation of full rank.
  static Representation make(Matrix<F> left, Matrix<F> right);
};

using QRepresentation = Representation<Rat>;
using F2Representation = Representation<GF2>;

// All admissible k-subsets of column labels whose n x k column submatrix has
// rank k; for k = n this is the non-vanishing of the n x n minor.
template <class F>
BasisSystem extract_bases(const Representation<F>& rep, int k);

struct FundamentalReduction {
  Transversal fundamental;
  QMatrix cf;  // symmetric; rows/columns indexed by underlying index 1..n
};

// Swap column i with i* for every unstarred i in F, negating the column
// arriving on the left, then reduce the right block to the identity.
FundamentalReduction fundamental_reduction(const Representation<Rat>& rep,
                                           const Transversal& f);

// Sign of the diagonal minor of cf on the underlying indices of G \ F:
// +1/-1 when G is a basis, 0 otherwise.  The empty minor is +1.
int sign_of_basis(const FundamentalReduction& fr, const Transversal& g);

extern template struct Representation<Rat>;
extern template struct Representation<GF2>;
extern template BasisSystem extract_bases(const Representation<Rat>&, int);
extern template BasisSystem extract_bases(const Representation<GF2>&, int);

}  // namespace lagmat
