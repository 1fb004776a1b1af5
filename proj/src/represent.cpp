#include "lagmat/represent.hpp"

#include <stdexcept>

namespace lagmat {

template <class F>
Representation<F> Representation<F>::make(Matrix<F> left, Matrix<F> right) {
  const int n = left.rows();
  if (n < 1 || n > kMaxGround)
    throw domain_error("representation: ground size out of range");
  if (left.cols() != n || right.rows() != n || right.cols() != n)
    throw domain_error("representation: blocks must be square of equal size");
  if (!(left * right.transposed()).symmetric())
    throw domain_error("representation: left * right^T is not symmetric");
  Matrix<F> concat(n, 2 * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      concat.at(r, c) = left.at(r, c);
      concat.at(r, n + c) = right.at(r, c);
    }
  if (rank(concat) != n)
    throw domain_error("representation: the n x 2n concatenation is rank-deficient");
  return Representation<F>{n, std::move(left), std::move(right)};
}

namespace {

// Columns of the concatenation picked by an admissible set: label i comes
// from the left block, label i* from the right block.
template <class F>
Matrix<F> picked_columns(const Representation<F>& rep, const AdmissibleSet& s) {
  Matrix<F> m(rep.n, s.size());
  int c = 0;
  for (const auto& x : s.members()) {
    for (int r = 0; r < rep.n; ++r)
      m.at(r, c) = x.starred ? rep.right.at(r, x.underlying - 1)
                             : rep.left.at(r, x.underlying - 1);
    ++c;
  }
  return m;
}

}  // namespace

template <class F>
BasisSystem extract_bases(const Representation<F>& rep, int k) {
  if (k < 0 || k > rep.n)
    throw domain_error("extract_bases: rank must be in 0..n");
  std::vector<AdmissibleSet> found;
  if (k == rep.n) {
    for (Mask stars = 0; stars < (Mask{1} << rep.n); ++stars) {
      const Transversal t{rep.n, stars};
      if (!(det(picked_columns(rep, t.as_set())) == F{}))
        found.push_back(t.as_set());
    }
    if (found.empty())
      throw domain_error("extract_bases: no admissible non-vanishing minor");
  } else {
    for (Mask support = 0; support < (Mask{1} << rep.n); ++support) {
      if (popcount(support) != k) continue;
      // Star patterns over the chosen underlying indices.
      for (Mask sub = support;; sub = (sub - 1) & support) {
        const AdmissibleSet s{rep.n, support & ~sub, sub};
        if (rank(picked_columns(rep, s)) == k) found.push_back(s);
        if (sub == 0) break;
      }
    }
  }
  return BasisSystem::make(rep.n, k, std::move(found));
}

FundamentalReduction fundamental_reduction(const Representation<Rat>& rep,
                                           const Transversal& f) {
  if (f.n != rep.n)
    throw domain_error("fundamental_reduction: mismatched ground size");
  // Move the columns labeled by f to the right block: for unstarred i in f,
  // exchange columns i and i*, negating the one arriving on the left.
  QMatrix left = rep.left, right = rep.right;
  for (int i = 0; i < rep.n; ++i) {
    if ((f.stars >> i) & 1) continue;  // i* stays on the left
    for (int r = 0; r < rep.n; ++r) {
      Rat incoming = -right.at(r, i);
      right.at(r, i) = rep.left.at(r, i);
      left.at(r, i) = std::move(incoming);
    }
  }
  if (det(right) == 0)
    throw domain_error("fundamental_reduction: " + to_string(f) +
                       " is not a basis (right block singular)");
  QMatrix cf = normalize_right_block(left, right);
  if (!cf.symmetric())
    throw std::logic_error(
        "fundamental_reduction: reduced left block is not symmetric");
  return FundamentalReduction{f, std::move(cf)};
}

int sign_of_basis(const FundamentalReduction& fr, const Transversal& g) {
  if (g.n != fr.fundamental.n)
    throw domain_error("sign_of_basis: mismatched ground size");
  const Mask moved = g.stars ^ fr.fundamental.stars;
  std::vector<int> idx;
  for (int i = 0; i < g.n; ++i)
    if ((moved >> i) & 1) idx.push_back(i);
  return sign_of(det(fr.cf.select(idx, idx)));
}

template struct Representation<Rat>;
template struct Representation<GF2>;
template BasisSystem extract_bases(const Representation<Rat>&, int);
template BasisSystem extract_bases(const Representation<GF2>&, int);

}  // namespace lagmat
