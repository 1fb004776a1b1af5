#include "lagmat/inertia.hpp"

#include <numeric>
#include <stdexcept>

namespace lagmat {

namespace {

void require_symmetric(const QMatrix& s, const char* who) {
  if (!s.symmetric())
    throw domain_error(std::string(who) + ": matrix must be symmetric");
}

}  // namespace

InertiaProfile congruence_diagonalize(const QMatrix& input) {
  require_symmetric(input, "congruence_diagonalize");
  QMatrix a = input;
  const int n = a.rows();
  InertiaProfile profile;
  for (int k = 0; k < n; ++k) {
    if (a.at(k, k) == 0) {
      // Find j > k with a[k][j] != 0 and fold row/column j into k with a
      // scale t = +-1 chosen so the new diagonal entry is non-zero:
      // a[j][j] + 2t a[k][j] vanishes for at most one value of t.
      int j = -1;
      for (int c = k + 1; c < n; ++c)
        if (a.at(k, c) != 0) {
          j = c;
          break;
        }
      if (j < 0) continue;  // trailing row is zero; no rank contribution
      const Rat t = (a.at(j, j) + 2 * a.at(k, j) != 0) ? Rat(1) : Rat(-1);
      for (int c = 0; c < n; ++c) a.at(k, c) += t * a.at(j, c);
      for (int r = 0; r < n; ++r) a.at(r, k) += t * a.at(r, j);
    }
    const Rat pivot = a.at(k, k);
    if (sign_of(pivot) > 0)
      ++profile.positives;
    else
      ++profile.negatives;
    for (int r = k + 1; r < n; ++r) {
      if (a.at(r, k) == 0) continue;
      const Rat f = a.at(r, k) / pivot;
      for (int c = k; c < n; ++c) a.at(r, c) -= f * a.at(k, c);
      for (int c = 0; c < n; ++c) a.at(c, r) = a.at(r, c);
    }
  }
  profile.rank = profile.positives + profile.negatives;
  return profile;
}

QMatrix apply_symmetric_permutation(const QMatrix& s, const std::vector<int>& p) {
  const int n = s.rows();
  QMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = s.at(p[i], p[j]);
  return out;
}

std::vector<Rat> leading_principal_minors(const QMatrix& s, int len) {
  std::vector<Rat> minors;
  minors.reserve(len + 1);
  minors.emplace_back(1);
  std::vector<int> idx;
  for (int m = 1; m <= len; ++m) {
    idx.push_back(m - 1);
    minors.push_back(det(s.select(idx, idx)));
  }
  return minors;
}

namespace {

bool extend_arrangement(const QMatrix& s, int r, std::vector<int>& prefix,
                        std::vector<char>& used, const Rat& prev_minor) {
  const int n = s.rows();
  const int depth = static_cast<int>(prefix.size());
  if (depth == r) {
    // Constraints beyond the rank are vacuous; fill ascending.
    for (int i = 0; i < n; ++i)
      if (!used[i]) prefix.push_back(i);
    return true;
  }
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    prefix.push_back(i);
    // Leading minor of the permuted matrix at the current prefix size.
    const Rat minor = det(s.select(prefix, prefix));
    const int m = depth + 1;
    const bool ok = m == r ? minor != 0 : !(minor == 0 && prev_minor == 0);
    if (ok) {
      used[i] = 1;
      if (extend_arrangement(s, r, prefix, used, minor)) return true;
      used[i] = 0;
    }
    prefix.pop_back();
  }
  return false;
}

}  // namespace

std::vector<int> regular_arrangement(const QMatrix& s) {
  require_symmetric(s, "regular_arrangement");
  const int r = rank(s);
  std::vector<int> prefix;
  std::vector<char> used(s.rows(), 0);
  if (!extend_arrangement(s, r, prefix, used, Rat(1)))
    throw std::logic_error(
        "regular_arrangement: search exhausted, which contradicts the "
        "classical existence guarantee");
  return prefix;
}

InertiaProfile kronecker_index(const QMatrix& s) {
  require_symmetric(s, "kronecker_index");
  const int r = rank(s);
  const QMatrix arranged = apply_symmetric_permutation(s, regular_arrangement(s));
  const std::vector<Rat> minors = leading_principal_minors(arranged, r);
  int changes = 0;
  int last = 1;  // sign of P_0
  for (int i = 1; i <= r; ++i) {
    const int sg = sign_of(minors[i]);
    if (sg == 0) continue;  // discounted
    if (sg != last) ++changes;
    last = sg;
  }
  return InertiaProfile{r, r - changes, changes};
}

}  // namespace lagmat
