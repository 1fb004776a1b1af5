#include "lagmat/hull.hpp"

#include <stdexcept>

namespace lagmat {

bool lp_feasible(const std::vector<std::vector<Rat>>& a,
                 const std::vector<Rat>& b) {
  const int m = static_cast<int>(a.size());
  const int nv = m ? static_cast<int>(a[0].size()) : 0;
  // Tableau with one artificial variable per row; minimize their sum.
  std::vector<std::vector<Rat>> t(m, std::vector<Rat>(nv + m + 1));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    const int flip = sign_of(b[i]) < 0 ? -1 : 1;
    for (int j = 0; j < nv; ++j) t[i][j] = flip * a[i][j];
    t[i][nv + i] = 1;
    t[i][nv + m] = flip * b[i];
    basis[i] = nv + i;
  }
  const auto cost = [&](int j) { return j >= nv ? Rat(1) : Rat(0); };
  for (;;) {
    // Reduced costs under the current basis.
    int entering = -1;
    for (int j = 0; j < nv + m && entering < 0; ++j) {
      Rat rc = cost(j);
      for (int i = 0; i < m; ++i)
        if (cost(basis[i]) != 0) rc -= t[i][j];
      if (sign_of(rc) < 0) entering = j;  // Bland: first improving column
    }
    if (entering < 0) break;
    int leaving = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      if (sign_of(t[i][entering]) <= 0) continue;
      const Rat ratio = t[i][nv + m] / t[i][entering];
      if (leaving < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leaving])) {
        leaving = i;
        best = ratio;
      }
    }
    if (leaving < 0)
      throw std::logic_error("lp_feasible: unbounded phase-I objective");
    const Rat pivot = t[leaving][entering];
    for (auto& x : t[leaving]) x /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leaving || t[i][entering] == 0) continue;
      const Rat f = t[i][entering];
      for (int j = 0; j <= nv + m; ++j) t[i][j] -= f * t[leaving][j];
    }
    basis[leaving] = entering;
  }
  Rat objective = 0;
  for (int i = 0; i < m; ++i)
    if (cost(basis[i]) != 0) objective += t[i][nv + m];
  return objective == 0;
}

namespace {

// [A,B] fails to be an edge iff some convex combination of the other points
// lands on the segment: sum l_x X = B + alpha (A - B), sum l_x = 1,
// 0 <= alpha <= 1.
bool segment_blocked(const std::vector<std::vector<Rat>>& points, int pa,
                     int pb) {
  const int dim = static_cast<int>(points[pa].size());
  std::vector<int> others;
  for (int i = 0; i < static_cast<int>(points.size()); ++i)
    if (i != pa && i != pb) others.push_back(i);
  const int nv = static_cast<int>(others.size()) + 2;  // lambdas, alpha, slack
  std::vector<std::vector<Rat>> a(dim + 2, std::vector<Rat>(nv));
  std::vector<Rat> b(dim + 2);
  for (int d = 0; d < dim; ++d) {
    for (std::size_t x = 0; x < others.size(); ++x)
      a[d][x] = points[others[x]][d];
    a[d][others.size()] = points[pb][d] - points[pa][d];  // -alpha (A - B)
    b[d] = points[pb][d];
  }
  for (std::size_t x = 0; x < others.size(); ++x) a[dim][x] = 1;
  b[dim] = 1;
  a[dim + 1][others.size()] = 1;
  a[dim + 1][others.size() + 1] = 1;  // alpha + slack = 1
  b[dim + 1] = 1;
  return lp_feasible(a, b);
}

}  // namespace

std::vector<std::pair<int, int>> brute_hull_edges(
    const std::vector<std::vector<Rat>>& points) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(points.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(points.size()); ++j)
      if (!segment_blocked(points, i, j)) edges.push_back({i, j});
  return edges;
}

bool hull_edges_are_exchange_lengths(const std::vector<Transversal>& vertices) {
  std::vector<std::vector<Rat>> points;
  points.reserve(vertices.size());
  for (const auto& v : vertices) {
    std::vector<Rat> p;
    for (int i = 1; i <= v.n; ++i) p.emplace_back(v.sign(i));
    points.push_back(std::move(p));
  }
  for (const auto& [i, j] : brute_hull_edges(points)) {
    Rat len2 = 0;
    for (std::size_t d = 0; d < points[i].size(); ++d) {
      const Rat diff = points[i][d] - points[j][d];
      len2 += diff * diff;
    }
    if (len2 != 4 && len2 != 8) return false;
  }
  return true;
}

}  // namespace lagmat
