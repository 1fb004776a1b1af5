#include "lagmat/pathindex.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace lagmat {

namespace {

struct AdjacencyView {
  std::vector<Transversal> vertices;
  std::vector<std::vector<int>> nbrs;  // vertex index -> neighbour indices

  int vertex_index(const Transversal& t) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i].stars == t.stars) return static_cast<int>(i);
    return -1;
  }
};

AdjacencyView adjacency_of(const PolytopeSkeleton& sk) {
  AdjacencyView a{sk.vertices, std::vector<std::vector<int>>(sk.vertices.size())};
  for (const auto& e : sk.edges) {
    const int x = a.vertex_index(e.a), y = a.vertex_index(e.b);
    a.nbrs[x].push_back(y);
    a.nbrs[y].push_back(x);
  }
  return a;
}

int max_height_of(const std::vector<Transversal>& vertices,
                  const Transversal& f) {
  int best = 0;
  for (const auto& v : vertices) best = std::max(best, height(v, f));
  return best;
}

// Greedy walk over a prebuilt adjacency view.
std::vector<int> greedy_path(const AdjacencyView& adj, const Transversal& f) {
  const int start = adj.vertex_index(f);
  if (start < 0)
    throw domain_error("increasing path: " + to_string(f) + " is not a basis");
  const int top = max_height_of(adj.vertices, f);
  std::vector<int> path{start};
  int current = start;
  while (height(adj.vertices[current], f) < top) {
    int next = -1;
    int next_h = 0;
    std::string next_name;
    for (const int y : adj.nbrs[current]) {
      const int hy = height(adj.vertices[y], f);
      if (hy <= height(adj.vertices[current], f)) continue;
      const std::string name = to_string(adj.vertices[y]);
      if (next < 0 || hy < next_h || (hy == next_h && name < next_name)) {
        next = y;
        next_h = hy;
        next_name = name;
      }
    }
    if (next < 0)
      throw std::logic_error(
          "increasing path: stuck below maximal height, which contradicts "
          "the polytope ascent guarantee");
    path.push_back(next);
    current = next;
  }
  return path;
}

}  // namespace

IncreasingPath find_increasing_path(const BasisSystem& m, const Transversal& f) {
  const AdjacencyView adj = adjacency_of(compute_edges(m));
  IncreasingPath p{f, {}};
  for (const int v : greedy_path(adj, f)) p.vertices.push_back(adj.vertices[v]);
  return p;
}

IndexReport index_relative(const BasisSystem& m, const SignTable& st,
                           const Transversal& f) {
  if (st.index_of(f) < 0)
    throw domain_error("index_relative: " + to_string(f) + " is not a basis");
  IncreasingPath path = find_increasing_path(m, f);
  int changes = 0;
  int last = 1;  // s(f, f)
  for (const auto& v : path.vertices) {
    const int s = st.sign(f, v);
    if (s == 0)
      throw std::logic_error("index_relative: path visits a non-basis");
    if (s != last) ++changes;
    last = s;
  }
  return IndexReport{changes, max_height_of(m.transversals(), f),
                     std::move(path)};
}

bool verify_index_well_defined(const BasisSystem& m, const SignTable& st,
                               const Transversal& f) {
  if (st.index_of(f) < 0)
    throw domain_error("verify_index_well_defined: " + to_string(f) +
                       " is not a basis");
  const AdjacencyView adj = adjacency_of(compute_edges(m));
  const int start = adj.vertex_index(f);
  long long paths = 0;
  int seen_count = -1;
  bool consistent = true;
  // Depth-first over strictly height-increasing paths; every maximal one
  // ends at maximal height.
  const auto row_sign = [&](int v) { return st.sign(f, adj.vertices[v]); };
  const std::function<void(int, int, int)> walk = [&](int v, int last_sign,
                                                      int changes) {
    bool extended = false;
    for (const int y : adj.nbrs[v]) {
      if (height(adj.vertices[y], f) <= height(adj.vertices[v], f)) continue;
      extended = true;
      const int s = row_sign(y);
      walk(y, s, changes + (s != last_sign ? 1 : 0));
      if (!consistent) return;
    }
    if (!extended) {
      if (++paths > kMaxPathEnumeration)
        throw domain_error("verify_index_well_defined: more than " +
                           std::to_string(kMaxPathEnumeration) + " paths");
      if (seen_count < 0) seen_count = changes;
      else if (seen_count != changes) consistent = false;
    }
  };
  walk(start, 1, 0);
  return consistent;
}

int count_inducing_edges(const OrientedSkeleton& os, const Transversal& f) {
  const AdjacencyView adj = adjacency_of(os.base);
  const std::vector<int> path = greedy_path(adj, f);
  int inducing = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Transversal& u = adj.vertices[path[i]];
    const Transversal& v = adj.vertices[path[i + 1]];
    const int e = os.base.edge_index(u, v);
    const Edge& edge = os.base.edges[e];
    if (edge.kind == EdgeKind::Long) {
      ++inducing;  // increasing long steps are vertical
    } else {
      // Short step goes upward; the edge induces iff its arrow points down.
      const Transversal& head = os.direction[e] > 0 ? edge.b : edge.a;
      if (head.stars == u.stars) ++inducing;
    }
  }
  return inducing;
}

QuadraticCrosscheck crosscheck_quadratic(const Representation<Rat>& rep,
                                         const Transversal& f) {
  const BasisSystem m = extract_bases(rep, rep.n);
  if (!m.contains(f))
    throw domain_error("crosscheck_quadratic: " + to_string(f) +
                       " is not a basis");
  const FundamentalReduction fr = fundamental_reduction(rep, f);
  const RelativeSigns rs = orientation_from_representation(fr, m);
  const SignTable st = extend_signs(m, rs);

  QuadraticCrosscheck out;
  out.fundamental = f;
  const IndexReport report = index_relative(m, st, f);
  out.matroid_index = report.index;
  out.max_height = report.max_height;
  out.kronecker_index = kronecker_index(fr.cf).index();
  out.oracle_index = congruence_diagonalize(fr.cf).index();
  out.rank = rank(fr.cf);
  out.agree = out.matroid_index == out.kronecker_index &&
              out.matroid_index == out.oracle_index &&
              out.rank == out.max_height;
  return out;
}

}  // namespace lagmat
