#include "lagmat/polytope.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "cubefaces.hpp"

namespace lagmat {

std::string face_kind_name(FaceKind k) {
  switch (k) {
    case FaceKind::ShortSquare: return "sSquare";
    case FaceKind::LongSquare: return "lSquare";
    case FaceKind::MixedRectangle: return "nsRect";
    case FaceKind::IsoscelesTriangle: return "iTri";
    case FaceKind::EquilateralTriangle: return "eqTri";
  }
  return "?";
}

std::vector<int> embed_vertex(const Transversal& t) {
  std::vector<int> p(t.n);
  for (int i = 1; i <= t.n; ++i) p[i - 1] = t.sign(i);
  return p;
}

int PolytopeSkeleton::edge_index(const Transversal& a,
                                 const Transversal& b) const {
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Mask x = edges[e].a.stars, y = edges[e].b.stars;
    if ((x == a.stars && y == b.stars) || (x == b.stars && y == a.stars))
      return static_cast<int>(e);
  }
  return -1;
}

namespace {

void require_polytope_input(const BasisSystem& m) {
  if (!m.is_lagrangian())
    throw domain_error("polytope operations require a rank-n system");
  // The edge criterion presumes the Maximality Property; check it whenever
  // the ordering enumeration guard allows.
  if (m.n <= kMaxOrderingGround) {
    if (!check_maximality(m).holds)
      throw domain_error(
          "polytope operations require the Maximality Property to hold");
  }
}

Edge make_edge(int n, Mask x, Mask y, EdgeKind kind) {
  Transversal a{n, x}, b{n, y};
  if (!notation_less(a, b)) std::swap(a, b);
  return Edge{a, b, kind};
}

// Rotate/reflect a cycle so the least vertex comes first, followed by the
// lesser of its two neighbours; stabilizes exports.
std::vector<Transversal> canonical_cycle(std::vector<Transversal> cycle) {
  const std::size_t len = cycle.size();
  std::size_t start = 0;
  for (std::size_t i = 1; i < len; ++i)
    if (notation_less(cycle[i], cycle[start])) start = i;
  std::vector<Transversal> out;
  out.reserve(len);
  const bool forward = notation_less(cycle[(start + 1) % len],
                                     cycle[(start + len - 1) % len]);
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t at =
        forward ? (start + i) % len : (start + len - i) % len;
    out.push_back(cycle[at]);
  }
  return out;
}

}  // namespace

PolytopeSkeleton compute_edges(const BasisSystem& m) {
  require_polytope_input(m);
  PolytopeSkeleton sk;
  sk.n = m.n;
  sk.vertices = m.transversals();
  const auto masks = detail::sorted_masks_of(sk.vertices);
  std::vector<Edge> edges;
  for (const Mask v : masks) {
    for (int bi = 0; bi < m.n; ++bi) {
      const Mask w = v ^ (Mask{1} << bi);
      if (v < w && detail::is_member(masks, w))
        edges.push_back(make_edge(m.n, v, w, EdgeKind::Short));
      for (int bj = bi + 1; bj < m.n; ++bj) {
        const Mask u = v ^ (Mask{1} << bi) ^ (Mask{1} << bj);
        if (v < u && detail::is_member(masks, u)) {
          const int mid = detail::is_member(masks, v ^ (Mask{1} << bi)) +
                          detail::is_member(masks, v ^ (Mask{1} << bj));
          if (mid < 2) edges.push_back(make_edge(m.n, v, u, EdgeKind::Long));
        }
      }
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    const auto kx = to_string(x.a) + "|" + to_string(x.b);
    const auto ky = to_string(y.a) + "|" + to_string(y.b);
    return kx < ky;
  });
  sk.edges = std::move(edges);
  return sk;
}

PolytopeSkeleton scan_faces(const BasisSystem& m) {
  PolytopeSkeleton sk = compute_edges(m);
  const auto masks = detail::sorted_masks_of(sk.vertices);
  const auto member = [&](Mask x) { return detail::is_member(masks, x); };
  const auto tv = [&](Mask x) { return Transversal{m.n, x}; };

  // Long-edge lookup by unordered mask pair.
  std::set<std::pair<Mask, Mask>> long_edges;
  for (const auto& e : sk.edges)
    if (e.kind == EdgeKind::Long)
      long_edges.insert(
          {std::min(e.a.stars, e.b.stars), std::max(e.a.stars, e.b.stars)});
  const auto long_edge = [&](Mask x, Mask y) {
    return long_edges.count({std::min(x, y), std::max(x, y)}) != 0;
  };

  std::vector<Face> faces;
  std::set<std::vector<Mask>> seen;  // sorted vertex sets, across all kinds
  const auto emit = [&](FaceKind kind, std::vector<Transversal> cycle,
                        std::vector<int> axes, Mask fixed_mask,
                        Mask fixed_stars) {
    std::vector<Mask> key;
    for (const auto& t : cycle) key.push_back(t.stars);
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) return;
    faces.push_back(Face{kind, canonical_cycle(std::move(cycle)),
                         std::move(axes), fixed_mask, fixed_stars});
  };

  // Cube 2-faces carry the short squares and isosceles triangles.
  for (const auto& face : detail::faces_touching(masks, m.n)) {
    const auto corners = face.corners();  // 00, 10, 01, 11
    int present = 0;
    for (const Mask c : corners) present += member(c);
    const Mask other = full_mask(m.n) &
                       ~((Mask{1} << face.bi) | (Mask{1} << face.bj));
    if (present == 4) {
      emit(FaceKind::ShortSquare,
           {tv(corners[0]), tv(corners[1]), tv(corners[3]), tv(corners[2])},
           {face.bi + 1, face.bj + 1}, other, face.fixed_stars);
    } else if (present == 3) {
      // The two present corners differing in both bits are the long ends.
      std::vector<Mask> here;
      for (const Mask c : corners)
        if (member(c)) here.push_back(c);
      Mask end1 = 0, end2 = 0, mid = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (popcount(here[i] ^ here[j]) == 2) {
            end1 = here[i];
            end2 = here[j];
            mid = here[3 - i - j];
          }
      emit(FaceKind::IsoscelesTriangle, {tv(end1), tv(mid), tv(end2)},
           {face.bi + 1, face.bj + 1}, other, face.fixed_stars);
    }
  }

  const auto fixed_of = [&](const std::vector<Mask>& vs, std::vector<int>& axes) {
    Mask varying = 0;
    for (const Mask v : vs) varying |= v ^ vs[0];
    for (int i = 0; i < m.n; ++i)
      if ((varying >> i) & 1) axes.push_back(i + 1);
    const Mask fixed = full_mask(m.n) & ~varying;
    return std::pair<Mask, Mask>{fixed, vs[0] & fixed};
  };

  // Rectangles: a long edge, its translate along a third axis, and the two
  // short edges between them.
  for (const auto& [a, b] : long_edges) {
    const Mask pair_bits = a ^ b;
    for (int k = 0; k < m.n; ++k) {
      const Mask bit = Mask{1} << k;
      if (pair_bits & bit) continue;
      const Mask c = a ^ bit, d = b ^ bit;
      if (member(c) && member(d) && long_edge(c, d)) {
        std::vector<int> axes;
        const auto [fixed, stars] = fixed_of({a, b, d, c}, axes);
        emit(FaceKind::MixedRectangle, {tv(a), tv(b), tv(d), tv(c)},
             std::move(axes), fixed, stars);
      }
    }
  }

  // Triangles and squares of long edges.
  std::vector<std::vector<Mask>> long_nbrs(sk.vertices.size());
  std::vector<Mask> vertex_masks;
  for (const auto& v : sk.vertices) vertex_masks.push_back(v.stars);
  for (const auto& [a, b] : long_edges) {
    const auto ia = std::find(vertex_masks.begin(), vertex_masks.end(), a);
    const auto ib = std::find(vertex_masks.begin(), vertex_masks.end(), b);
    long_nbrs[ia - vertex_masks.begin()].push_back(b);
    long_nbrs[ib - vertex_masks.begin()].push_back(a);
  }
  for (std::size_t vi = 0; vi < sk.vertices.size(); ++vi) {
    const Mask a = vertex_masks[vi];
    const auto& nbrs = long_nbrs[vi];
    for (std::size_t x = 0; x < nbrs.size(); ++x) {
      for (std::size_t y = x + 1; y < nbrs.size(); ++y) {
        const Mask b = std::min(nbrs[x], nbrs[y]);
        const Mask c = std::max(nbrs[x], nbrs[y]);
        if (a < b && long_edge(b, c)) {
          // Pairwise long-adjacent triple: equilateral triangle.
          std::vector<int> axes;
          const auto [fixed, stars] = fixed_of({a, b, c}, axes);
          emit(FaceKind::EquilateralTriangle, {tv(a), tv(b), tv(c)},
               std::move(axes), fixed, stars);
        }
        const Mask p1 = a ^ nbrs[x], p2 = a ^ nbrs[y];
        if ((p1 & p2) == 0) {
          // Disjoint exchange pairs: candidate square of long edges, which
          // is automatically planar.
          const Mask d = a ^ p1 ^ p2;
          if (a < b && a < d && member(d) && long_edge(nbrs[x], d) &&
              long_edge(nbrs[y], d)) {
            std::vector<int> axes;
            const auto [fixed, stars] = fixed_of({a, nbrs[x], d, nbrs[y]}, axes);
            emit(FaceKind::LongSquare,
                 {tv(a), tv(nbrs[x]), tv(d), tv(nbrs[y])}, std::move(axes),
                 fixed, stars);
          }
        }
      }
    }
  }

  std::sort(faces.begin(), faces.end(), [](const Face& x, const Face& y) {
    const auto key = [](const Face& f) {
      std::string s = face_kind_name(f.kind);
      for (const auto& t : f.cycle) s += "|" + to_string(t);
      return s;
    };
    return key(x) < key(y);
  });
  sk.faces = std::move(faces);
  return sk;
}

namespace {

void check_table_matches(const BasisSystem& m, const SignTable& st) {
  if (st.n != m.n || st.bases.size() != m.bases.size())
    throw domain_error("sign table does not belong to this matroid");
  for (std::size_t i = 0; i < m.bases.size(); ++i)
    if (st.bases[i].stars != m.bases[i].stars)
      throw domain_error("sign table does not belong to this matroid");
}

}  // namespace

OrientedSkeleton orient_skeleton(const BasisSystem& m, const SignTable& st) {
  check_table_matches(m, st);
  const auto violations =
      validate_orientation(m, change_fundamental(st, st.bases.front()));
  if (!violations.empty())
    throw domain_error("orient_skeleton: table is not an orientation: " +
                       describe(violations.front()));
  OrientedSkeleton os{scan_faces(m), {}};
  os.direction.resize(os.base.edges.size(), 0);
  for (std::size_t e = 0; e < os.base.edges.size(); ++e) {
    const Edge& edge = os.base.edges[e];
    if (edge.kind != EdgeKind::Short) continue;
    os.direction[e] = static_cast<std::int8_t>(st.sign(edge.a, edge.b));
  }
  if (!check_balance(os).empty())
    throw std::logic_error("orient_skeleton: orientation produced an "
                           "unbalanced skeleton");
  return os;
}

OrientedSkeleton skeleton_from_relative_signs(const BasisSystem& m,
                                              const RelativeSigns& rs) {
  OrientedSkeleton os{scan_faces(m), {}};
  os.direction.resize(os.base.edges.size(), 0);
  for (std::size_t e = 0; e < os.base.edges.size(); ++e) {
    const Edge& edge = os.base.edges[e];
    if (edge.kind != EdgeKind::Short) continue;
    const int ha = height(edge.a, rs.fundamental);
    const int hb = height(edge.b, rs.fundamental);
    const bool same = rs.at(m, edge.a) == rs.at(m, edge.b);
    // Equal endpoint signs point the arrow up, away from the fundamental.
    const bool a_to_b = (ha < hb) == same;
    os.direction[e] = a_to_b ? 1 : -1;
  }
  return os;
}

std::vector<Face> check_balance(const OrientedSkeleton& os) {
  std::vector<Face> violating;
  for (const auto& face : os.base.faces) {
    int along = 0;
    const std::size_t len = face.cycle.size();
    for (std::size_t i = 0; i < len; ++i) {
      const Transversal& u = face.cycle[i];
      const Transversal& v = face.cycle[(i + 1) % len];
      const int e = os.base.edge_index(u, v);
      if (e < 0 || os.base.edges[e].kind != EdgeKind::Short) continue;
      const bool arrow_uv =
          (os.direction[e] > 0) == (os.base.edges[e].a.stars == u.stars);
      along += arrow_uv ? 1 : -1;
    }
    if (along != 0) violating.push_back(face);
  }
  return violating;
}

RelativeSigns signs_from_skeleton(const OrientedSkeleton& os,
                                  const Transversal& f) {
  const auto& sk = os.base;
  int start = -1;
  for (std::size_t i = 0; i < sk.vertices.size(); ++i)
    if (sk.vertices[i].stars == f.stars && sk.vertices[i].n == f.n)
      start = static_cast<int>(i);
  if (start < 0)
    throw domain_error("signs_from_skeleton: " + to_string(f) +
                       " is not a vertex");

  // Adjacency with edge ids.
  const auto vid = [&](const Transversal& t) {
    for (std::size_t i = 0; i < sk.vertices.size(); ++i)
      if (sk.vertices[i].stars == t.stars) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::vector<std::pair<int, int>>> adj(sk.vertices.size());
  for (std::size_t e = 0; e < sk.edges.size(); ++e) {
    const int a = vid(sk.edges[e].a), b = vid(sk.edges[e].b);
    adj[a].push_back({b, static_cast<int>(e)});
    adj[b].push_back({a, static_cast<int>(e)});
  }

  const auto inducing = [&](int e) {
    const Edge& edge = sk.edges[e];
    if (edge.kind == EdgeKind::Long)
      return height(edge.a, f) != height(edge.b, f);
    const Transversal& tail = os.direction[e] > 0 ? edge.a : edge.b;
    const Transversal& head = os.direction[e] > 0 ? edge.b : edge.a;
    return height(tail, f) > height(head, f);  // directed downwards
  };

  std::vector<std::int8_t> sign(sk.vertices.size(), 0);
  std::vector<int> parent(sk.vertices.size(), -1);
  sign[start] = 1;
  std::deque<int> queue{start};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (const auto& [y, e] : adj[x]) {
      const std::int8_t expected = inducing(e) ? -sign[x] : sign[x];
      if (sign[y] == 0) {
        sign[y] = expected;
        parent[y] = x;
        queue.push_back(y);
      } else if (sign[y] != expected) {
        std::string cycle = to_string(sk.vertices[y]);
        for (int v = x; v >= 0; v = parent[v])
          cycle = to_string(sk.vertices[v]) + " " + cycle;
        for (int v = parent[y]; v >= 0; v = parent[v])
          cycle += " " + to_string(sk.vertices[v]);
        throw domain_error(
            "signs_from_skeleton: propagation contradicts itself along cycle " +
            cycle + " (skeleton is not balanced)");
      }
    }
  }
  for (const auto s : sign)
    if (s == 0)
      throw std::logic_error("signs_from_skeleton: skeleton is disconnected");
  return RelativeSigns{f, std::move(sign)};
}

// --- exports -------------------------------------------------------------

namespace {

nlohmann::json edge_to_json(const Edge& e) {
  nlohmann::json j;
  j["a"] = to_string(e.a);
  j["b"] = to_string(e.b);
  j["kind"] = e.kind == EdgeKind::Short ? "short" : "long";
  return j;
}

nlohmann::json faces_to_json(const std::vector<Face>& faces) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& f : faces) {
    nlohmann::json j;
    j["kind"] = face_kind_name(f.kind);
    nlohmann::json members = nlohmann::json::array();
    for (const auto& t : f.cycle) members.push_back(to_string(t));
    j["members"] = members;
    out.push_back(j);
  }
  return out;
}

}  // namespace

nlohmann::json skeleton_to_json(const PolytopeSkeleton& sk) {
  nlohmann::json j;
  j["n"] = sk.n;
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& v : sk.vertices)
    vertices.push_back({{"basis", to_string(v)}, {"point", embed_vertex(v)}});
  j["vertices"] = vertices;
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : sk.edges) edges.push_back(edge_to_json(e));
  j["edges"] = edges;
  j["faces"] = faces_to_json(sk.faces);
  return j;
}

nlohmann::json skeleton_to_json(const OrientedSkeleton& os,
                                const SignTable& st) {
  const auto& sk = os.base;
  nlohmann::json j;
  j["n"] = sk.n;
  const Transversal fundamental = sk.vertices.front();
  j["fundamental"] = to_string(fundamental);
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& v : sk.vertices)
    vertices.push_back({{"basis", to_string(v)},
                        {"point", embed_vertex(v)},
                        {"sign_rel", st.sign(fundamental, v)}});
  j["vertices"] = vertices;
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t e = 0; e < sk.edges.size(); ++e) {
    nlohmann::json je = edge_to_json(sk.edges[e]);
    if (sk.edges[e].kind == EdgeKind::Short) {
      const bool fwd = os.direction[e] > 0;
      je["direction"] = {to_string(fwd ? sk.edges[e].a : sk.edges[e].b),
                         to_string(fwd ? sk.edges[e].b : sk.edges[e].a)};
    }
    edges.push_back(je);
  }
  j["edges"] = edges;
  j["faces"] = faces_to_json(sk.faces);
  return j;
}

namespace {

std::string dot_faces(const std::vector<Face>& faces) {
  std::string out;
  for (const auto& f : faces) {
    out += "  // face " + face_kind_name(f.kind) + ":";
    for (const auto& t : f.cycle) out += " " + to_string(t);
    out += "\n";
  }
  return out;
}

}  // namespace

std::string skeleton_to_dot(const PolytopeSkeleton& sk) {
  std::string out = "graph skeleton {\n";
  for (const auto& v : sk.vertices) out += "  \"" + to_string(v) + "\";\n";
  for (const auto& e : sk.edges) {
    out += "  \"" + to_string(e.a) + "\" -- \"" + to_string(e.b) + "\"";
    if (e.kind == EdgeKind::Long) out += " [style=dashed]";
    out += ";\n";
  }
  out += dot_faces(sk.faces);
  out += "}\n";
  return out;
}

std::string skeleton_to_dot(const OrientedSkeleton& os) {
  const auto& sk = os.base;
  std::string out = "digraph skeleton {\n";
  for (const auto& v : sk.vertices) out += "  \"" + to_string(v) + "\";\n";
  for (std::size_t e = 0; e < sk.edges.size(); ++e) {
    const Edge& edge = sk.edges[e];
    if (edge.kind == EdgeKind::Short) {
      const bool fwd = os.direction[e] > 0;
      out += "  \"" + to_string(fwd ? edge.a : edge.b) + "\" -> \"" +
             to_string(fwd ? edge.b : edge.a) + "\";\n";
    } else {
      out += "  \"" + to_string(edge.a) + "\" -> \"" + to_string(edge.b) +
             "\" [dir=none, style=dashed];\n";
    }
  }
  out += dot_faces(sk.faces);
  out += "}\n";
  return out;
}

}  // namespace lagmat
