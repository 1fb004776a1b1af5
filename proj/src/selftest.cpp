#include "lagmat/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "lagmat/census.hpp"
#include "lagmat/hull.hpp"
#include "lagmat/io.hpp"
#include "lagmat/pathindex.hpp"

namespace lagmat {

namespace {

// Deterministic across platforms, unlike the standard distributions.
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

// --- fixtures -------------------------------------------------------------

QRepresentation six_basis_rep() {
  return QRepresentation::make(
      QMatrix{{1, 1, 1}, {1, 2, 2}, {1, 2, 2}}, QMatrix::identity(3));
}

F2Representation tetra_gf2_rep() {
  return F2Representation::make(
      F2Matrix{{GF2{0}, GF2{1}, GF2{1}},
               {GF2{1}, GF2{0}, GF2{1}},
               {GF2{1}, GF2{1}, GF2{0}}},
      F2Matrix::identity(3));
}

QRepresentation tripod_neg_rep() {  // all signs negative relative to 123
  return QRepresentation::make(QMatrix::identity(3),
                               QMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
}

QRepresentation tripod_pos_rep() {  // all signs positive relative to 123
  return QRepresentation::make(
      QMatrix::identity(3), QMatrix{{-1, -1, -1}, {-1, -1, -1}, {-1, -1, -1}});
}

QRepresentation long_square_rep() {
  return QRepresentation::make(
      QMatrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}},
      QMatrix::identity(4));
}

QRepresentation hyperbolic_rep() {
  return QRepresentation::make(QMatrix{{0, 1}, {1, 0}}, QMatrix::identity(2));
}

std::set<std::string> names_of(const BasisSystem& m) {
  std::set<std::string> out;
  for (const auto& b : m.bases) out.insert(to_string(b));
  return out;
}

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

// --- criterion 1: six-basis polytope --------------------------------------

Check criterion_six_basis() {
  Check c;
  const auto rep = six_basis_rep();
  const BasisSystem m = extract_bases(rep, 3);
  c.expect(names_of(m) == std::set<std::string>{"1*2*3*", "12*3*", "1*23*",
                                                "1*2*3", "123*", "12*3"},
           "basis set mismatch");
  const PolytopeSkeleton sk = scan_faces(m);
  const auto t = [&](const char* s) { return parse_transversal(s, 3); };
  const int short_edge = sk.edge_index(t("12*3"), t("1*2*3"));
  c.expect(short_edge >= 0 && sk.edges[short_edge].kind == EdgeKind::Short,
           "missing short edge 12*3 - 1*2*3");
  const int long_edge = sk.edge_index(t("12*3"), t("123*"));
  c.expect(long_edge >= 0 && sk.edges[long_edge].kind == EdgeKind::Long,
           "missing long edge 12*3 - 123*");
  int squares = 0, rects = 0, triangles = 0;
  for (const auto& f : sk.faces) {
    squares += f.kind == FaceKind::ShortSquare;
    rects += f.kind == FaceKind::MixedRectangle;
    triangles += f.kind == FaceKind::IsoscelesTriangle;
  }
  c.expect(squares >= 1 && rects >= 1 && triangles >= 1,
           "face scan lacks an sSquare, nsRect or iTri");
  return c;
}

// --- criterion 2: GF(2) tetrahedron ---------------------------------------

Check criterion_tetrahedron() {
  Check c;
  const auto rep = tetra_gf2_rep();
  const BasisSystem m = extract_bases(rep, 3);
  c.expect(names_of(m) == std::set<std::string>{"1*2*3*", "123*", "12*3", "1*23"},
           "basis set mismatch");
  const PolytopeSkeleton sk = scan_faces(m);
  c.expect(sk.edges.size() == 6, "expected the complete graph on 4 vertices");
  for (const auto& e : sk.edges)
    c.expect(e.kind == EdgeKind::Long, "unexpected short edge");
  c.expect(sk.faces.size() == 4, "expected 4 faces");
  for (const auto& f : sk.faces)
    c.expect(f.kind == FaceKind::EquilateralTriangle, "non-eqTri face");
  c.expect(is_even(m), "matroid should be even");
  const auto orientations = enumerate_orientations(m);
  c.expect(orientations.size() == 1, "expected exactly one orientation");
  if (c.ok) {
    const Transversal f = parse_transversal("1*2*3*", 3);
    const IndexReport r = index_relative(m, orientations.front(), f);
    c.expect(r.index == 1 && r.max_height == 2 && r.index * 2 == r.max_height,
             "index relative to 1*2*3* should be 1 = max_height/2");
  }
  return c;
}

// --- criterion 3: tripod orientations and indices --------------------------

Check criterion_tripod() {
  Check c;
  const auto rep_neg = tripod_neg_rep();
  const auto rep_pos = tripod_pos_rep();
  const BasisSystem m = extract_bases(rep_neg, 3);
  c.expect(names_of(m) == std::set<std::string>{"1*23", "12*3", "123*", "123"},
           "basis set mismatch");
  c.expect(names_of(extract_bases(rep_pos, 3)) == names_of(m),
           "the two representations should agree on bases");

  const auto orientations = enumerate_orientations(m);
  c.expect(orientations.size() == 2, "expected exactly two orientations");

  const Transversal base = parse_transversal("123", 3);
  const SignTable st_neg =
      extend_signs(m, orientation_from_representation(
                          fundamental_reduction(rep_neg, base), m));
  const SignTable st_pos =
      extend_signs(m, orientation_from_representation(
                          fundamental_reduction(rep_pos, base), m));
  for (const auto& b : m.transversals()) {
    const int expected = b.stars == base.stars ? 1 : -1;
    c.expect(st_neg.sign(base, b) == expected, "negative table row mismatch");
    c.expect(st_pos.sign(base, b) == 1, "positive table row mismatch");
  }
  if (c.ok) {
    const bool match =
        (orientations[0] == st_neg && orientations[1] == st_pos) ||
        (orientations[0] == st_pos && orientations[1] == st_neg);
    c.expect(match, "representation-derived tables do not match enumeration");
  }
  for (const auto& f : m.transversals()) {
    c.expect(index_relative(m, st_neg, f).index == 1,
             "negative example index should be 1 at " + to_string(f));
    const int expected = f.stars == base.stars ? 0 : 1;
    c.expect(index_relative(m, st_pos, f).index == expected,
             "positive example index mismatch at " + to_string(f));
  }
  c.expect(find_isomorphism(m, m).has_value(), "unoriented isomorphism missing");
  c.expect(!find_isomorphism(m, st_neg, m, st_pos).has_value(),
           "oriented isomorphism should be absent");
  return c;
}

// --- criterion 4: long-square face -----------------------------------------

Check criterion_long_square() {
  Check c;
  const BasisSystem m = extract_bases(long_square_rep(), 4);
  c.expect(names_of(m) ==
               std::set<std::string>{"1*2*3*4*", "123*4*", "1*2*34", "1234"},
           "basis set mismatch");
  const PolytopeSkeleton sk = scan_faces(m);
  c.expect(sk.edges.size() == 4, "expected a 4-cycle of edges");
  for (const auto& e : sk.edges)
    c.expect(e.kind == EdgeKind::Long, "unexpected short edge");
  c.expect(sk.faces.size() == 1 && sk.faces[0].kind == FaceKind::LongSquare,
           "expected exactly one lSquare face");
  return c;
}

// --- criterion 5: quadratic-form agreement ---------------------------------

Check criterion_quadratic(std::uint64_t seed) {
  Check c;
  SplitMix64 rng{seed};
  for (int trial = 0; trial < 200 && c.ok; ++trial) {
    const int n = 2 + trial % 4;
    QMatrix s(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        s.at(i, j) = rng.uniform(-9, 9);
        s.at(j, i) = s.at(i, j);
      }
    const auto rep = QRepresentation::make(s, QMatrix::identity(n));
    const BasisSystem m = extract_bases(rep, n);
    for (const auto& f : m.transversals()) {
      const QuadraticCrosscheck record = crosscheck_quadratic(rep, f);
      if (!record.agree) {
        std::ostringstream msg;
        msg << "disagreement at trial " << trial << ", fundamental "
            << to_string(f) << ": matroid " << record.matroid_index
            << ", minor-sequence " << record.kronecker_index
            << ", diagonalization " << record.oracle_index << ", rank "
            << record.rank << ", max height " << record.max_height;
        c.expect(false, msg.str());
        break;
      }
    }
  }
  return c;
}

// --- criterion 6: census equivalences --------------------------------------

Check criterion_census(std::vector<SignTable>* produced_tables) {
  Check c;
  for (int n = 1; n <= 3 && c.ok; ++n) {
    const auto flags = lagrangian_collection_flags(n, true);
    // (a) Maximality coincides with the hull edge-length criterion.
    for (std::size_t mask = 1; mask < flags.size() && c.ok; ++mask) {
      std::vector<Transversal> vertices;
      for (Mask t = 0; t < (Mask{1} << n); ++t)
        if (mask >> t & 1) vertices.push_back(Transversal{n, t});
      const bool lengths_ok = hull_edges_are_exchange_lengths(vertices);
      if (flags[mask] != (lengths_ok ? 1 : 0)) {
        std::ostringstream msg;
        msg << "n=" << n << " collection " << mask
            << ": maximality=" << int(flags[mask])
            << " but hull-edge filter=" << lengths_ok;
        c.expect(false, msg.str());
      }
    }
    if (!c.ok) break;

    for (std::size_t mask = 1; mask < flags.size() && c.ok; ++mask) {
      if (!flags[mask]) continue;
      const BasisSystem m = collection_from_mask(n, mask);
      const std::size_t nb = m.bases.size();

      // (b) axiom validity against balance of the induced skeleton.  The
      // skeleton only directs short edges, so a violation living purely on
      // long edges is invisible to it; validity implies balance always, and
      // the two are equivalent once the long-edge sign rules hold.
      for (std::size_t fi = 0; fi < nb && c.ok; ++fi) {
        const Transversal f{n, m.bases[fi].stars};
        for (std::uint32_t code = 0; code < (std::uint32_t{1} << (nb - 1)); ++code) {
          RelativeSigns rs{f, std::vector<std::int8_t>(nb)};
          std::uint32_t bits = code;
          for (std::size_t i = 0; i < nb; ++i) {
            if (i == fi) {
              rs.signs[i] = 1;
            } else {
              rs.signs[i] = bits & 1 ? -1 : 1;
              bits >>= 1;
            }
          }
          const auto violations = validate_orientation(m, rs);
          const bool valid = violations.empty();
          bool long_rules_hold = true;
          for (const auto& v : violations)
            if (v.rule == OrientationRule::HorizontalLongEqual ||
                v.rule == OrientationRule::VerticalLongOpposite)
              long_rules_hold = false;
          const bool balanced =
              check_balance(skeleton_from_relative_signs(m, rs)).empty();
          const bool ok =
              valid ? balanced : (!long_rules_hold || !balanced);
          if (!ok) {
            std::ostringstream msg;
            msg << "validity/balance mismatch, n=" << n << " collection "
                << mask << " fundamental " << to_string(f) << " code " << code;
            c.expect(false, msg.str());
            break;
          }
        }
      }

      // (c) round trips between orientations and oriented skeletons.
      const auto orientations = enumerate_orientations(m);
      for (const auto& st : orientations) {
        if (produced_tables) produced_tables->push_back(st);
        const OrientedSkeleton os = orient_skeleton(m, st);
        for (const auto& f : m.transversals()) {
          const RelativeSigns back = signs_from_skeleton(os, f);
          const RelativeSigns row = change_fundamental(st, f);
          c.expect(back.signs == row.signs,
                   "skeleton signs disagree with the table row");
        }
        // (d) path-independence and inducing-edge counts.
        for (const auto& f : m.transversals()) {
          c.expect(verify_index_well_defined(m, st, f),
                   "sign-change count depends on the path");
          c.expect(count_inducing_edges(os, f) ==
                       index_relative(m, st, f).index,
                   "inducing-edge count disagrees with the index");
        }
      }
      if (!c.ok) break;

      // (c, reverse direction) every balanced direction assignment comes
      // from an orientation and round-trips to itself.
      const PolytopeSkeleton sk = scan_faces(m);
      std::vector<int> short_edges;
      for (std::size_t e = 0; e < sk.edges.size(); ++e)
        if (sk.edges[e].kind == EdgeKind::Short)
          short_edges.push_back(static_cast<int>(e));
      const Transversal seed_f{n, m.bases.front().stars};
      long long balanced_count = 0;
      for (std::uint32_t code = 0; code < (std::uint32_t{1} << short_edges.size());
           ++code) {
        OrientedSkeleton os{sk, std::vector<std::int8_t>(sk.edges.size(), 0)};
        for (std::size_t i = 0; i < short_edges.size(); ++i)
          os.direction[short_edges[i]] = (code >> i) & 1 ? -1 : 1;
        if (check_balance(os).empty()) {
          ++balanced_count;
          const RelativeSigns rs = signs_from_skeleton(os, seed_f);
          c.expect(validate_orientation(m, rs).empty(),
                   "balanced skeleton produced invalid signs");
          if (!c.ok) break;
          const OrientedSkeleton round =
              orient_skeleton(m, extend_signs(m, rs));
          c.expect(round.direction == os.direction,
                   "direction assignment failed to round-trip");
        } else {
          bool rejected = false;
          try {
            rejected = !validate_orientation(m, signs_from_skeleton(os, seed_f))
                            .empty();
          } catch (const domain_error&) {
            rejected = true;  // propagation contradiction
          }
          c.expect(rejected, "unbalanced skeleton slipped through");
        }
        if (!c.ok) break;
      }
      c.expect(balanced_count == static_cast<long long>(orientations.size()),
               "balanced skeletons do not biject with orientations");
    }
  }
  return c;
}

// --- criterion 7: cocycle identity and reciprocity --------------------------

bool cocycle_holds(const SignTable& st, std::string* why) {
  const std::size_t nb = st.bases.size();
  const auto s = [&](std::size_t i, std::size_t j) {
    return static_cast<int>(st.table[i * nb + j]);
  };
  for (std::size_t g = 0; g < nb; ++g) {
    for (std::size_t h = 0; h < nb; ++h) {
      for (std::size_t a = 0; a < nb; ++a) {
        const Mask gm = st.bases[g].stars, hm = st.bases[h].stars,
                   am = st.bases[a].stars;
        const int parity = popcount((gm ^ hm) & (gm ^ am)) & 1;
        if (s(g, a) != s(h, a) * s(h, g) * (parity ? -1 : 1)) {
          if (why)
            *why = "cocycle fails at (" + to_string(st.bases[g]) + ", " +
                   to_string(st.bases[h]) + ", " + to_string(st.bases[a]) + ")";
          return false;
        }
      }
    }
  }
  for (std::size_t a = 0; a < nb; ++a)
    for (std::size_t b = 0; b < nb; ++b) {
      const int parity = popcount(st.bases[a].stars ^ st.bases[b].stars) & 1;
      if (s(a, b) != s(b, a) * (parity ? -1 : 1)) {
        if (why)
          *why = "reciprocity fails at (" + to_string(st.bases[a]) + ", " +
                 to_string(st.bases[b]) + ")";
        return false;
      }
    }
  return true;
}

Check criterion_cocycle(const std::vector<SignTable>& tables,
                        std::uint64_t seed) {
  Check c;
  for (const auto& st : tables) {
    std::string why;
    if (!cocycle_holds(st, &why)) {
      c.expect(false, why);
      return c;
    }
  }
  // Representation-derived tables on random symmetric instances.
  SplitMix64 rng{seed ^ 0xABCDEF0123456789ull};
  for (int trial = 0; trial < 20 && c.ok; ++trial) {
    const int n = 2 + trial % 4;
    QMatrix s(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        s.at(i, j) = rng.uniform(-9, 9);
        s.at(j, i) = s.at(i, j);
      }
    const auto rep = QRepresentation::make(s, QMatrix::identity(n));
    const BasisSystem m = extract_bases(rep, n);
    const Transversal f{n, m.bases.front().stars};
    const SignTable st = extend_signs(
        m, orientation_from_representation(fundamental_reduction(rep, f), m));
    std::string why;
    if (!cocycle_holds(st, &why)) c.expect(false, "random instance: " + why);
  }
  return c;
}

// --- criterion 8: even-matroid corollary ------------------------------------

Check criterion_even(const std::uint64_t /*seed*/) {
  Check c;
  for (int n = 1; n <= 3 && c.ok; ++n) {
    for (const auto& m : enumerate_lagrangian_matroids(n)) {
      if (!is_even(m)) continue;
      const auto orientations = enumerate_orientations(m);
      c.expect(orientations.size() == 1,
               "even matroid with orientation count != 1");
      if (c.ok)
        c.expect(orientations.front() == canonical_even_orientation(m),
                 "even orientation differs from the height rule");
      if (!c.ok) break;
    }
  }
  // Representable even instances have signature zero.
  const auto check_signature = [&](const QRepresentation& rep,
                                   const std::string& name) {
    const BasisSystem m = extract_bases(rep, rep.n);
    c.expect(is_even(m), name + " should be even");
    const Transversal all_starred{rep.n, full_mask(rep.n)};
    const InertiaProfile p =
        congruence_diagonalize(fundamental_reduction(rep, all_starred).cf);
    c.expect(p.signature() == 0, name + " should have signature 0");
  };
  check_signature(hyperbolic_rep(), "hyperbolic plane");
  check_signature(
      QRepresentation::make(QMatrix{{0, 1, 0, 0},
                                    {1, 0, 0, 0},
                                    {0, 0, 0, 2},
                                    {0, 0, 2, 0}},
                            QMatrix::identity(4)),
      "double hyperbolic");
  return c;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> results;
  std::vector<SignTable> produced_tables;
  const auto run = [&](int id, const std::string& name, auto&& fn) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Check c = fn();
      r.passed = c.ok;
      r.detail = c.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    results.push_back(std::move(r));
  };

  run(1, "six-basis polytope: bases, edges, face types",
      [&] { return criterion_six_basis(); });
  run(2, "GF(2) tetrahedron: even matroid, unique orientation, index",
      [&] { return criterion_tetrahedron(); });
  run(3, "tripod: orientations, indices, oriented non-isomorphism",
      [&] { return criterion_tripod(); });
  run(4, "long-square face in 4-space", [&] { return criterion_long_square(); });
  run(5, "quadratic-form index and rank agreement on random instances",
      [&] { return criterion_quadratic(seed); });
  run(6, "census equivalences: hull filter, balance, round trips, paths",
      [&] { return criterion_census(&produced_tables); });
  run(7, "cocycle identity and reciprocity on produced tables",
      [&] { return criterion_cocycle(produced_tables, seed); });
  run(8, "even-matroid corollary: unique orientation, zero signature",
      [&] { return criterion_even(seed); });
  return results;
}

}  // namespace lagmat
