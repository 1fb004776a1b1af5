#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "lagmat/orient.hpp"

using namespace lagmat;
using fixtures::tv;

namespace {

std::set<std::string> names(const BasisSystem& m) {
  std::set<std::string> out;
  for (const auto& b : m.bases) out.insert(to_string(b));
  return out;
}

struct Lcg {
  std::uint64_t s = 0xC0FFEE123456789ull;
  int next(int lo, int hi) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return lo + static_cast<int>((s >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace

TEST_CASE("representation invariants are validated eagerly") {
  CHECK_THROWS_AS(QRepresentation::make(QMatrix{{0, 1}, {2, 0}},
                                        QMatrix::identity(2)),
                  domain_error);  // asymmetric product
  CHECK_THROWS_AS(QRepresentation::make(QMatrix(2, 2), QMatrix(2, 2)),
                  domain_error);  // rank deficient
  CHECK_THROWS_AS(QRepresentation::make(QMatrix(2, 3), QMatrix::identity(2)),
                  domain_error);  // not square
}

TEST_CASE("basis extraction reproduces the fixture systems") {
  CHECK(names(extract_bases(fixtures::six_basis(), 3)) ==
        std::set<std::string>{"1*2*3*", "12*3*", "1*23*", "1*2*3", "123*",
                              "12*3"});
  CHECK(names(extract_bases(fixtures::tetra_gf2(), 3)) ==
        std::set<std::string>{"1*2*3*", "123*", "12*3", "1*23"});
  CHECK(names(extract_bases(fixtures::long_square(), 4)) ==
        std::set<std::string>{"1*2*3*4*", "123*4*", "1*2*34", "1234"});
}

TEST_CASE("rank-2 extraction from the six-basis example") {
  const BasisSystem m = extract_bases(fixtures::six_basis(), 2);
  CHECK(m.k == 2);
  CHECK(m.bases.size() == 11);
  CHECK(names(m) == std::set<std::string>{"1*2", "1*2*", "1*3", "1*3*", "12",
                                          "12*", "13", "13*", "2*3", "2*3*",
                                          "23*"});
  CHECK(check_maximality(m).holds);
}

TEST_CASE("fundamental reduction at the all-starred basis is the left block") {
  const auto rep = fixtures::six_basis();
  const auto fr = fundamental_reduction(rep, tv("1*2*3*", 3));
  CHECK(fr.cf == rep.left);
}

TEST_CASE("fundamental reduction of the tripod examples") {
  const auto fr_pos = fundamental_reduction(fixtures::tripod_pos(), tv("123", 3));
  CHECK(fr_pos.cf == QMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});

  const auto fr_shift =
      fundamental_reduction(fixtures::tripod_pos(), tv("1*23", 3));
  CHECK(fr_shift.cf == QMatrix{{-1, -1, -1}, {-1, 0, 0}, {-1, 0, 0}});

  const auto fr_neg = fundamental_reduction(fixtures::tripod_neg(), tv("123", 3));
  CHECK(fr_neg.cf == QMatrix{{-1, -1, -1}, {-1, -1, -1}, {-1, -1, -1}});
}

TEST_CASE("reduction rejects non-bases") {
  CHECK_THROWS_AS(fundamental_reduction(fixtures::six_basis(), tv("123", 3)),
                  domain_error);
}

TEST_CASE("signs of bases are diagonal minor signs") {
  const auto pos = fundamental_reduction(fixtures::tripod_pos(), tv("123", 3));
  CHECK(sign_of_basis(pos, tv("123", 3)) == 1);  // empty minor
  CHECK(sign_of_basis(pos, tv("1*23", 3)) == 1);
  CHECK(sign_of_basis(pos, tv("1*2*3", 3)) == 0);  // not a basis

  const auto neg = fundamental_reduction(fixtures::tripod_neg(), tv("123", 3));
  CHECK(sign_of_basis(neg, tv("1*23", 3)) == -1);
  CHECK(sign_of_basis(neg, tv("12*3", 3)) == -1);
  CHECK(sign_of_basis(neg, tv("123*", 3)) == -1);
}

TEST_CASE("representation-derived signs satisfy the orientation rules") {
  Lcg rng;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 3;
    QMatrix s(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        s.at(i, j) = rng.next(-5, 5);
        s.at(j, i) = s.at(i, j);
      }
    const auto rep = QRepresentation::make(s, QMatrix::identity(n));
    const BasisSystem m = extract_bases(rep, n);
    for (const auto& f : m.transversals()) {
      const auto rs = orientation_from_representation(
          fundamental_reduction(rep, f), m);
      CHECK(validate_orientation(m, rs).empty());
    }
  }
}

TEST_CASE("extraction is invariant under row operations") {
  Lcg rng;
  const auto rep = fixtures::six_basis();
  for (int trial = 0; trial < 20; ++trial) {
    QMatrix u(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) u.at(i, j) = rng.next(-3, 3);
    if (det(u) == 0) continue;
    const auto transformed =
        QRepresentation::make(u * rep.left, u * rep.right);
    CHECK(names(extract_bases(transformed, 3)) == names(extract_bases(rep, 3)));
  }
}

TEST_CASE("0/1 matrices: GF(2) and Q extractions are separate but sane") {
  // Same 0/1 entries, arithmetic in the respective field only.
  const QMatrix q{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  const auto rat = extract_bases(
      QRepresentation::make(q, QMatrix::identity(3)), 3);
  const auto gf2 = extract_bases(fixtures::tetra_gf2(), 3);
  // det over Q of the full block is 2, which vanishes mod 2.
  CHECK(rat.contains(tv("123", 3)));
  CHECK_FALSE(gf2.contains(tv("123", 3)));
  for (const auto& b : gf2.bases)  // GF(2) minors are Q-odd minors
    CHECK(rat.contains(Transversal{3, b.stars}));
}

TEST_CASE("change of fundamental basis agrees with re-reduction") {
  // Signs relative to G computed through the table match the diagonal
  // minors of the reduction at G itself.
  Lcg rng;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 3;
    QMatrix s(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        s.at(i, j) = rng.next(-4, 4);
        s.at(j, i) = s.at(i, j);
      }
    const auto rep = QRepresentation::make(s, QMatrix::identity(n));
    const BasisSystem m = extract_bases(rep, n);
    const auto ts = m.transversals();
    const SignTable table = extend_signs(
        m, orientation_from_representation(
               fundamental_reduction(rep, ts.front()), m));
    for (const auto& g : ts) {
      const auto direct = fundamental_reduction(rep, g);
      for (const auto& a : ts)
        CHECK(table.sign(g, a) == sign_of_basis(direct, a));
    }
  }
}
