#include <doctest.h>

#include "lagmat/exact.hpp"

using namespace lagmat;

namespace {

// Small deterministic generator for property checks.
struct Lcg {
  std::uint64_t s = 0x2545F4914F6CDD1Dull;
  int next(int lo, int hi) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return lo + static_cast<int>((s >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

QMatrix random_matrix(Lcg& rng, int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = rng.next(-5, 5);
  return m;
}

}  // namespace

TEST_CASE("determinant basics") {
  CHECK(det(QMatrix(0, 0)) == 1);
  CHECK(det(QMatrix::identity(3)) == 1);
  CHECK(det(QMatrix{{1, 1}, {1, 2}}) == 1);
  CHECK(det(QMatrix{{1, 1}, {1, 1}}) == 0);
  CHECK_THROWS_AS(det(QMatrix(2, 3)), domain_error);
}

TEST_CASE("determinant over GF(2)") {
  const F2Matrix a{{GF2{0}, GF2{1}}, {GF2{1}, GF2{0}}};
  CHECK(det(a) == GF2{1});
  const F2Matrix b{{GF2{1}, GF2{1}}, {GF2{1}, GF2{1}}};
  CHECK(det(b) == GF2{0});
}

TEST_CASE("determinant is multiplicative and alternating") {
  Lcg rng;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 4;
    const QMatrix a = random_matrix(rng, n);
    const QMatrix b = random_matrix(rng, n);
    CHECK(det(a * b) == det(a) * det(b));
    if (n >= 2) {
      QMatrix swapped = a;
      for (int c = 0; c < n; ++c) std::swap(swapped.at(0, c), swapped.at(1, c));
      CHECK(det(swapped) == -det(a));
    }
  }
}

TEST_CASE("normalize_right_block solves R X = L") {
  const QMatrix l{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
  CHECK(normalize_right_block(l, QMatrix::identity(3)) == l);

  const QMatrix left{{1, 1, 1}, {0, 1, 1}, {0, 1, 1}};
  const QMatrix right{{-1, 0, 0}, {-1, 1, 0}, {-1, 0, 1}};
  const QMatrix expected{{-1, -1, -1}, {-1, 0, 0}, {-1, 0, 0}};
  CHECK(normalize_right_block(left, right) == expected);

  Lcg rng;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 4;
    const QMatrix r = random_matrix(rng, n);
    if (det(r) == 0) continue;
    const QMatrix l2 = random_matrix(rng, n);
    CHECK(r * normalize_right_block(l2, r) == l2);
  }

  CHECK_THROWS_AS(normalize_right_block(QMatrix::identity(2),
                                        QMatrix{{1, 1}, {1, 1}}),
                  domain_error);
}

TEST_CASE("rational scalar parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("2/4") == Rat(1, 2));
  CHECK(parse_rational("-2/4") == Rat(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
  CHECK_THROWS_AS(parse_rational("a"), parse_error);
  CHECK_THROWS_AS(parse_rational("1.5"), parse_error);
  CHECK(scalar_to_string(Rat(-1, 2)) == "-1/2");
}

TEST_CASE("GF(2) scalar parsing") {
  CHECK(parse_gf2("0") == GF2{0});
  CHECK(parse_gf2("1") == GF2{1});
  CHECK_THROWS_AS(parse_gf2("2"), parse_error);
  CHECK_THROWS_AS((GF2{1} / GF2{0}), domain_error);
}

TEST_CASE("rank by exact elimination") {
  CHECK(rank(QMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}) == 1);
  CHECK(rank(QMatrix{{0, 1}, {1, 0}}) == 2);
  CHECK(rank(QMatrix(3, 3)) == 0);
}
