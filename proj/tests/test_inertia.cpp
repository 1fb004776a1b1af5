#include <doctest.h>

#include <numeric>

#include "lagmat/inertia.hpp"

using namespace lagmat;

namespace {

struct Lcg {
  std::uint64_t s = 0x9E3779B97F4A7C15ull;
  int next(int lo, int hi) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return lo + static_cast<int>((s >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

QMatrix random_symmetric(Lcg& rng, int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      m.at(i, j) = rng.next(-9, 9);
      m.at(j, i) = m.at(i, j);
    }
  return m;
}

}  // namespace

TEST_CASE("congruence diagonalization examples") {
  CHECK(congruence_diagonalize(QMatrix{{1, 0}, {0, -2}}) ==
        InertiaProfile{2, 1, 1});
  const InertiaProfile hyperbolic = congruence_diagonalize(QMatrix{{0, 1}, {1, 0}});
  CHECK(hyperbolic == InertiaProfile{2, 1, 1});
  CHECK(hyperbolic.index() == 1);
  CHECK(hyperbolic.signature() == 0);
  CHECK(congruence_diagonalize(QMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}) ==
        InertiaProfile{1, 1, 0});
  CHECK_THROWS_AS(congruence_diagonalize(QMatrix{{0, 1}, {2, 0}}), domain_error);
}

TEST_CASE("regular arrangement examples") {
  CHECK(regular_arrangement(QMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}) ==
        std::vector<int>{0, 1, 2});
  CHECK(regular_arrangement(QMatrix{{0, 1}, {1, 0}}) == std::vector<int>{0, 1});
  CHECK(regular_arrangement(QMatrix{{0, 0}, {0, 5}}) == std::vector<int>{1, 0});
}

TEST_CASE("leading principal minors") {
  const auto minors = leading_principal_minors(QMatrix{{0, 1}, {1, 0}}, 2);
  CHECK(minors == std::vector<Rat>{1, 0, -1});
}

TEST_CASE("principal-minor index examples") {
  CHECK(kronecker_index(QMatrix{{0, 1}, {1, 0}}) == InertiaProfile{2, 1, 1});
  CHECK(kronecker_index(QMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}) ==
        InertiaProfile{1, 1, 0});
  CHECK(kronecker_index(QMatrix{{-1, -1, -1}, {-1, 0, 0}, {-1, 0, 0}}) ==
        InertiaProfile{2, 1, 1});
}

TEST_CASE("both inertia routes agree on 500 random symmetric matrices") {
  Lcg rng;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 6;
    const QMatrix s = random_symmetric(rng, n);
    CHECK(kronecker_index(s) == congruence_diagonalize(s));
  }
}

TEST_CASE("inertia is invariant under simultaneous permutation") {
  Lcg rng;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 4;
    const QMatrix s = random_symmetric(rng, n);
    const InertiaProfile before = congruence_diagonalize(s);
    const QMatrix arranged = apply_symmetric_permutation(s, regular_arrangement(s));
    CHECK(congruence_diagonalize(arranged) == before);
  }
}

TEST_CASE("arrangements satisfy the no-consecutive-zeros contract") {
  Lcg rng;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 4;
    const QMatrix s = random_symmetric(rng, n);
    const int r = rank(s);
    const auto arranged = apply_symmetric_permutation(s, regular_arrangement(s));
    const auto minors = leading_principal_minors(arranged, r);
    for (int i = 1; i < r; ++i)
      CHECK((minors[i] != 0 || minors[i - 1] != 0));
    if (r > 0) CHECK(minors[r] != 0);
  }
}
