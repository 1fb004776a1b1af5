#include <doctest.h>

#include "fixtures.hpp"
#include "lagmat/matroid.hpp"
#include "lagmat/orient.hpp"

using namespace lagmat;

TEST_CASE("census kernel agrees with the serial reference, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const auto parallel = enumerate_lagrangian_matroids(n);
    const auto serial = enumerate_lagrangian_matroids_serial(n);
    CHECK(parallel == serial);
  }
}

TEST_CASE("census kernel is thread-count independent at n = 4") {
  const auto threaded = lagrangian_collection_flags(4, true);
  const auto single = lagrangian_collection_flags(4, false);
  CHECK(threaded == single);
  long long count = 0;
  for (const char f : threaded) count += f;
  CHECK(count == 5959);
}

TEST_CASE("census kernel matches the serial reference at n = 4") {
  CHECK(enumerate_lagrangian_matroids(4) ==
        enumerate_lagrangian_matroids_serial(4));
}

TEST_CASE("orientation kernel agrees with the serial reference on the census") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& m : enumerate_lagrangian_matroids(n)) {
      CHECK(enumerate_orientations(m) == enumerate_orientations_serial(m));
    }
  }
}
