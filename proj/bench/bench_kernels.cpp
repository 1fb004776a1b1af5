// Timing comparison between the OpenMP kernels and their serial references:
// the collection census scan and the orientation assignment scan.
//
//   ./lagmat_bench [--full]    (--full adds the n=4 census)

#include <chrono>
#include <cstdio>
#include <cstring>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lagmat/matroid.hpp"
#include "lagmat/orient.hpp"

namespace {

template <class F>
double seconds(F&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-36s serial %8.3f s   parallel %8.3f s   speedup %5.2fx\n",
              name, serial, parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  const bool full = argc > 1 && std::strcmp(argv[1], "--full") == 0;
#ifdef _OPENMP
  std::printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
  std::printf("OpenMP: unavailable, both columns run serially\n");
#endif

  {
    long long count = 0;
    const double serial = seconds([&] {
      count = static_cast<long long>(
          lagmat::enumerate_lagrangian_matroids_serial(3).size());
    });
    long long count_par = 0;
    const double parallel = seconds([&] {
      count_par =
          static_cast<long long>(lagmat::enumerate_lagrangian_matroids(3).size());
    });
    report("census n=3 (reference vs kernel)", serial, parallel);
    if (count != count_par) std::printf("  MISMATCH: %lld vs %lld\n", count, count_par);
  }

  if (full) {
    std::vector<char> a, b;
    const double serial =
        seconds([&] { a = lagmat::lagrangian_collection_flags(4, false); });
    const double parallel =
        seconds([&] { b = lagmat::lagrangian_collection_flags(4, true); });
    report("census n=4 (1 thread vs kernel)", serial, parallel);
    if (a != b) std::printf("  MISMATCH in n=4 flags\n");
  }

  {
    // Orientation scan over the full 4-cube: 16 bases, 2^15 assignments.
    std::vector<lagmat::Transversal> all;
    for (lagmat::Mask s = 0; s < 16; ++s) all.push_back({4, s});
    const auto cube = lagmat::BasisSystem::lagrangian(4, all);
    std::size_t count = 0, count_par = 0;
    const double serial = seconds(
        [&] { count = lagmat::enumerate_orientations_serial(cube).size(); });
    const double parallel =
        seconds([&] { count_par = lagmat::enumerate_orientations(cube).size(); });
    report("orientations of the 4-cube", serial, parallel);
    if (count != count_par)
      std::printf("  MISMATCH: %zu vs %zu\n", count, count_par);
    std::printf("  (the 4-cube admits %zu orientations)\n", count_par);
  }
  return 0;
}
