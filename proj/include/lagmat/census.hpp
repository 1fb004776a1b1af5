#pragma once

// Aggregated statistics over the exhaustive small-n census: matroid and
// even-matroid counts, orientation-count histogram, face-type histogram.

#include <map>
#include <string>

#include "lagmat/matroid.hpp"

namespace lagmat {

struct CensusSummary {
  int n = 0;
  long long matroids = 0;
  long long even_matroids = 0;
  std::map<int, long long> orientation_histogram;   // #orientations -> count
  std::map<std::string, long long> face_histogram;  // face kind -> total
};

CensusSummary run_census(int n);

}  // namespace lagmat
