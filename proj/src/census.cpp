#include "lagmat/census.hpp"

#include "lagmat/orient.hpp"
#include "lagmat/polytope.hpp"

namespace lagmat {

CensusSummary run_census(int n) {
  CensusSummary out;
  out.n = n;
  for (const auto& m : enumerate_lagrangian_matroids(n)) {
    ++out.matroids;
    if (is_even(m)) ++out.even_matroids;
    const auto orientations = enumerate_orientations(m);
    ++out.orientation_histogram[static_cast<int>(orientations.size())];
    for (const auto& face : scan_faces(m).faces)
      ++out.face_histogram[face_kind_name(face.kind)];
  }
  return out;
}

}  // namespace lagmat
