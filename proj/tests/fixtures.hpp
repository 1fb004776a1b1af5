#pragma once

// Shared fixture representations used across the test suite.

#include <string>
#include <vector>

#include "lagmat/represent.hpp"

namespace fixtures {

using namespace lagmat;

// Six-basis rank-1-bump example: symmetric left block, identity right.
inline QRepresentation six_basis() {
  return QRepresentation::make(QMatrix{{1, 1, 1}, {1, 2, 2}, {1, 2, 2}},
                               QMatrix::identity(3));
}

// Even tetrahedron over GF(2).
inline F2Representation tetra_gf2() {
  return F2Representation::make(
      F2Matrix{{GF2{0}, GF2{1}, GF2{1}},
               {GF2{1}, GF2{0}, GF2{1}},
               {GF2{1}, GF2{1}, GF2{0}}},
      F2Matrix::identity(3));
}

// Tripod pair: same matroid {1*23, 12*3, 123*, 123}, opposite orientations.
inline QRepresentation tripod_neg() {  // all signs -1 relative to 123
  return QRepresentation::make(QMatrix::identity(3),
                               QMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
}

inline QRepresentation tripod_pos() {  // all signs +1 relative to 123
  return QRepresentation::make(
      QMatrix::identity(3), QMatrix{{-1, -1, -1}, {-1, -1, -1}, {-1, -1, -1}});
}

// Four bases forming a single square of long edges in 4-space.
inline QRepresentation long_square() {
  return QRepresentation::make(
      QMatrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}},
      QMatrix::identity(4));
}

inline QRepresentation hyperbolic() {
  return QRepresentation::make(QMatrix{{0, 1}, {1, 0}}, QMatrix::identity(2));
}

inline BasisSystem from_names(int n, const std::vector<std::string>& names) {
  std::vector<Transversal> ts;
  for (const auto& s : names) ts.push_back(parse_transversal(s, n));
  return BasisSystem::lagrangian(n, ts);
}

inline Transversal tv(const std::string& name, int n) {
  return parse_transversal(name, n);
}

}  // namespace fixtures
