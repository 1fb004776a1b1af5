#pragma once

// Internal helper: enumeration of the 2-dimensional cube faces touching a
// basis set, plus membership tests on sorted star-mask vectors.  Every
// polytope edge lies in such a face, which is what makes face-local checking
// of sign rules and edge classification possible.

#include <algorithm>
#include <array>
#include <vector>

#include "lagmat/ground.hpp"

namespace lagmat::detail {

struct CubeFace {
  int bi = 0, bj = 0;    // varying coordinates, 0-based bits, bi < bj
  Mask fixed_stars = 0;  // star pattern on the remaining coordinates

  // Corner star-masks in the order (00, 10, 01, 11) where the first digit
  // is the star bit of bi.
  std::array<Mask, 4> corners() const {
    const Mask a = Mask{1} << bi, b = Mask{1} << bj;
    return {fixed_stars, fixed_stars | a, fixed_stars | b, fixed_stars | a | b};
  }

  friend auto operator<=>(const CubeFace&, const CubeFace&) = default;
};

inline bool is_member(const std::vector<Mask>& sorted_masks, Mask m) {
  return std::binary_search(sorted_masks.begin(), sorted_masks.end(), m);
}

// All cube 2-faces containing at least one of the given vertices,
// deterministic order.
inline std::vector<CubeFace> faces_touching(const std::vector<Mask>& masks,
                                            int n) {
  std::vector<CubeFace> faces;
  for (const Mask m : masks)
    for (int bi = 0; bi + 1 < n; ++bi)
      for (int bj = bi + 1; bj < n; ++bj)
        faces.push_back(
            {bi, bj, m & ~((Mask{1} << bi) | (Mask{1} << bj))});
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return faces;
}

inline std::vector<Mask> sorted_masks_of(const std::vector<Transversal>& ts) {
  std::vector<Mask> masks;
  masks.reserve(ts.size());
  for (const auto& t : ts) masks.push_back(t.stars);
  std::sort(masks.begin(), masks.end());
  return masks;
}

}  // namespace lagmat::detail
