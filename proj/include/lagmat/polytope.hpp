#pragma once

// Cube embedding and the 2-skeleton of a Lagrangian matroid polytope.
// Short edges are single star exchanges (cube edges, length 2); long edges
// are double exchanges (face diagonals, length 2*sqrt(2)) present exactly
// when fewer than two of the intermediate transversals are bases.  The
// 2-faces fall into five combinatorial types.  Oriented skeletons direct
// the short edges; the balance condition (equal numbers of short edges with
// and against the boundary cycle in every face) characterizes the skeletons
// induced by orientations.

#include <string>
#include <vector>

#include <json.hpp>

#include "lagmat/orient.hpp"

namespace lagmat {

enum class EdgeKind { Short, Long };

struct Edge {
  Transversal a, b;  // notation order: to_string(a) < to_string(b)
  EdgeKind kind = EdgeKind::Short;

  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class FaceKind {
  ShortSquare,          // "sSquare"
  LongSquare,           // "lSquare"
  MixedRectangle,       // "nsRect"
  IsoscelesTriangle,    // "iTri"
  EquilateralTriangle,  // "eqTri"
};

std::string face_kind_name(FaceKind k);

struct Face {
  FaceKind kind = FaceKind::ShortSquare;
  std::vector<Transversal> cycle;  // boundary order
  std::vector<int> axes;           // 1-based coordinates varying on the face
  Mask fixed_mask = 0;             // coordinates constant over the face
  Mask fixed_stars = 0;            // their star pattern

  friend bool operator==(const Face&, const Face&) = default;
};

struct PolytopeSkeleton {
  int n = 0;
  std::vector<Transversal> vertices;  // the bases, notation order
  std::vector<Edge> edges;
  std::vector<Face> faces;

  int edge_index(const Transversal& a, const Transversal& b) const;  // -1 off
};

// Cube coordinates of a transversal: +1 where i is chosen, -1 where i*.
std::vector<int> embed_vertex(const Transversal& t);

PolytopeSkeleton compute_edges(const BasisSystem& m);  // vertices + edges
PolytopeSkeleton scan_faces(const BasisSystem& m);     // ... + faces

struct OrientedSkeleton {
  PolytopeSkeleton base;
  // Per edge: +1 directed a->b, -1 directed b->a, 0 for long edges.
  std::vector<std::int8_t> direction;
};

// Direct each short edge a->b iff s(a,b) = +1.  st must be an orientation
// of m; the result satisfies the balance condition.
OrientedSkeleton orient_skeleton(const BasisSystem& m, const SignTable& st);

// Directions induced by an arbitrary relative sign assignment: a short edge
// points up (away from rs.fundamental) iff its endpoint signs agree.  No
// validity requirement; coincides with orient_skeleton on orientations.
OrientedSkeleton skeleton_from_relative_signs(const BasisSystem& m,
                                              const RelativeSigns& rs);

// Faces violating the balance condition.
std::vector<Face> check_balance(const OrientedSkeleton& os);

// Propagate signs from s(f) = +1 across the skeleton: vertical long edges
// and downward short edges flip the sign, everything else preserves it.
// Throws domain_error naming the offending cycle when propagation
// contradicts itself (balance violated).
RelativeSigns signs_from_skeleton(const OrientedSkeleton& os,
                                  const Transversal& f);

// --- exports ------------------------------------------------------------

nlohmann::json skeleton_to_json(const PolytopeSkeleton& sk);
// Adds short-edge directions and per-vertex signs relative to the
// lexicographically least basis.
nlohmann::json skeleton_to_json(const OrientedSkeleton& os, const SignTable& st);

std::string skeleton_to_dot(const PolytopeSkeleton& sk);
std::string skeleton_to_dot(const OrientedSkeleton& os);

}  // namespace lagmat
