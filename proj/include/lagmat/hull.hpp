#pragma once

// Brute-force convex-hull edge detection for cube-vertex point sets, built
// on exact rational linear programming.  This is the independent route for
// the census equivalence: a collection of cube vertices is checked against
// the polytope-edge criterion without ever consulting the exchange-based
// adjacency test.  For cube vertices, [A,B] is a hull edge iff no convex
// combination of the remaining points meets the segment.

#include <utility>
#include <vector>

#include "lagmat/exact.hpp"
#include "lagmat/ground.hpp"

namespace lagmat {

// Is {x >= 0 : A x = b} non-empty?  Phase-I simplex with Bland's rule.
bool lp_feasible(const std::vector<std::vector<Rat>>& a,
                 const std::vector<Rat>& b);

// Index pairs (i < j) of hull edges of the point set.
std::vector<std::pair<int, int>> brute_hull_edges(
    const std::vector<std::vector<Rat>>& points);

// All hull edges of the embedded collection have squared length 4 or 8.
bool hull_edges_are_exchange_lengths(const std::vector<Transversal>& vertices);

}  // namespace lagmat
