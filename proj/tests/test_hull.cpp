#include <doctest.h>

#include "fixtures.hpp"
#include "lagmat/hull.hpp"

using namespace lagmat;
using fixtures::tv;

namespace {

std::vector<std::vector<Rat>> pts(std::initializer_list<std::vector<int>> rows) {
  std::vector<std::vector<Rat>> out;
  for (const auto& r : rows) {
    std::vector<Rat> p;
    for (const int x : r) p.emplace_back(x);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

TEST_CASE("lp feasibility on hand cases") {
  // x = 2 with x >= 0: feasible.
  CHECK(lp_feasible({{Rat(1)}}, {Rat(2)}));
  // x = -2 with x >= 0: infeasible.
  CHECK_FALSE(lp_feasible({{Rat(1)}}, {Rat(-2)}));
  // x + y = 1, x - y = 3, x,y >= 0: x=2, y=-1 infeasible.
  CHECK_FALSE(lp_feasible({{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}},
                          {Rat(1), Rat(3)}));
  // x + y = 3, x - y = 1: x=2, y=1 feasible.
  CHECK(lp_feasible({{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}}, {Rat(3), Rat(1)}));
}

TEST_CASE("hull edges of a square exclude the diagonals") {
  const auto square = pts({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  const auto edges = brute_hull_edges(square);
  CHECK(edges.size() == 4);
  for (const auto& [i, j] : edges) {
    Rat len2 = 0;
    for (int d = 0; d < 2; ++d) {
      const Rat diff = square[i][d] - square[j][d];
      len2 += diff * diff;
    }
    CHECK(len2 == 4);  // sides only
  }
}

TEST_CASE("hull edges of a triangle are all pairs") {
  CHECK(brute_hull_edges(pts({{1, 1}, {1, -1}, {-1, 1}})).size() == 3);
}

TEST_CASE("two points always form an edge") {
  CHECK(brute_hull_edges(pts({{1, 1, 1}, {-1, -1, -1}})).size() == 1);
}

TEST_CASE("interior points break segments") {
  // Midpoint of the long diagonal lies in the hull of the other two corners.
  const auto square = pts({{1, 1}, {-1, -1}, {1, -1}, {-1, 1}});
  const auto edges = brute_hull_edges(square);
  for (const auto& [i, j] : edges) CHECK(i + j != 1);  // (0,1) is a diagonal
}

TEST_CASE("edge-length filter on named collections") {
  CHECK(hull_edges_are_exchange_lengths({tv("12", 2), tv("1*2*", 2)}));
  CHECK_FALSE(
      hull_edges_are_exchange_lengths({tv("123", 3), tv("1*2*3*", 3)}));
  CHECK(hull_edges_are_exchange_lengths({tv("1*23", 3), tv("12*3", 3),
                                         tv("123*", 3), tv("123", 3)}));
  CHECK(hull_edges_are_exchange_lengths({tv("12*", 2)}));  // no edges at all
}
