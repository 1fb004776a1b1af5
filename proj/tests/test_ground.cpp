#include <doctest.h>

#include "lagmat/ground.hpp"

using namespace lagmat;

TEST_CASE("star is an involution without fixed points") {
  const GroundIndex one{1, false};
  CHECK(star(one) == GroundIndex{1, true});
  CHECK(star(GroundIndex{3, true}) == GroundIndex{3, false});
  CHECK(star(star(GroundIndex{2, false})) == GroundIndex{2, false});
  for (int i = 1; i <= 8; ++i)
    for (const bool s : {false, true})
      CHECK(star(GroundIndex{i, s}) != GroundIndex{i, s});
}

TEST_CASE("admissibility means no {i, i*} pair") {
  CHECK(is_admissible({{1, false}, {2, true}}));
  CHECK_FALSE(is_admissible({{1, false}, {1, true}}));
  CHECK(is_admissible({}));
}

TEST_CASE("transversal notation parses and formats") {
  const Transversal t = parse_transversal("12*3", 3);
  CHECK(t.sign(1) == 1);
  CHECK(t.sign(2) == -1);
  CHECK(t.sign(3) == 1);
  CHECK(to_string(t) == "12*3");

  const Transversal all = parse_transversal("1*2*3*", 3);
  CHECK(all.stars == full_mask(3));

  CHECK_THROWS_AS(parse_transversal("12*", 3), parse_error);    // 3 unassigned
  CHECK_THROWS_AS(parse_transversal("112*3", 3), parse_error);  // repeated
  CHECK_THROWS_AS(parse_transversal("12*4", 3), parse_error);   // out of range
  CHECK_THROWS_AS(parse_admissible_set("11*", 3), parse_error); // inadmissible
}

TEST_CASE("multi-digit ground sets use comma-separated tokens") {
  const Transversal t = parse_transversal("1,2*,3,4,5,6,7,8,9,10*", 10);
  CHECK(t.sign(2) == -1);
  CHECK(t.sign(10) == -1);
  CHECK(to_string(t) == "1,2*,3,4,5,6,7,8,9,10*");
}

TEST_CASE("parse/format round-trips over every transversal, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (Mask stars = 0; stars < (Mask{1} << n); ++stars) {
      const Transversal t{n, stars};
      CHECK(parse_transversal(to_string(t), n) == t);
    }
  }
}

TEST_CASE("ordering enumeration counts 2^n n!") {
  CHECK(enumerate_orderings(1).size() == 2);
  CHECK(enumerate_orderings(2).size() == 8);
  CHECK(enumerate_orderings(3).size() == 48);
  CHECK_THROWS_AS(enumerate_orderings(9), domain_error);

  // Distinctness: rank tables differ pairwise.
  const auto all = enumerate_orderings(3);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      CHECK(ordering_ranks(all[i]).rank != ordering_ranks(all[j]).rank);
}

TEST_CASE("orderings enumerate lexicographically in (perm, flips)") {
  const auto all = enumerate_orderings(2);
  REQUIRE(all.size() == 8);
  const std::vector<std::vector<int>> perms = {{1, 2}, {1, 2}, {1, 2}, {1, 2},
                                               {2, 1}, {2, 1}, {2, 1}, {2, 1}};
  // Flip vectors (b0, b1) in order 00, 01, 10, 11; bit k of the mask is b_k.
  const std::vector<Mask> flips = {0b00, 0b10, 0b01, 0b11,
                                   0b00, 0b10, 0b01, 0b11};
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].perm == perms[i]);
    CHECK(all[i].flips == flips[i]);
  }
  CHECK(all.front() == AdmissibleOrdering::base(2));
}

TEST_CASE("induced orders are admissible: i < j implies j* < i*") {
  for (int n = 1; n <= 4; ++n) {
    for_each_ordering(n, [&](const AdmissibleOrdering& w) {
      const OrderingRanks r = ordering_ranks(w);
      for (int i = 1; i <= n; ++i)
        for (const bool s : {false, true}) {
          const GroundIndex x{i, s};
          CHECK(r.of(x) + r.of(star(x)) == 2 * n - 1);
        }
      return true;
    });
  }
}

TEST_CASE("Gale comparison under the base order") {
  const AdmissibleOrdering base = AdmissibleOrdering::base(2);
  const auto set = [](const std::string& text, int n) {
    return parse_admissible_set(text, n);
  };
  CHECK(compare_sets(base, set("1*2*", 2), set("12", 2)) == GaleOrder::Less);
  CHECK(compare_sets(base, set("12", 2), set("12", 2)) == GaleOrder::Equal);
  // Sorted under 2* < 1* < 1 < 2: {1,2*} = (2*,1) and {1*,2} = (1*,2),
  // componentwise 2* < 1* and 1 < 2.
  CHECK(compare_sets(base, set("12*", 2), set("1*2", 2)) == GaleOrder::Less);
  CHECK_THROWS_AS(compare_sets(base, set("1", 2), set("12", 2)), domain_error);
}

TEST_CASE("Gale comparison is antisymmetric") {
  for (const int n : {2, 3}) {
    const auto orderings = enumerate_orderings(n);
    std::vector<AdmissibleSet> sets;
    for (Mask stars = 0; stars < (Mask{1} << n); ++stars)
      sets.push_back(Transversal{n, stars}.as_set());
    for (const auto& w : orderings)
      for (const auto& a : sets)
        for (const auto& b : sets) {
          const GaleOrder ab = compare_sets(w, a, b);
          const GaleOrder ba = compare_sets(w, b, a);
          switch (ab) {
            case GaleOrder::Less: CHECK(ba == GaleOrder::Greater); break;
            case GaleOrder::Greater: CHECK(ba == GaleOrder::Less); break;
            case GaleOrder::Equal: CHECK(ba == GaleOrder::Equal); break;
            case GaleOrder::Incomparable:
              CHECK(ba == GaleOrder::Incomparable);
              break;
          }
        }
  }
}

TEST_CASE("signed permutations act compatibly with star") {
  for_each_ordering(3, [&](const AdmissibleOrdering& w) {
    for (int i = 1; i <= 3; ++i)
      for (const bool s : {false, true}) {
        const GroundIndex x{i, s};
        CHECK(apply(w, star(x)) == star(apply(w, x)));
      }
    return true;
  });
}
