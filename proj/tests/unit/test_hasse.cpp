#include <doctest.h>

#include "coverlat/hasse.hpp"
#include "coverlat/verification.hpp"
#include "helpers.hpp"

using namespace coverlat;
using testing::S;

TEST_CASE("Hasse diagram of F for the third example") {
  const auto f = build_F(ApproxSpace(testing::example_three()));
  const auto d = hasse(f);
  CHECK(d.nodes == testing::family(4, {{}, {1}, {3}, {1, 3}, {2, 3}, {1, 2, 3}, {1, 3, 4},
                                       {1, 2, 3, 4}}));
  const std::vector<std::pair<std::size_t, std::size_t>> edges = {
      {0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {3, 6}, {4, 5}, {5, 7}, {6, 7}};
  CHECK(d.edges == edges);
  CHECK(d.lower_cover_counts() == std::vector<std::size_t>{0, 1, 1, 2, 1, 2, 1, 2});
}

TEST_CASE("nodes are ordered by cardinality, then bit pattern") {
  const auto p = build_P(ApproxSpace(testing::make_covering(3, {{3}, {1, 2}})));
  const auto d = hasse(p);
  CHECK(d.nodes == testing::family(3, {{}, {3}, {1, 2}, {1, 2, 3}}));
}

TEST_CASE("both join-irreducible computations agree") {
  for (const auto& c : enumerate_coverings(3)) {
    for (auto kind : {FamilyKind::NeighborhoodFixedPoints, FamilyKind::CoveringFixedPoints}) {
      const auto fam = build_family(ApproxSpace(c), kind);
      CHECK(join_irreducibles(fam) == join_irreducibles_by_hasse(fam));
    }
  }
}

TEST_CASE("cover edges are exactly the non-transitive order pairs") {
  const auto f = build_F(ApproxSpace(random_covering(7, 0.05, 11)));
  const auto d = hasse(f);
  std::size_t covers = 0;
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    for (std::size_t j = 0; j < d.nodes.size(); ++j) {
      if (!d.nodes[i].is_proper_subset_of(d.nodes[j])) continue;
      bool between = false;
      for (const auto& z : d.nodes)
        between |= d.nodes[i].is_proper_subset_of(z) && z.is_proper_subset_of(d.nodes[j]);
      if (!between) {
        ++covers;
        CHECK(std::binary_search(d.edges.begin(), d.edges.end(), std::pair{i, j}));
      }
    }
  CHECK(covers == d.edges.size());
}
