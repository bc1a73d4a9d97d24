#include <doctest.h>

#include "coverlat/errors.hpp"
#include "coverlat/reduction.hpp"
#include "coverlat/verification.hpp"
#include "helpers.hpp"

using namespace coverlat;
using testing::S;

TEST_CASE("reducible blocks of the first example") {
  const Covering c = testing::example_one();
  CHECK(is_reducible(c, 0));  // {1,2,3} = {1} ∪ {2,3}
  CHECK_FALSE(is_reducible(c, 1));
  CHECK_FALSE(is_reducible(c, 2));
  CHECK_FALSE(is_reducible(c, 3));
  CHECK(reducible_blocks(c) == std::vector<std::size_t>{0});
  CHECK_THROWS_AS((void)is_reducible(c, 4), Error);
  CHECK(is_reducible(ApproxSpace(c), 0));
}

TEST_CASE("reduct") {
  const ApproxSpace space(testing::example_one());
  const Covering r = reduct(space);
  CHECK(r == testing::make_covering(4, {{1}, {2, 3}, {1, 3, 4}}));
  CHECK(std::vector<Subset>(r.blocks().begin(), r.blocks().end()) ==
        testing::family(4, {{1}, {2, 3}, {1, 3, 4}}));
  CHECK(reducible_blocks(r).empty());
  CHECK(compute_reduct(r) == r);

  const Covering three = testing::example_three();
  CHECK(compute_reduct(three) == three);
}

TEST_CASE("chains of reducible blocks") {
  // {1,2,3} is a union of {1,2} and {3}; {1,2} of {1} and {2}.
  const Covering c = testing::make_covering(3, {{1, 2, 3}, {1, 2}, {1}, {2}, {3}});
  CHECK(reducible_blocks(c) == std::vector<std::size_t>{0, 1});
  CHECK(compute_reduct(c) == testing::make_covering(3, {{1}, {2}, {3}}));
}

TEST_CASE("removing one reducible block leaves the others reducible") {
  for (const auto& c : enumerate_coverings(3)) {
    const auto r = reducible_blocks(c);
    for (std::size_t k : r) {
      const Covering smaller = c.without(k);
      for (std::size_t j = 0; j < c.block_count(); ++j) {
        if (j == k) continue;
        CHECK(is_reducible(c, j) == is_reducible(smaller, j > k ? j - 1 : j));
      }
    }
  }
}

TEST_CASE("every removal order reaches the same reduct") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& c : enumerate_coverings(n)) {
      auto results = all_reduction_results(c, 16);
      REQUIRE(results.has_value());
      REQUIRE(results->size() == 1);
      CHECK(results->front() == compute_reduct(c).sorted_blocks());
    }
  }
  const Covering c = testing::make_covering(3, {{1, 2, 3}, {1, 2}, {1}, {2}, {3}});
  CHECK_FALSE(all_reduction_results(c, 1).has_value());
}
