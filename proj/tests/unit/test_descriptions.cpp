#include <doctest.h>

#include <thread>

#include "coverlat/descriptions.hpp"
#include "coverlat/errors.hpp"
#include "coverlat/verification.hpp"
#include "helpers.hpp"

using namespace coverlat;
using testing::S;

namespace {

// Definitions read literally, for comparison.
Subset naive_neighborhood(const Covering& c, std::size_t x) {
  Subset out = Subset::full(c.universe_size());
  for (const auto& k : c.blocks())
    if (k.contains(x)) out &= k;
  return out;
}

std::vector<Subset> naive_md(const Covering& c, std::size_t x) {
  std::vector<Subset> out;
  for (const auto& k : c.blocks()) {
    if (!k.contains(x)) continue;
    bool minimal = true;
    for (const auto& s : c.blocks())
      if (s.contains(x) && s.is_proper_subset_of(k)) minimal = false;
    if (minimal) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("neighborhoods and minimal descriptions of the first example") {
  const ApproxSpace space(testing::example_one());
  CHECK(neighborhood(space, 0) == S(4, {1}));
  CHECK(neighborhood(space, 1) == S(4, {2, 3}));
  CHECK(neighborhood(space, 2) == S(4, {3}));
  CHECK(neighborhood(space, 3) == S(4, {1, 3, 4}));
  CHECK(minimal_description(space, 2) == testing::family(4, {{2, 3}, {1, 3, 4}}));
  CHECK(minimal_description(space, 0) == testing::family(4, {{1}}));
  CHECK_FALSE(is_unary(space));
  CHECK_FALSE(neighborhoods_form_partition(space));
  CHECK_THROWS_AS(neighborhood(space, 4), Error);
  CHECK_THROWS_AS(minimal_description(space, 4), Error);
}

TEST_CASE("unary coverings") {
  CHECK(is_unary(ApproxSpace(testing::example_three())));
  CHECK(is_unary(ApproxSpace(testing::make_covering(3, {{1, 2, 3}}))));
  CHECK_FALSE(is_unary(ApproxSpace(testing::non_distributive())));
}

TEST_CASE("a partition's neighborhoods are its blocks") {
  const ApproxSpace space(testing::make_covering(5, {{1, 2}, {3}, {4, 5}}));
  CHECK(neighborhoods_form_partition(space));
  CHECK(neighborhood(space, 4) == S(5, {4, 5}));
  CHECK(is_unary(space));
}

TEST_CASE("neighborhoods and descriptions agree with the definitions on every covering of 3 elements") {
  for (const auto& c : enumerate_coverings(3)) {
    const ApproxSpace space(c);
    for (std::size_t x = 0; x < 3; ++x) {
      CHECK(neighborhood(space, x) == naive_neighborhood(c, x));
      CHECK(minimal_description(space, x) == naive_md(c, x));
    }
    CHECK(is_unary(space) == intersections_are_block_unions(space));
  }
}

TEST_CASE("unary iff pairwise intersections are block unions, over all coverings of 4 elements") {
  std::size_t unary = 0;
  CoveringEnumerator it(4);
  while (auto c = it.next()) {
    const ApproxSpace space(*c);
    REQUIRE(is_unary(space) == intersections_are_block_unions(space));
    unary += is_unary(space);
  }
  CHECK(unary == 5745);
}

TEST_CASE("concurrent first access fills the cache once") {
  const ApproxSpace space(testing::example_one());
  std::vector<const std::vector<Subset>*> seen(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] { seen[t] = &space.neighborhoods(); });
  for (auto& t : threads) t.join();
  for (auto* p : seen) CHECK(p == seen[0]);
  const ApproxSpace copy = space;
  CHECK(&copy.neighborhoods() == seen[0]);
}
