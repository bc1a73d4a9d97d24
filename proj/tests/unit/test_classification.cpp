#include <doctest.h>

#include "coverlat/classification.hpp"
#include "coverlat/errors.hpp"
#include "coverlat/verification.hpp"
#include "helpers.hpp"

using namespace coverlat;
using testing::S;

namespace {

void check_flags_equal(const ClassificationReport& a, const ClassificationReport& b) {
  CHECK(a.member_count == b.member_count);
  CHECK(a.bounded == b.bounded);
  CHECK(a.complete == b.complete);
  CHECK(a.distributive == b.distributive);
  CHECK(a.complemented == b.complemented);
  CHECK(a.boolean == b.boolean);
  CHECK(a.pseudocomplemented == b.pseudocomplemented);
  CHECK(a.dual_pseudocomplemented == b.dual_pseudocomplemented);
  CHECK(a.stone == b.stone);
  CHECK(a.dual_stone == b.dual_stone);
  CHECK(a.double_p_algebra == b.double_p_algebra);
  CHECK(a.double_stone == b.double_stone);
}

// Replaces the last element by a block of `extra + 1` elements.
Covering inflate(const Covering& c, std::size_t extra) {
  const std::size_t n = c.universe_size();
  const std::size_t m = n + extra;
  std::vector<Subset> blocks;
  for (const auto& k : c.blocks()) {
    Subset b(m);
    k.for_each([&](std::size_t x) {
      if (x + 1 < n) {
        b.insert(x);
      } else {
        for (std::size_t y = n - 1; y < m; ++y) b.insert(y);
      }
    });
    blocks.push_back(std::move(b));
  }
  return Covering::from_subsets(m, std::move(blocks));
}

}  // namespace

TEST_CASE("P of the first example is neither Stone nor dual Stone") {
  const auto p = build_P(ApproxSpace(testing::example_one()));
  const auto r = classify(p);
  CHECK(r.member_count == 8);
  CHECK(r.bounded);
  CHECK(r.complete);
  CHECK(r.distributive);
  CHECK(r.pseudocomplemented);
  CHECK(r.dual_pseudocomplemented);
  CHECK(r.double_p_algebra);
  CHECK_FALSE(r.stone);
  CHECK_FALSE(r.dual_stone);
  CHECK_FALSE(r.double_stone);
  CHECK_FALSE(r.boolean);
  REQUIRE(r.stone_witness);
  REQUIRE(r.dual_stone_witness);
  CHECK(r.stone_witness->element == S(4, {2, 3}));
  CHECK(r.dual_stone_witness->element == S(4, {2, 3}));
  CHECK(r.stone_witness->reason == AlgebraFailure::IdentityFails);
  CHECK(stone_fails(p, *r.stone_witness, r));
  CHECK(dual_stone_fails(p, *r.dual_stone_witness, r));
  CHECK(report_is_consistent(p, r));
}

TEST_CASE("F of the non-distributive example") {
  const auto f = build_F(ApproxSpace(testing::non_distributive()));
  const auto r = classify(f);
  CHECK_FALSE(r.distributive);
  REQUIRE(r.distributivity_witness);
  CHECK(distributivity_fails(f, *r.distributivity_witness));
  // The triple quoted in the literature fails as well.
  CHECK(distributivity_fails(f, {S(4, {1, 2, 3}), S(4, {1, 3, 4}), S(4, {1, 2})}));
  CHECK_FALSE(distributivity_fails(f, {S(4, {1, 2}), S(4, {1, 2}), S(4, {1, 2})}));
  CHECK(r.complete);
  CHECK_FALSE(r.boolean);
  CHECK(report_is_consistent(f, r));
}

TEST_CASE("F of the third example") {
  const auto f = build_F(ApproxSpace(testing::example_three()));
  const auto r = classify(f);
  CHECK(r.distributive);
  CHECK(r.double_p_algebra);
  CHECK_FALSE(r.stone);
  CHECK_FALSE(r.dual_stone);
  // {3} and {2,3} are the elements exhibited in the literature.
  CHECK(stone_fails(f, {AlgebraFailure::IdentityFails, S(4, {3})}, r));
  CHECK(dual_stone_fails(f, {AlgebraFailure::IdentityFails, S(4, {2, 3})}, r));
  CHECK_FALSE(stone_fails(f, {AlgebraFailure::IdentityFails, S(4, {1, 2, 3, 4})}, r));
}

TEST_CASE("a single block gives the two-element boolean lattice") {
  for (auto kind : {FamilyKind::NeighborhoodFixedPoints, FamilyKind::CoveringFixedPoints}) {
    const auto fam = build_family(ApproxSpace(testing::make_covering(3, {{1, 2, 3}})), kind);
    const auto r = classify(fam);
    CHECK(fam.size() == 2);
    CHECK(r.boolean);
    CHECK(r.double_stone);
  }
}

TEST_CASE("partitions give boolean double Stone lattices") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& c : enumerate_partitions(n)) {
      for (auto kind : {FamilyKind::NeighborhoodFixedPoints, FamilyKind::CoveringFixedPoints}) {
        const auto r = classify(build_family(ApproxSpace(c), kind));
        CHECK(r.boolean);
        CHECK(r.double_stone);
        CHECK(r.member_count == (std::size_t{1} << c.block_count()));
      }
    }
  }
}

TEST_CASE("reports are consistent on every covering of 3 elements") {
  for (const auto& c : enumerate_coverings(3)) {
    for (auto kind : {FamilyKind::NeighborhoodFixedPoints, FamilyKind::CoveringFixedPoints}) {
      const auto fam = build_family(ApproxSpace(c), kind);
      const auto r = classify(fam);
      CHECK(report_is_consistent(fam, r));
      CHECK(r.complete == complete_by_enumeration(fam));
      if (kind == FamilyKind::NeighborhoodFixedPoints) CHECK(r.distributive);
    }
  }
}

TEST_CASE("completeness by closure agrees with enumeration") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto fam = build_F(ApproxSpace(random_covering(6, 0.06, seed)));
    if (fam.size() > 20) continue;
    const auto by_closure = classify(fam, {.enumerate_completeness_up_to = 0});
    CHECK(by_closure.complete == complete_by_enumeration(fam));
  }
  const auto big = build_P(ApproxSpace(Covering::from_subsets(
      5, {Subset::of(5, {0}), Subset::of(5, {1}), Subset::of(5, {2}), Subset::of(5, {3}),
          Subset::of(5, {4})})));
  CHECK(big.size() == 32);
  CHECK_THROWS_AS(complete_by_enumeration(big), Error);
  CHECK(classify(big).complete);
}

TEST_CASE("word and general code paths classify isomorphic lattices alike") {
  for (const auto& c : enumerate_coverings(3)) {
    const Covering wide = inflate(c, 64);
    REQUIRE(wide.universe_size() == 67);
    for (auto kind : {FamilyKind::NeighborhoodFixedPoints, FamilyKind::CoveringFixedPoints}) {
      const auto small = build_family(ApproxSpace(c), kind);
      const auto large = build_family(ApproxSpace(wide), kind);
      const auto rs = classify(small);
      const auto rl = classify(large);
      check_flags_equal(rs, rl);
      CHECK(report_is_consistent(large, rl));
    }
  }
}
