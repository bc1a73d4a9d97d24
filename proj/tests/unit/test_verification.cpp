#include <doctest.h>

#include <algorithm>
#include <set>

#include "coverlat/errors.hpp"
#include "coverlat/verification.hpp"
#include "helpers.hpp"

using namespace coverlat;
using testing::S;

namespace {

// Frozen from tests/oracle/brute_force.py.
constexpr std::size_t kCoveringCounts[] = {1, 5, 109, 32297};

std::size_t count_coverings(std::size_t n, EnumerationOptions options = {}) {
  CoveringEnumerator it(n, std::move(options));
  std::size_t count = 0;
  while (it.next()) ++count;
  return count;
}

std::set<std::vector<Subset>> as_set(const std::vector<Covering>& coverings) {
  std::set<std::vector<Subset>> out;
  for (const auto& c : coverings) out.insert(c.sorted_blocks());
  return out;
}

const TheoremReport& report(const std::vector<TheoremReport>& reports, std::string_view id) {
  auto it = std::find_if(reports.begin(), reports.end(), [&](const auto& r) { return r.id == id; });
  REQUIRE(it != reports.end());
  return *it;
}

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::ParseError;
}

}  // namespace

TEST_CASE("covering counts match the brute-force oracle") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(count_coverings(n) == kCoveringCounts[n - 1]);
  const auto one = enumerate_coverings(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == testing::make_covering(1, {{1}}));
}

TEST_CASE("enumeration is duplicate-free and order-independent") {
  const auto canonical = enumerate_coverings(3);
  const auto set = as_set(canonical);
  CHECK(set.size() == canonical.size());

  EnumerationOptions reversed;
  for (std::uint64_t w = 7; w >= 1; --w) reversed.subset_order.push_back(w);
  CHECK(as_set(enumerate_coverings(3, reversed)) == set);

  EnumerationOptions shuffled;
  shuffled.subset_order = {5, 2, 7, 1, 4, 6, 3};
  CHECK(as_set(enumerate_coverings(3, shuffled)) == set);

  EnumerationOptions bad;
  bad.subset_order = {1, 2, 3};
  CHECK_THROWS_AS(enumerate_coverings(3, bad), std::invalid_argument);
}

TEST_CASE("enumeration limits and caps") {
  EnumerationOptions limited;
  limited.limit = 10;
  CHECK(count_coverings(3, limited) == 10);
  CHECK(error_of([] { CoveringEnumerator(5); }) == Errc::SizeLimit);
  CHECK(error_of([] { CoveringEnumerator(0); }) == Errc::SizeLimit);
  EnumerationOptions raised;
  raised.max_n = 99;
  CHECK(error_of([&] { CoveringEnumerator(6, raised); }) == Errc::SizeLimit);
  raised.limit = 3;
  CHECK(count_coverings(5, raised) == 3);
}

TEST_CASE("partitions are counted by the Bell numbers") {
  const std::size_t bell[] = {1, 2, 5, 15, 52, 203};
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto parts = enumerate_partitions(n);
    CHECK(parts.size() == bell[n - 1]);
    for (const auto& p : parts) CHECK(p.is_partition());
    CHECK(as_set(parts).size() == parts.size());
  }
}

TEST_CASE("random coverings are deterministic and valid") {
  CHECK(random_covering(8, 0.03, 42) == random_covering(8, 0.03, 42));
  CHECK_FALSE(random_covering(8, 0.3, 1) == random_covering(8, 0.3, 2));
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const Covering c = random_covering(8, 0.03, seed);
    CHECK(c.universe_size() == 8);
  }
  // A tiny density forces the singleton patch.
  const Covering sparse = random_covering(4, 1e-9, 5);
  CHECK(sparse.is_partition());
  CHECK(sparse.block_count() == 4);
  CHECK_THROWS_AS(random_covering(4, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_covering(4, 1.0, 1), std::invalid_argument);
  CHECK(error_of([] { random_covering(25, 0.1, 1); }) == Errc::SizeLimit);
}

TEST_CASE("suite on the first example") {
  const ApproxSpace space(testing::example_one());
  const auto reports = run_theorem_suite(space);
  CHECK(reports.size() == theorem_ids().size());
  for (const auto& r : reports) {
    INFO(r.id);
    CHECK(r.holds);
  }
  CHECK_FALSE(report(reports, "P-boolean").hypothesis_holds);
  CHECK_FALSE(report(reports, "F-distributive").hypothesis_holds);
  CHECK(report(reports, "P-distributive").hypothesis_holds);
  CHECK_FALSE(predicate_holds("P-stone", space));
  CHECK_FALSE(predicate_holds("P-dual-stone", space));
}

TEST_CASE("suite on the third example runs the unary branch") {
  const ApproxSpace space(testing::example_three());
  const auto reports = run_theorem_suite(space);
  for (const auto& r : reports) CHECK(r.holds);
  CHECK(report(reports, "F-distributive").hypothesis_holds);
  CHECK(report(reports, "F-double-p").hypothesis_holds);
  CHECK(report(reports, "F-meet-is-intersection").hypothesis_holds);
  CHECK_FALSE(report(reports, "F-boolean").hypothesis_holds);
  CHECK(predicate_holds("F-distributive", space));
  CHECK_FALSE(predicate_holds("F-stone", space));
}

TEST_CASE("suite on a partition runs every partition branch") {
  const ApproxSpace space(testing::make_covering(5, {{1, 2}, {3}, {4, 5}}));
  const auto reports = run_theorem_suite(space);
  for (const auto& r : reports) {
    INFO(r.id);
    CHECK(r.hypothesis_holds);
    CHECK(r.holds);
  }
  for (const char* p : {"P-boolean", "P-double-stone", "F-boolean", "F-double-stone"})
    CHECK(predicate_holds(p, space));
}

TEST_CASE("suite size cap") {
  const ApproxSpace space(random_covering(9, 0.01, 1));
  CHECK(error_of([&] { run_theorem_suite(space); }) == Errc::SizeLimit);
  SuiteOptions wide;
  wide.max_n = 9;
  CHECK(run_theorem_suite(space, wide).size() == theorem_ids().size());
}

TEST_CASE("witness recheck") {
  const ApproxSpace space(testing::example_one());
  TheoremReport fake;
  fake.id = "fl-xl-contraction";
  fake.holds = false;
  fake.witness = {S(4, {2, 4})};
  CHECK_FALSE(recheck_witness(space, fake));
  fake.id = "P-distributive";
  fake.witness = testing::family(4, {{1}, {3}, {2, 3}});
  CHECK_FALSE(recheck_witness(space, fake));
  fake.id = "no-such-theorem";
  CHECK(error_of([&] { (void)recheck_witness(space, fake); }) == Errc::UnknownPredicate);
}

TEST_CASE("batch verification merges in covering order") {
  const auto coverings = enumerate_coverings(3);
  const auto serial = verify_coverings(coverings, {}, 1);
  const auto parallel = verify_coverings(coverings, {}, 3);
  CHECK(serial.ok());
  CHECK(parallel.ok());
  CHECK(serial.coverings == 109);
  REQUIRE(serial.tallies.size() == parallel.tallies.size());
  for (std::size_t i = 0; i < serial.tallies.size(); ++i) {
    CHECK(serial.tallies[i].id == parallel.tallies[i].id);
    CHECK(serial.tallies[i].applicable == parallel.tallies[i].applicable);
  }
  CHECK(verify_random(6, 50, 0.05, 9).ok());
}

TEST_CASE("counterexample search") {
  GeneratorConfig exhaustive;
  exhaustive.n = 4;

  auto stone = find_counterexample("P-stone", exhaustive);
  REQUIRE(stone);
  CHECK_FALSE(stone->witness.empty());
  CHECK_FALSE(predicate_holds("P-stone", ApproxSpace(stone->covering)));

  auto distributive = find_counterexample("F-distributive", exhaustive);
  REQUIRE(distributive);
  CHECK(distributive->witness.size() == 3);

  CHECK_FALSE(find_counterexample("P-distributive", exhaustive).has_value());

  GeneratorConfig partitions;
  partitions.kind = GeneratorConfig::Kind::PartitionsOnly;
  partitions.n = 6;
  CHECK_FALSE(find_counterexample("P-boolean", partitions).has_value());
  CHECK_FALSE(find_counterexample("F-double-stone", partitions).has_value());

  GeneratorConfig random;
  random.kind = GeneratorConfig::Kind::Random;
  random.n = 5;
  random.trials = 200;
  random.density = 0.2;
  CHECK(find_counterexample("unary", random).has_value());

  CHECK(error_of([&] { (void)find_counterexample("P-frobnicate", exhaustive); }) ==
        Errc::UnknownPredicate);
  CHECK(error_of([&] { (void)predicate_holds("stone", ApproxSpace(testing::example_one())); }) ==
        Errc::UnknownPredicate);
}

TEST_CASE("space predicates name their witnesses") {
  const ApproxSpace space(testing::example_one());
  std::vector<Subset> w;
  CHECK_FALSE(predicate_holds("unary", space, &w));
  CHECK(w == testing::family(4, {{3}}));
  CHECK_FALSE(predicate_holds("irreducible", space, &w));
  CHECK(w == testing::family(4, {{1, 2, 3}}));
  CHECK_FALSE(predicate_holds("neighborhood-partition", space, &w));
  CHECK(w.size() == 2);
  CHECK(predicate_holds("F-complete", space, &w));
  CHECK(w.empty());
}
