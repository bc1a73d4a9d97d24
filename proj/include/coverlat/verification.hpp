#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coverlat/approx_space.hpp"
#include "coverlat/classification.hpp"

namespace coverlat {

inline constexpr std::size_t kDefaultEnumerationCap = 4;
inline constexpr std::size_t kHardEnumerationCap = 5;
inline constexpr std::size_t kRandomCoveringCap = 24;

// ---------------------------------------------------------------------------
// Covering generators

struct EnumerationOptions {
  std::optional<std::size_t> limit;
  /// Largest n accepted; clamped to `kHardEnumerationCap`.
  std::size_t max_n = kDefaultEnumerationCap;
  /// Optional permutation of the nonempty subsets of U (as bit words). Bit j
  /// of the family counter selects subset_order[j]; empty means canonical
  /// order 1, 2, ..., 2^n - 1.
  std::vector<std::uint64_t> subset_order;
};

/// Yields every covering of {1..n} exactly once, in a deterministic order:
/// families of nonempty subsets are counted as binary numbers and those
/// whose union misses an element are skipped.
class CoveringEnumerator {
 public:
  /// Throws `Errc::SizeLimit` when n exceeds the configured cap.
  explicit CoveringEnumerator(std::size_t n, EnumerationOptions options = {});

  std::optional<Covering> next();

 private:
  std::size_t n_;
  EnumerationOptions options_;
  std::shared_ptr<const Universe> universe_;
  std::vector<std::uint64_t> subsets_;
  std::uint64_t family_ = 0;
  std::uint64_t end_ = 0;
  std::size_t yielded_ = 0;
};

std::vector<Covering> enumerate_coverings(std::size_t n, EnumerationOptions options = {});

/// Every partition of {1..n} (set partitions via restricted growth strings).
std::vector<Covering> enumerate_partitions(std::size_t n);

/// Each nonempty subset of {1..n} becomes a block with probability
/// `density`, drawn from mt19937_64(seed) in canonical subset order.
/// Elements left uncovered then receive singleton blocks, in index order.
/// Requires 0 < density < 1 and n <= kRandomCoveringCap.
Covering random_covering(std::size_t n, double density, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Reduction confluence

/// Every distinct irreducible covering reachable by removing reducible
/// blocks in any order, each as a block list in canonical order. Absent when
/// the covering has more than `max_reducible` reducible blocks.
std::optional<std::vector<std::vector<Subset>>> all_reduction_results(const Covering& covering,
                                                                      std::size_t max_reducible);

// ---------------------------------------------------------------------------
// Theorem suite

enum class Hypothesis {
  None,
  NeighborhoodPartition,  // {N(x)} is a partition of U
  Unary,                  // |Md(x)| = 1 for all x
  ReductPartition,        // reduct(C) is a partition of U
  FewReducibleBlocks,     // at most SuiteOptions::confluence_max_reducible
};

struct TheoremReport {
  std::string id;
  std::string statement;
  Hypothesis hypothesis = Hypothesis::None;
  bool hypothesis_holds = true;
  bool holds = true;
  /// Arguments at which the claim fails (subsets, elements as singletons,
  /// blocks as themselves). Empty for claims about the space as a whole.
  std::vector<Subset> witness;
};

struct SuiteOptions {
  /// Largest |U| for which the subset-exhaustive suite runs.
  std::size_t max_n = 8;
  std::size_t confluence_max_reducible = 5;
  ClassifyOptions classify;
};

/// Runs every registered check on one space. Conditional claims are only
/// evaluated when their hypothesis holds; otherwise `holds` stays true and
/// `hypothesis_holds` is false. Throws `Errc::SizeLimit` above `max_n`.
std::vector<TheoremReport> run_theorem_suite(const ApproxSpace& space,
                                             const SuiteOptions& options = {});

/// Re-evaluates a failing report's witness from scratch. True iff the
/// witness still exhibits a violation.
bool recheck_witness(const ApproxSpace& space, const TheoremReport& report,
                     const SuiteOptions& options = {});

std::vector<std::string_view> theorem_ids();

// ---------------------------------------------------------------------------
// Batch verification

struct TheoremTally {
  std::string id;
  std::size_t applicable = 0;
  std::size_t failures = 0;
};

struct SuiteFailure {
  std::size_t covering_index;
  Covering covering;
  TheoremReport report;
};

struct VerificationSummary {
  std::size_t coverings = 0;
  std::vector<TheoremTally> tallies;  // in theorem_ids() order
  std::vector<SuiteFailure> failures;  // in covering index order

  bool ok() const noexcept { return failures.empty(); }
};

/// Runs the suite on each covering. Work is spread over `threads` workers
/// (0: the THREADS environment variable, else the hardware concurrency);
/// results are merged in covering order, so output is reproducible.
VerificationSummary verify_coverings(std::span<const Covering> coverings,
                                     const SuiteOptions& options = {}, std::size_t threads = 0);

VerificationSummary verify_exhaustive(std::size_t n, const SuiteOptions& options = {},
                                      const EnumerationOptions& enumeration = {},
                                      std::size_t threads = 0);

/// Trial i uses random_covering(n, density, seed + i).
VerificationSummary verify_random(std::size_t n, std::size_t trials, double density,
                                  std::uint64_t seed, const SuiteOptions& options = {},
                                  std::size_t threads = 0);

// ---------------------------------------------------------------------------
// Counterexample search

struct GeneratorConfig {
  enum class Kind { Exhaustive, Random, PartitionsOnly };
  Kind kind = Kind::Exhaustive;
  std::size_t n = 4;
  std::size_t trials = 1000;
  double density = 0.03;
  std::uint64_t seed = 1;
  std::size_t max_n = kDefaultEnumerationCap;
};

struct Counterexample {
  std::size_t covering_index;
  Covering covering;
  std::vector<Subset> witness;
};

/// Names of the registered predicates, e.g. "P-stone", "F-distributive".
std::vector<std::string_view> predicate_ids();

/// Evaluates a registered predicate; on failure, fills `witness` (if given)
/// with the failing arguments. Throws `Errc::UnknownPredicate`.
bool predicate_holds(std::string_view predicate, const ApproxSpace& space,
                     std::vector<Subset>* witness = nullptr);

/// First covering, in generator order, on which the predicate fails.
std::optional<Counterexample> find_counterexample(std::string_view predicate,
                                                  const GeneratorConfig& config);

std::string_view to_string(Hypothesis h) noexcept;

}  // namespace coverlat
