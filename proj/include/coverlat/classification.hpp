#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "coverlat/fixed_point_family.hpp"

namespace coverlat {

/// Three members with a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c).
struct DistributivityWitness {
  Subset a, b, c;
};

/// Why a family fails to be a Stone (or dual Stone) algebra.
enum class AlgebraFailure {
  NoPseudocomplement,  // element (or its pseudocomplement) has none
  IdentityFails,       // x* ∨ x** ≠ 1, resp. x⁺ ∧ x⁺⁺ ≠ 0
  NotDistributive,     // see the report's distributivity witness
};

struct AlgebraWitness {
  AlgebraFailure reason;
  Subset element;
};

struct ClassificationReport {
  FamilyKind kind = FamilyKind::NeighborhoodFixedPoints;
  std::size_t member_count = 0;

  bool bounded = false;
  bool complete = false;
  bool distributive = false;
  std::optional<DistributivityWitness> distributivity_witness;
  bool complemented = false;
  std::optional<Subset> complement_witness;  // a member with no complement
  bool boolean = false;
  bool pseudocomplemented = false;
  std::optional<Subset> pseudocomplement_witness;
  bool dual_pseudocomplemented = false;
  std::optional<Subset> dual_pseudocomplement_witness;
  bool stone = false;
  std::optional<AlgebraWitness> stone_witness;
  bool dual_stone = false;
  std::optional<AlgebraWitness> dual_stone_witness;
  bool double_p_algebra = false;
  bool double_stone = false;
};

struct ClassifyOptions {
  /// Completeness is decided by enumerating every sub-family when the
  /// family has at most this many members, and by pairwise closure (which
  /// suffices for finite lattices) otherwise.
  std::size_t enumerate_completeness_up_to = 20;
};

/// Evaluates every structural flag by exhaustive scan over the members.
///
/// Witness choice is deterministic. The distributivity witness is the
/// lexicographically least failing triple in canonical member order. The
/// Stone and dual Stone witnesses are the least failing member, except that
/// a member violating both identities at once is preferred when one exists.
ClassificationReport classify(const FixedPointFamily& family, const ClassifyOptions& options = {});

/// Closure of the members under arbitrary joins and meets, decided by
/// enumerating all 2^|members| sub-families.
bool complete_by_enumeration(const FixedPointFamily& family);

// Witness re-checks: each returns true iff the witness really exhibits the
// failure it claims.
bool distributivity_fails(const FixedPointFamily& family, const DistributivityWitness& w);
bool has_no_complement(const FixedPointFamily& family, const Subset& x);
bool stone_fails(const FixedPointFamily& family, const AlgebraWitness& w,
                 const ClassificationReport& report);
bool dual_stone_fails(const FixedPointFamily& family, const AlgebraWitness& w,
                      const ClassificationReport& report);

/// True iff the report's implications hold (boolean ⇒ complemented ∧
/// distributive, double Stone ⇒ Stone ∧ dual Stone, ...) and every stored
/// witness re-checks as a failure.
bool report_is_consistent(const FixedPointFamily& family, const ClassificationReport& report);

}  // namespace coverlat
