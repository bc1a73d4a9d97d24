#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "coverlat/approx_space.hpp"

namespace coverlat {

/// Which lower approximation a family is the fixed-point set of.
enum class FamilyKind {
  NeighborhoodFixedPoints,  // P: { X : xl(X) = X }
  CoveringFixedPoints,      // F: { X : fl(X) = X }
};

enum class BuildStrategy {
  /// Closure of {∅} under union with the generators (neighborhoods for P,
  /// blocks for F). Scales with the family size, not with 2^|U|.
  UnionClosure,
  /// Tests every subset of U for being a fixed point. Gated by
  /// `BuildOptions::max_scan_size`.
  SubsetScan,
};

inline constexpr std::size_t kDefaultScanCap = 20;
inline constexpr std::size_t kHardScanCap = 24;

struct BuildOptions {
  BuildStrategy strategy = BuildStrategy::UnionClosure;
  /// Largest |U| accepted by the subset scan; never above `kHardScanCap`.
  std::size_t max_scan_size = kDefaultScanCap;
};

/// The members of P or F, distinct and sorted in canonical bit order.
class FixedPointFamily {
 public:
  /// Builds a family from explicit members. Every member must be a fixed
  /// point of the kind's operator, else `Errc::NotAMember` is thrown.
  static FixedPointFamily from_members(FamilyKind kind, ApproxSpace space,
                                       std::vector<Subset> members);

  FamilyKind kind() const noexcept { return kind_; }
  const ApproxSpace& space() const noexcept { return space_; }
  std::span<const Subset> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::size_t universe_size() const noexcept { return space_.universe_size(); }

  bool contains(const Subset& x) const;
  std::optional<std::size_t> index_of(const Subset& x) const;

  /// The greatest member contained in an arbitrary subset: xl(x) for P,
  /// fl(x) for F.
  Subset lower(const Subset& x) const;

  /// Throws `Errc::NotAMember` unless x is a member.
  void require_member(const Subset& x) const;

 private:
  FixedPointFamily(FamilyKind kind, ApproxSpace space, std::vector<Subset> members)
      : kind_(kind), space_(std::move(space)), members_(std::move(members)) {}

  friend FixedPointFamily build_family(const ApproxSpace&, FamilyKind, const BuildOptions&);

  FamilyKind kind_;
  ApproxSpace space_;
  std::vector<Subset> members_;
};

FixedPointFamily build_family(const ApproxSpace& space, FamilyKind kind,
                              const BuildOptions& options = {});

/// P: fixed points of xl, i.e. all unions of neighborhoods.
FixedPointFamily build_P(const ApproxSpace& space, const BuildOptions& options = {});
/// F: fixed points of fl, i.e. all unions of blocks.
FixedPointFamily build_F(const ApproxSpace& space, const BuildOptions& options = {});

// Lattice operations. Arguments must be members (`Errc::NotAMember`).
Subset join(const FixedPointFamily& family, const Subset& x, const Subset& y);
Subset meet(const FixedPointFamily& family, const Subset& x, const Subset& y);
/// ∪s; ∅ for an empty s.
Subset arbitrary_join(const FixedPointFamily& family, std::span<const Subset> s);
/// ∩s for P, fl(∩s) for F; U for an empty s.
Subset arbitrary_meet(const FixedPointFamily& family, std::span<const Subset> s);

/// Greatest lower bound / least upper bound computed from ⊆ over the
/// members alone, without the closed-form operations. Absent when the
/// bound does not exist.
std::optional<Subset> order_glb(const FixedPointFamily& family, const Subset& x, const Subset& y);
std::optional<Subset> order_lub(const FixedPointFamily& family, const Subset& x, const Subset& y);

/// Nonzero members a with a = b ∨ c ⇒ a = b or a = c, by pairwise scan.
std::vector<Subset> join_irreducibles(const FixedPointFamily& family);

/// Maximum member y with x ∧ y = ∅, or absent if none is maximum.
std::optional<Subset> pseudocomplement(const FixedPointFamily& family, const Subset& x);
/// Minimum member y with x ∨ y = U, or absent if none is minimum.
std::optional<Subset> dual_pseudocomplement(const FixedPointFamily& family, const Subset& x);

// Closed forms for P. x must lie in P.
Subset pseudocomplement_formula_P(const ApproxSpace& space, const Subset& x);  // xl(x^c)
Subset dual_formula_P(const ApproxSpace& space, const Subset& x);  // ∪_{z ∈ x^c} N(z)

// Closed forms for F, valid for unary coverings (`Errc::NotUnary` otherwise).
// x must lie in F.
Subset pseudocomplement_formula_F(const ApproxSpace& space, const Subset& x);  // fl(x^c)
/// Union of the irreducible blocks (blocks of reduct(C)) that meet x^c.
Subset dual_formula_F(const ApproxSpace& space, const Subset& x);

}  // namespace coverlat
