#include "coverlat/fixed_point_family.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "coverlat/approximations.hpp"
#include "coverlat/descriptions.hpp"
#include "coverlat/errors.hpp"
#include "coverlat/reduction.hpp"

namespace coverlat {

namespace {

std::vector<Subset> generators(const ApproxSpace& space, FamilyKind kind) {
  if (kind == FamilyKind::NeighborhoodFixedPoints) return space.neighborhoods();
  const auto blocks = space.covering().blocks();
  return {blocks.begin(), blocks.end()};
}

std::vector<Subset> union_closure(std::size_t n, const std::vector<Subset>& gens) {
  std::vector<Subset> closure{Subset(n)};
  std::unordered_set<Subset, SubsetHash> seen{Subset(n)};
  for (const auto& g : gens) {
    const std::size_t current = closure.size();
    for (std::size_t i = 0; i < current; ++i) {
      Subset candidate = closure[i] | g;
      if (seen.insert(candidate).second) closure.push_back(std::move(candidate));
    }
  }
  std::sort(closure.begin(), closure.end());
  return closure;
}

std::vector<Subset> subset_scan(const ApproxSpace& space, FamilyKind kind,
                                const BuildOptions& options) {
  const std::size_t n = space.universe_size();
  const std::size_t cap = std::min(options.max_scan_size, kHardScanCap);
  if (n > cap) {
    throw Error(Errc::SizeLimit, "subset scan over 2^" + std::to_string(n) +
                                     " subsets exceeds the cap of |U| <= " + std::to_string(cap));
  }
  std::vector<Subset> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t w = 0; w < total; ++w) {
    const Subset x = Subset::from_word(n, w);
    const Subset image = kind == FamilyKind::NeighborhoodFixedPoints ? xl(space, x) : fl(space, x);
    if (image == x) out.push_back(x);
  }
  return out;
}

void require_unary(const ApproxSpace& space) {
  if (!is_unary(space)) {
    throw Error(Errc::NotUnary, "closed form for F requires a unary covering");
  }
}

}  // namespace

FixedPointFamily FixedPointFamily::from_members(FamilyKind kind, ApproxSpace space,
                                                std::vector<Subset> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  FixedPointFamily family(kind, std::move(space), {});
  for (const auto& m : members) {
    if (family.lower(m) != m) {
      throw Error(Errc::NotAMember, "subset is not a fixed point of the family's operator");
    }
  }
  family.members_ = std::move(members);
  return family;
}

bool FixedPointFamily::contains(const Subset& x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

std::optional<std::size_t> FixedPointFamily::index_of(const Subset& x) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

Subset FixedPointFamily::lower(const Subset& x) const {
  return kind_ == FamilyKind::NeighborhoodFixedPoints ? xl(space_, x) : fl(space_, x);
}

void FixedPointFamily::require_member(const Subset& x) const {
  if (x.universe_size() != universe_size()) {
    throw Error(Errc::UniverseMismatch, "subset over a universe of a different size");
  }
  if (!contains(x)) throw Error(Errc::NotAMember, "subset is not a member of the family");
}

FixedPointFamily build_family(const ApproxSpace& space, FamilyKind kind,
                              const BuildOptions& options) {
  std::vector<Subset> members = options.strategy == BuildStrategy::SubsetScan
                                    ? subset_scan(space, kind, options)
                                    : union_closure(space.universe_size(), generators(space, kind));
  return FixedPointFamily(kind, space, std::move(members));
}

FixedPointFamily build_P(const ApproxSpace& space, const BuildOptions& options) {
  return build_family(space, FamilyKind::NeighborhoodFixedPoints, options);
}

FixedPointFamily build_F(const ApproxSpace& space, const BuildOptions& options) {
  return build_family(space, FamilyKind::CoveringFixedPoints, options);
}

Subset join(const FixedPointFamily& family, const Subset& x, const Subset& y) {
  family.require_member(x);
  family.require_member(y);
  return x | y;
}

Subset meet(const FixedPointFamily& family, const Subset& x, const Subset& y) {
  family.require_member(x);
  family.require_member(y);
  if (family.kind() == FamilyKind::NeighborhoodFixedPoints) return x & y;
  return fl(family.space(), x & y);
}

Subset arbitrary_join(const FixedPointFamily& family, std::span<const Subset> s) {
  Subset out(family.universe_size());
  for (const auto& x : s) {
    family.require_member(x);
    out |= x;
  }
  return out;
}

Subset arbitrary_meet(const FixedPointFamily& family, std::span<const Subset> s) {
  Subset out = Subset::full(family.universe_size());
  for (const auto& x : s) {
    family.require_member(x);
    out &= x;
  }
  if (family.kind() == FamilyKind::NeighborhoodFixedPoints) return out;
  return fl(family.space(), out);
}

std::optional<Subset> order_glb(const FixedPointFamily& family, const Subset& x, const Subset& y) {
  family.require_member(x);
  family.require_member(y);
  std::vector<const Subset*> bounds;
  for (const auto& z : family.members())
    if (z.is_subset_of(x) && z.is_subset_of(y)) bounds.push_back(&z);
  for (const Subset* candidate : bounds) {
    if (std::all_of(bounds.begin(), bounds.end(),
                    [&](const Subset* z) { return z->is_subset_of(*candidate); })) {
      return *candidate;
    }
  }
  return std::nullopt;
}

std::optional<Subset> order_lub(const FixedPointFamily& family, const Subset& x, const Subset& y) {
  family.require_member(x);
  family.require_member(y);
  std::vector<const Subset*> bounds;
  for (const auto& z : family.members())
    if (x.is_subset_of(z) && y.is_subset_of(z)) bounds.push_back(&z);
  for (const Subset* candidate : bounds) {
    if (std::all_of(bounds.begin(), bounds.end(),
                    [&](const Subset* z) { return candidate->is_subset_of(*z); })) {
      return *candidate;
    }
  }
  return std::nullopt;
}

std::vector<Subset> join_irreducibles(const FixedPointFamily& family) {
  std::vector<Subset> out;
  const auto members = family.members();
  std::vector<const Subset*> below;
  for (const auto& a : members) {
    if (a.empty()) continue;
    below.clear();
    for (const auto& b : members)
      if (b.is_proper_subset_of(a)) below.push_back(&b);
    bool reducible = false;
    for (std::size_t i = 0; i < below.size() && !reducible; ++i)
      for (std::size_t j = i + 1; j < below.size() && !reducible; ++j)
        reducible = (*below[i] | *below[j]) == a;
    if (!reducible) out.push_back(a);
  }
  return out;
}

std::optional<Subset> pseudocomplement(const FixedPointFamily& family, const Subset& x) {
  family.require_member(x);
  const Subset zero(family.universe_size());
  Subset reach(family.universe_size());
  std::vector<const Subset*> candidates;
  for (const auto& y : family.members()) {
    if (meet(family, x, y) == zero) {
      candidates.push_back(&y);
      reach |= y;
    }
  }
  // A maximum candidate contains every candidate, so it equals their union.
  for (const Subset* y : candidates)
    if (*y == reach) return *y;
  return std::nullopt;
}

std::optional<Subset> dual_pseudocomplement(const FixedPointFamily& family, const Subset& x) {
  family.require_member(x);
  const Subset one = Subset::full(family.universe_size());
  Subset common = one;
  std::vector<const Subset*> candidates;
  for (const auto& y : family.members()) {
    if (join(family, x, y) == one) {
      candidates.push_back(&y);
      common &= y;
    }
  }
  for (const Subset* y : candidates)
    if (*y == common) return *y;
  return std::nullopt;
}

Subset pseudocomplement_formula_P(const ApproxSpace& space, const Subset& x) {
  if (xl(space, x) != x) throw Error(Errc::NotAMember, "subset is not a member of P");
  return xl(space, complement(x));
}

Subset dual_formula_P(const ApproxSpace& space, const Subset& x) {
  if (xl(space, x) != x) throw Error(Errc::NotAMember, "subset is not a member of P");
  const auto& nbhd = space.neighborhoods();
  Subset out(space.universe_size());
  complement(x).for_each([&](std::size_t z) { out |= nbhd[z]; });
  return out;
}

Subset pseudocomplement_formula_F(const ApproxSpace& space, const Subset& x) {
  require_unary(space);
  if (fl(space, x) != x) throw Error(Errc::NotAMember, "subset is not a member of F");
  return fl(space, complement(x));
}

Subset dual_formula_F(const ApproxSpace& space, const Subset& x) {
  require_unary(space);
  if (fl(space, x) != x) throw Error(Errc::NotAMember, "subset is not a member of F");
  const Subset outside = complement(x);
  Subset out(space.universe_size());
  for (const auto& block : space.reduct().blocks())
    if (block.intersects(outside)) out |= block;
  return out;
}

}  // namespace coverlat
