#include "coverlat/verification.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "coverlat/approximations.hpp"
#include "coverlat/descriptions.hpp"
#include "coverlat/errors.hpp"
#include "coverlat/fixed_point_family.hpp"
#include "coverlat/hasse.hpp"
#include "coverlat/reduction.hpp"

namespace coverlat {

// ===========================================================================
// Generators

CoveringEnumerator::CoveringEnumerator(std::size_t n, EnumerationOptions options)
    : n_(n), options_(std::move(options)) {
  const std::size_t cap = std::min(options_.max_n, kHardEnumerationCap);
  if (n_ == 0) throw Error(Errc::SizeLimit, "enumeration needs n >= 1");
  if (n_ > cap) {
    throw Error(Errc::SizeLimit, "covering enumeration for n = " + std::to_string(n_) +
                                     " exceeds the cap of " + std::to_string(cap));
  }
  universe_ = std::make_shared<const Universe>(Universe::of_size(n_));
  const std::uint64_t nonempty = (std::uint64_t{1} << n_) - 1;
  if (options_.subset_order.empty()) {
    for (std::uint64_t w = 1; w <= nonempty; ++w) subsets_.push_back(w);
  } else {
    subsets_ = options_.subset_order;
    auto sorted = subsets_;
    std::sort(sorted.begin(), sorted.end());
    bool permutation = sorted.size() == nonempty;
    for (std::size_t i = 0; permutation && i < sorted.size(); ++i)
      permutation = sorted[i] == i + 1;
    if (!permutation) {
      throw std::invalid_argument("subset_order must permute the nonempty subsets of U");
    }
  }
  end_ = std::uint64_t{1} << subsets_.size();
  family_ = 1;
}

std::optional<Covering> CoveringEnumerator::next() {
  const std::uint64_t full = (std::uint64_t{1} << n_) - 1;
  while (family_ < end_) {
    if (options_.limit && yielded_ >= *options_.limit) return std::nullopt;
    const std::uint64_t family = family_++;
    std::uint64_t covered = 0;
    for (std::uint64_t bits = family; bits != 0; bits &= bits - 1)
      covered |= subsets_[static_cast<std::size_t>(std::countr_zero(bits))];
    if (covered != full) continue;
    std::vector<Subset> blocks;
    for (std::uint64_t bits = family; bits != 0; bits &= bits - 1) {
      blocks.push_back(
          Subset::from_word(n_, subsets_[static_cast<std::size_t>(std::countr_zero(bits))]));
    }
    ++yielded_;
    return Covering::from_subsets(universe_, std::move(blocks));
  }
  return std::nullopt;
}

std::vector<Covering> enumerate_coverings(std::size_t n, EnumerationOptions options) {
  CoveringEnumerator it(n, std::move(options));
  std::vector<Covering> out;
  while (auto c = it.next()) out.push_back(std::move(*c));
  return out;
}

std::vector<Covering> enumerate_partitions(std::size_t n) {
  if (n == 0 || n > 12) throw Error(Errc::SizeLimit, "partition enumeration needs 1 <= n <= 12");
  auto universe = std::make_shared<const Universe>(Universe::of_size(n));
  std::vector<Covering> out;
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<std::size_t> a(n, 0);
  for (;;) {
    const std::size_t groups = *std::max_element(a.begin(), a.end()) + 1;
    std::vector<Subset> blocks(groups, Subset(n));
    for (std::size_t i = 0; i < n; ++i) blocks[a[i]].insert(i);
    out.push_back(Covering::from_subsets(universe, std::move(blocks)));

    std::size_t i = n;
    while (--i > 0) {
      const std::size_t prefix_max = *std::max_element(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
      if (a[i] <= prefix_max) {
        ++a[i];
        std::fill(a.begin() + static_cast<std::ptrdiff_t>(i) + 1, a.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
  return out;
}

Covering random_covering(std::size_t n, double density, std::uint64_t seed) {
  if (!(density > 0.0 && density < 1.0)) {
    throw std::invalid_argument("density must lie strictly between 0 and 1");
  }
  if (n == 0 || n > kRandomCoveringCap) {
    throw Error(Errc::SizeLimit, "random coverings need 1 <= n <= " +
                                     std::to_string(kRandomCoveringCap));
  }
  std::mt19937_64 rng(seed);
  // 53 uniform mantissa bits; avoids implementation-defined distributions.
  auto coin = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < density; };

  std::vector<Subset> blocks;
  Subset covered(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t w = 1; w < total; ++w) {
    if (coin()) {
      blocks.push_back(Subset::from_word(n, w));
      covered |= blocks.back();
    }
  }
  (~covered).for_each([&](std::size_t x) { blocks.push_back(Subset::of(n, {x})); });
  return Covering::from_subsets(n, std::move(blocks));
}

// ===========================================================================
// Reduction confluence

namespace {

bool reducible_among(const std::vector<Subset>& blocks, std::size_t k) {
  Subset inside(blocks[k].universe_size());
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (i != k && blocks[i].is_subset_of(blocks[k])) inside |= blocks[i];
  return inside == blocks[k];
}

void explore_reductions(std::vector<Subset> blocks, std::set<std::vector<Subset>>& visited,
                        std::set<std::vector<Subset>>& results) {
  std::sort(blocks.begin(), blocks.end());
  if (!visited.insert(blocks).second) return;
  bool any = false;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (!reducible_among(blocks, k)) continue;
    any = true;
    auto rest = blocks;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    explore_reductions(std::move(rest), visited, results);
  }
  if (!any) results.insert(blocks);
}

}  // namespace

std::optional<std::vector<std::vector<Subset>>> all_reduction_results(const Covering& covering,
                                                                      std::size_t max_reducible) {
  if (reducible_blocks(covering).size() > max_reducible) return std::nullopt;
  std::set<std::vector<Subset>> visited;
  std::set<std::vector<Subset>> results;
  explore_reductions(covering.sorted_blocks(), visited, results);
  return std::vector<std::vector<Subset>>(results.begin(), results.end());
}

// ===========================================================================
// Theorem suite

namespace {

using Args = std::span<const Subset>;

// Everything a check may need about one space, computed on first use.
class Context {
 public:
  Context(const ApproxSpace& space, const SuiteOptions& options)
      : space(space), covering(space.covering()), n(space.universe_size()), options(options) {
    const std::size_t cap = std::min({options.max_n, kHardScanCap, std::size_t{20}});
    if (n > cap) {
      throw Error(Errc::SizeLimit, "theorem suite over 2^" + std::to_string(n) +
                                       " subsets exceeds the cap of |U| <= " + std::to_string(cap));
    }
    const std::uint64_t total = std::uint64_t{1} << n;
    all.reserve(total);
    fl_.reserve(total);
    xl_.reserve(total);
    for (std::uint64_t w = 0; w < total; ++w) {
      all.push_back(Subset::from_word(n, w));
      fl_.push_back(coverlat::fl(space, all.back()));
      xl_.push_back(coverlat::xl(space, all.back()));
    }
  }

  const ApproxSpace& space;
  const Covering& covering;
  const std::size_t n;
  const SuiteOptions& options;
  std::vector<Subset> all;

  const Subset& fl(const Subset& x) const { return fl_[x.word()]; }
  const Subset& xl(const Subset& x) const { return xl_[x.word()]; }
  Subset empty() const { return Subset(n); }
  Subset full() const { return Subset::full(n); }

  const ApproxSpace& reduct_space() {
    if (!reduct_space_) reduct_space_.emplace(space.reduct());
    return *reduct_space_;
  }

  const FixedPointFamily& family(FamilyKind kind) {
    auto& slot = kind == FamilyKind::NeighborhoodFixedPoints ? p_ : f_;
    if (!slot) slot.emplace(build_family(space, kind));
    return *slot;
  }
  const FixedPointFamily& scanned(FamilyKind kind) {
    auto& slot = kind == FamilyKind::NeighborhoodFixedPoints ? p_scan_ : f_scan_;
    if (!slot) {
      slot.emplace(build_family(space, kind, {BuildStrategy::SubsetScan, options.max_n}));
    }
    return *slot;
  }
  const FixedPointFamily& reduct_family(FamilyKind kind) {
    auto& slot = kind == FamilyKind::NeighborhoodFixedPoints ? p_reduct_ : f_reduct_;
    if (!slot) slot.emplace(build_family(reduct_space(), kind));
    return *slot;
  }
  const ClassificationReport& report(FamilyKind kind) {
    auto& slot = kind == FamilyKind::NeighborhoodFixedPoints ? p_report_ : f_report_;
    if (!slot) slot.emplace(classify(family(kind), options.classify));
    return *slot;
  }
  const std::vector<Subset>& irreducibles(FamilyKind kind) {
    auto& slot = kind == FamilyKind::NeighborhoodFixedPoints ? p_irr_ : f_irr_;
    if (!slot) slot.emplace(join_irreducibles(family(kind)));
    return *slot;
  }

  Subset meet_of(FamilyKind kind, const Subset& x, const Subset& y) const {
    return kind == FamilyKind::NeighborhoodFixedPoints ? (x & y) : fl(x & y);
  }

  // The maximum member contained in s, from ⊆ alone.
  std::optional<Subset> greatest_below(FamilyKind kind, const Subset& s) {
    Subset reach = empty();
    std::vector<const Subset*> below;
    for (const auto& z : family(kind).members())
      if (z.is_subset_of(s)) {
        below.push_back(&z);
        reach |= z;
      }
    for (const Subset* z : below)
      if (*z == reach) return *z;
    return std::nullopt;
  }
  std::optional<Subset> least_above(FamilyKind kind, const Subset& s) {
    Subset common = full();
    std::vector<const Subset*> above;
    for (const auto& z : family(kind).members())
      if (s.is_subset_of(z)) {
        above.push_back(&z);
        common &= z;
      }
    for (const Subset* z : above)
      if (*z == common) return *z;
    return std::nullopt;
  }

  // Definitional pseudocomplements by search over the members.
  std::optional<Subset> star(FamilyKind kind, const Subset& x) {
    Subset reach = empty();
    for (const auto& y : family(kind).members())
      if (meet_of(kind, x, y).empty()) reach |= y;
    if (family(kind).contains(reach) && meet_of(kind, x, reach).empty()) return reach;
    return std::nullopt;
  }
  std::optional<Subset> plus(FamilyKind kind, const Subset& x) {
    Subset common = full();
    for (const auto& y : family(kind).members())
      if ((x | y).is_full()) common &= y;
    if (family(kind).contains(common) && (x | common).is_full()) return common;
    return std::nullopt;
  }

  std::optional<std::size_t> block_index(const Subset& k) const {
    const auto blocks = covering.blocks();
    auto it = std::find(blocks.begin(), blocks.end(), k);
    if (it == blocks.end()) return std::nullopt;
    return static_cast<std::size_t>(it - blocks.begin());
  }

  const ApproxSpace& without(std::size_t k) {
    auto it = without_.find(k);
    if (it == without_.end()) it = without_.emplace(k, ApproxSpace(covering.without(k))).first;
    return it->second;
  }

  bool hypothesis(Hypothesis h) {
    switch (h) {
      case Hypothesis::None: return true;
      case Hypothesis::NeighborhoodPartition: return neighborhoods_form_partition(space);
      case Hypothesis::Unary: return is_unary(space);
      case Hypothesis::ReductPartition: return space.reduct().is_partition();
      case Hypothesis::FewReducibleBlocks:
        return reducible_blocks(covering).size() <= options.confluence_max_reducible;
    }
    return false;
  }

 private:
  std::vector<Subset> fl_;
  std::vector<Subset> xl_;
  std::optional<ApproxSpace> reduct_space_;
  std::optional<FixedPointFamily> p_, f_, p_scan_, f_scan_, p_reduct_, f_reduct_;
  std::optional<ClassificationReport> p_report_, f_report_;
  std::optional<std::vector<Subset>> p_irr_, f_irr_;
  std::map<std::size_t, ApproxSpace> without_;
};

using Witness = std::optional<std::vector<Subset>>;
using SearchFn = Witness (*)(Context&);
using ViolatesFn = bool (*)(Context&, Args);

struct Check {
  std::string_view id;
  std::string_view statement;
  Hypothesis hypothesis;
  SearchFn search;
  ViolatesFn violates;
};

constexpr FamilyKind kP = FamilyKind::NeighborhoodFixedPoints;
constexpr FamilyKind kF = FamilyKind::CoveringFixedPoints;

std::size_t element_of(const Subset& singleton) { return singleton.elements().front(); }

bool in_sorted(const std::vector<Subset>& v, const Subset& x) {
  return std::binary_search(v.begin(), v.end(), x);
}

// --- search helpers --------------------------------------------------------

template <ViolatesFn V>
Witness global(Context& ctx) {
  if (V(ctx, {})) return std::vector<Subset>{};
  return std::nullopt;
}

template <ViolatesFn V>
Witness each_subset(Context& ctx) {
  for (const auto& x : ctx.all)
    if (const Subset args[] = {x}; V(ctx, Args(args))) return std::vector<Subset>{x};
  return std::nullopt;
}

template <ViolatesFn V>
Witness each_nested_pair(Context& ctx) {
  for (const auto& y : ctx.all) {
    // Enumerate the submasks x of y.
    const std::uint64_t top = y.word();
    for (std::uint64_t w = top;; w = (w - 1) & top) {
      const Subset x = Subset::from_word(ctx.n, w);
      if (const Subset args[] = {x, y}; V(ctx, Args(args))) return std::vector<Subset>{x, y};
      if (w == 0) break;
    }
  }
  return std::nullopt;
}

template <ViolatesFn V>
Witness each_element(Context& ctx) {
  for (std::size_t x = 0; x < ctx.n; ++x) {
    const Subset s = Subset::of(ctx.n, {x});
    if (const Subset args[] = {s}; V(ctx, Args(args))) return std::vector<Subset>{s};
  }
  return std::nullopt;
}

template <ViolatesFn V>
Witness each_element_pair(Context& ctx) {
  for (std::size_t x = 0; x < ctx.n; ++x)
    for (std::size_t y = 0; y < ctx.n; ++y) {
      const Subset args[] = {Subset::of(ctx.n, {x}), Subset::of(ctx.n, {y})};
      if (V(ctx, Args(args))) return std::vector<Subset>{args[0], args[1]};
    }
  return std::nullopt;
}

template <ViolatesFn V>
Witness each_block(Context& ctx) {
  for (const auto& k : ctx.covering.blocks())
    if (const Subset args[] = {k}; V(ctx, Args(args))) return std::vector<Subset>{k};
  return std::nullopt;
}

template <ViolatesFn V>
Witness each_block_pair(Context& ctx) {
  for (const auto& k : ctx.covering.blocks())
    for (const auto& k1 : ctx.covering.blocks())
      if (const Subset args[] = {k, k1}; V(ctx, Args(args))) return std::vector<Subset>{k, k1};
  return std::nullopt;
}

template <ViolatesFn V>
Witness each_reducible_block_and_subset(Context& ctx) {
  for (std::size_t k : reducible_blocks(ctx.covering))
    for (const auto& x : ctx.all) {
      const Subset args[] = {ctx.covering.block(k), x};
      if (V(ctx, Args(args))) return std::vector<Subset>{args[0], args[1]};
    }
  return std::nullopt;
}

template <FamilyKind K, ViolatesFn V>
Witness each_member(Context& ctx) {
  for (const auto& x : ctx.family(K).members())
    if (const Subset args[] = {x}; V(ctx, Args(args))) return std::vector<Subset>{x};
  return std::nullopt;
}

template <FamilyKind K, ViolatesFn V>
Witness each_member_pair(Context& ctx) {
  const auto m = ctx.family(K).members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j)
      if (const Subset args[] = {m[i], m[j]}; V(ctx, Args(args))) return std::vector<Subset>{m[i], m[j]};
  return std::nullopt;
}

// --- approximation operator laws -------------------------------------------

bool laws_empty(Context& ctx, Args) {
  return !ctx.fl(ctx.empty()).empty() || !ctx.xl(ctx.empty()).empty();
}
bool laws_universe(Context& ctx, Args) {
  return !ctx.fl(ctx.full()).is_full() || !ctx.xl(ctx.full()).is_full();
}
bool laws_contraction(Context& ctx, Args a) {
  return !ctx.fl(a[0]).is_subset_of(a[0]) || !ctx.xl(a[0]).is_subset_of(a[0]);
}
bool laws_idempotence(Context& ctx, Args a) {
  return ctx.fl(ctx.fl(a[0])) != ctx.fl(a[0]) || ctx.xl(ctx.xl(a[0])) != ctx.xl(a[0]);
}
bool laws_monotone(Context& ctx, Args a) {
  if (!a[0].is_subset_of(a[1])) return false;
  return !ctx.fl(a[0]).is_subset_of(ctx.fl(a[1])) || !ctx.xl(a[0]).is_subset_of(ctx.xl(a[1]));
}
bool laws_blocks(Context& ctx, Args a) { return ctx.fl(a[0]) != a[0] || ctx.xl(a[0]) != a[0]; }

// --- descriptions and reduction ---------------------------------------------

bool unary_iff_intersections(Context& ctx, Args) {
  return is_unary(ctx.space) != intersections_are_block_unions(ctx.space);
}

bool neighborhood_from_md(Context& ctx, Args a) {
  const std::size_t x = element_of(a[0]);
  Subset meet = ctx.full();
  for (const auto& k : ctx.space.minimal_descriptions()[x]) meet &= k;
  return meet != ctx.space.neighborhoods()[x];
}

bool neighborhood_nested(Context& ctx, Args a) {
  const auto& nb = ctx.space.neighborhoods();
  const std::size_t x = element_of(a[0]);
  const std::size_t y = element_of(a[1]);
  return nb[x].contains(y) && !nb[y].is_subset_of(nb[x]);
}

bool removal_covers(Context& ctx, Args a) {
  auto k = ctx.block_index(a[0]);
  if (!k || !is_reducible(ctx.covering, *k)) return false;
  Subset rest = ctx.empty();
  for (std::size_t i = 0; i < ctx.covering.block_count(); ++i)
    if (i != *k) rest |= ctx.covering.block(i);
  return !rest.is_full();
}

bool reducibility_stable(Context& ctx, Args a) {
  auto k = ctx.block_index(a[0]);
  auto k1 = ctx.block_index(a[1]);
  if (!k || !k1 || *k == *k1 || !is_reducible(ctx.covering, *k)) return false;
  const Covering& smaller = ctx.without(*k).covering();
  const std::size_t shifted = *k1 > *k ? *k1 - 1 : *k1;
  return is_reducible(ctx.covering, *k1) != is_reducible(smaller, shifted);
}

bool fl_reducible_invariant(Context& ctx, Args a) {
  auto k = ctx.block_index(a[0]);
  if (!k || !is_reducible(ctx.covering, *k)) return false;
  return fl(ctx.without(*k), a[1]) != ctx.fl(a[1]);
}

bool fl_reduct_invariant(Context& ctx, Args a) { return fl(ctx.reduct_space(), a[0]) != ctx.fl(a[0]); }
bool xl_reduct_invariant(Context& ctx, Args a) { return xl(ctx.reduct_space(), a[0]) != ctx.xl(a[0]); }

bool reduct_irreducible(Context& ctx, Args) {
  const Covering& r = ctx.space.reduct();
  return !reducible_blocks(r).empty() || !(compute_reduct(r) == r);
}

bool reduct_confluence(Context& ctx, Args a) {
  auto results = all_reduction_results(ctx.covering, ctx.options.confluence_max_reducible);
  if (!results) return false;
  const auto canonical = ctx.space.reduct().sorted_blocks();
  std::vector<Subset> claimed(a.begin(), a.end());
  std::sort(claimed.begin(), claimed.end());
  return claimed != canonical && std::find(results->begin(), results->end(), claimed) != results->end();
}

Witness search_confluence(Context& ctx) {
  auto results = all_reduction_results(ctx.covering, ctx.options.confluence_max_reducible);
  if (!results) return std::nullopt;
  const auto canonical = ctx.space.reduct().sorted_blocks();
  for (const auto& r : *results)
    if (r != canonical) return r;
  return std::nullopt;
}

// --- P ----------------------------------------------------------------------

bool p_reduct(Context& ctx, Args a) {
  return ctx.family(kP).contains(a[0]) != ctx.reduct_family(kP).contains(a[0]);
}

bool p_union_characterization(Context& ctx, Args a) {
  Subset reach = ctx.empty();
  a[0].for_each([&](std::size_t x) { reach |= ctx.space.neighborhoods()[x]; });
  return (ctx.xl(a[0]) == a[0]) != (reach == a[0]);
}

template <FamilyKind K>
bool strategies_agree(Context& ctx, Args a) {
  return ctx.family(K).contains(a[0]) != ctx.scanned(K).contains(a[0]);
}

template <FamilyKind K>
bool closed_under_operations(Context& ctx, Args a) {
  const auto& fam = ctx.family(K);
  return !fam.contains(a[0] | a[1]) || !fam.contains(ctx.meet_of(K, a[0], a[1]));
}

template <FamilyKind K>
bool bounds_agree(Context& ctx, Args a) {
  auto glb = ctx.greatest_below(K, a[0] & a[1]);
  auto lub = ctx.least_above(K, a[0] | a[1]);
  return !glb || *glb != ctx.meet_of(K, a[0], a[1]) || !lub || *lub != (a[0] | a[1]);
}

bool p_neighborhood_member(Context& ctx, Args a) {
  return !ctx.family(kP).contains(ctx.space.neighborhoods()[element_of(a[0])]);
}

bool p_neighborhood_irreducible(Context& ctx, Args a) {
  return !in_sorted(ctx.irreducibles(kP), ctx.space.neighborhoods()[element_of(a[0])]);
}

template <FamilyKind K>
bool complete(Context& ctx, Args) {
  return !ctx.report(K).complete;
}

template <FamilyKind K>
bool distributive(Context& ctx, Args a) {
  if (a.size() == 3) return distributivity_fails(ctx.family(K), {a[0], a[1], a[2]});
  return !ctx.report(K).distributive;
}

template <FamilyKind K>
Witness search_distributive(Context& ctx) {
  const auto& r = ctx.report(K);
  if (r.distributive) return std::nullopt;
  const auto& w = *r.distributivity_witness;
  return std::vector<Subset>{w.a, w.b, w.c};
}

template <FamilyKind K>
bool irreducibles_agree(Context& ctx, Args a) {
  const auto& pairwise = ctx.irreducibles(K);
  const auto by_hasse = join_irreducibles_by_hasse(ctx.family(K));
  if (a.empty()) return pairwise != by_hasse;
  return in_sorted(pairwise, a[0]) != in_sorted(by_hasse, a[0]);
}

template <FamilyKind K>
Witness search_irreducibles(Context& ctx) {
  const auto& pairwise = ctx.irreducibles(K);
  const auto by_hasse = join_irreducibles_by_hasse(ctx.family(K));
  std::vector<Subset> diff;
  std::set_symmetric_difference(pairwise.begin(), pairwise.end(), by_hasse.begin(),
                                by_hasse.end(), std::back_inserter(diff));
  if (diff.empty()) return std::nullopt;
  return std::vector<Subset>{diff.front()};
}

bool p_double_p_formulas(Context& ctx, Args a) {
  auto s = ctx.star(kP, a[0]);
  auto d = ctx.plus(kP, a[0]);
  return !s || *s != pseudocomplement_formula_P(ctx.space, a[0]) || !d ||
         *d != dual_formula_P(ctx.space, a[0]);
}

bool f_double_p_formulas(Context& ctx, Args a) {
  auto s = ctx.star(kF, a[0]);
  auto d = ctx.plus(kF, a[0]);
  return !s || *s != pseudocomplement_formula_F(ctx.space, a[0]) || !d ||
         *d != dual_formula_F(ctx.space, a[0]);
}

template <FamilyKind K>
bool complement_formula(Context& ctx, Args a) {
  auto s = ctx.star(K, a[0]);
  auto d = ctx.plus(K, a[0]);
  const Subset c = complement(a[0]);
  return !s || *s != c || !d || *d != c;
}

template <FamilyKind K>
bool boolean_lattice(Context& ctx, Args a) {
  if (a.size() == 1) return has_no_complement(ctx.family(K), a[0]);
  if (a.size() == 3) return distributivity_fails(ctx.family(K), {a[0], a[1], a[2]});
  return !ctx.report(K).boolean;
}

template <FamilyKind K>
Witness search_boolean(Context& ctx) {
  const auto& r = ctx.report(K);
  if (r.boolean) return std::nullopt;
  if (!r.complemented) return std::vector<Subset>{*r.complement_witness};
  const auto& w = *r.distributivity_witness;
  return std::vector<Subset>{w.a, w.b, w.c};
}

// x witnesses a Stone or dual Stone failure by direct computation.
template <FamilyKind K>
bool double_stone(Context& ctx, Args a) {
  if (a.size() == 3) return distributivity_fails(ctx.family(K), {a[0], a[1], a[2]});
  if (a.empty()) return !ctx.report(K).double_stone;
  auto s = ctx.star(K, a[0]);
  auto ss = s ? ctx.star(K, *s) : std::nullopt;
  auto d = ctx.plus(K, a[0]);
  auto dd = d ? ctx.plus(K, *d) : std::nullopt;
  const bool stone_bad = !ss || !(*s | *ss).is_full();
  const bool dual_bad = !dd || !ctx.meet_of(K, *d, *dd).empty();
  return stone_bad || dual_bad;
}

template <FamilyKind K>
Witness search_double_stone(Context& ctx) {
  const auto& r = ctx.report(K);
  if (r.double_stone) return std::nullopt;
  const auto& w = r.stone ? *r.dual_stone_witness : *r.stone_witness;
  if (w.reason == AlgebraFailure::NotDistributive) {
    const auto& t = *r.distributivity_witness;
    return std::vector<Subset>{t.a, t.b, t.c};
  }
  return std::vector<Subset>{w.element};
}

// --- F ----------------------------------------------------------------------

bool f_minus_reducible(Context& ctx, Args a) {
  auto k = ctx.block_index(a[0]);
  if (!k || !is_reducible(ctx.covering, *k)) return false;
  const ApproxSpace& smaller = ctx.without(*k);
  return (ctx.fl(a[1]) == a[1]) != (fl(smaller, a[1]) == a[1]);
}

bool f_reduct(Context& ctx, Args a) {
  return ctx.family(kF).contains(a[0]) != ctx.reduct_family(kF).contains(a[0]);
}

bool f_block_member(Context& ctx, Args a) { return !ctx.family(kF).contains(a[0]); }

bool f_irreducible_blocks(Context& ctx, Args a) {
  auto k = ctx.block_index(a[0]);
  if (!k) return false;
  return is_reducible(ctx.covering, *k) == in_sorted(ctx.irreducibles(kF), a[0]);
}

bool f_meet_is_intersection(Context& ctx, Args a) { return !ctx.family(kF).contains(a[0] & a[1]); }

bool reduct_partition_unary(Context& ctx, Args) { return !is_unary(ctx.space); }

// --- registry ---------------------------------------------------------------

const std::vector<Check>& checks() {
  using H = Hypothesis;
  static const std::vector<Check> table = {
      {"fl-xl-empty", "FL(∅) = ∅ and XL(∅) = ∅", H::None, global<laws_empty>, laws_empty},
      {"fl-xl-universe", "FL(U) = U and XL(U) = U", H::None, global<laws_universe>, laws_universe},
      {"fl-xl-contraction", "FL(X) ⊆ X and XL(X) ⊆ X", H::None, each_subset<laws_contraction>,
       laws_contraction},
      {"fl-xl-idempotent", "FL and XL are idempotent", H::None, each_subset<laws_idempotence>,
       laws_idempotence},
      {"fl-xl-monotone", "FL and XL are monotone", H::None, each_nested_pair<laws_monotone>,
       laws_monotone},
      {"fl-xl-blocks-fixed", "FL(K) = K and XL(K) = K for every block", H::None, each_block<laws_blocks>,
       laws_blocks},
      {"unary-iff-intersections", "unary iff pairwise block intersections are block unions", H::None,
       global<unary_iff_intersections>, unary_iff_intersections},
      {"neighborhood-md", "N(x) is the intersection of Md(x)", H::None,
       each_element<neighborhood_from_md>, neighborhood_from_md},
      {"neighborhood-nested", "y ∈ N(x) implies N(y) ⊆ N(x)", H::None,
       each_element_pair<neighborhood_nested>, neighborhood_nested},
      {"reducible-removal-covers", "removing a reducible block leaves a covering", H::None, each_block<removal_covers>, removal_covers},
      {"reducibility-stable", "reducibility is stable under removal of a reducible block", H::None,
       each_block_pair<reducibility_stable>, reducibility_stable},
      {"fl-reducible-invariant", "FL is unchanged by removing a reducible block", H::None,
       each_reducible_block_and_subset<fl_reducible_invariant>, fl_reducible_invariant},
      {"fl-reduct-invariant", "FL of reduct(C) equals FL of C", H::None, each_subset<fl_reduct_invariant>, fl_reduct_invariant},
      {"xl-reduct-invariant", "XL of reduct(C) equals XL of C", H::None, each_subset<xl_reduct_invariant>, xl_reduct_invariant},
      {"reduct-irreducible", "reduct(C) is irreducible and idempotent", H::None,
       global<reduct_irreducible>, reduct_irreducible},
      {"reduct-confluence", "every removal order yields reduct(C)", H::FewReducibleBlocks,
       search_confluence, reduct_confluence},
      {"P-reduct", "P of C equals P of reduct(C)", H::None, each_subset<p_reduct>, p_reduct},
      {"P-union-of-neighborhoods", "X ∈ P iff X is the union of N(x) over x ∈ X", H::None,
       each_subset<p_union_characterization>, p_union_characterization},
      {"P-strategies", "union closure of neighborhoods equals the subset scan", H::None,
       each_subset<strategies_agree<kP>>, strategies_agree<kP>},
      {"P-lattice", "P is closed under ∪ and ∩", H::None,
       each_member_pair<kP, closed_under_operations<kP>>, closed_under_operations<kP>},
      {"P-bounds", "∪ and ∩ are the least upper and greatest lower bounds in P", H::None,
       each_member_pair<kP, bounds_agree<kP>>, bounds_agree<kP>},
      {"P-neighborhood-member", "every N(x) lies in P", H::None,
       each_element<p_neighborhood_member>, p_neighborhood_member},
      {"P-neighborhood-join-irreducible", "every N(x) is join-irreducible in P", H::None,
       each_element<p_neighborhood_irreducible>, p_neighborhood_irreducible},
      {"P-join-irreducibles-hasse", "pairwise and Hasse join-irreducibles agree in P", H::None,
       search_irreducibles<kP>, irreducibles_agree<kP>},
      {"P-complete", "P is a complete lattice", H::None, global<complete<kP>>, complete<kP>},
      {"P-distributive", "P is distributive", H::None, search_distributive<kP>,
       distributive<kP>},
      {"P-double-p", "X* = XL(X^c) and X+ = ∪{N(x) : x ∈ X^c} in P", H::None,
       each_member<kP, p_double_p_formulas>, p_double_p_formulas},
      {"P-boolean", "P is boolean when neighborhoods partition U", H::NeighborhoodPartition,
       search_boolean<kP>, boolean_lattice<kP>},
      {"P-double-stone", "P is double Stone when neighborhoods partition U",
       H::NeighborhoodPartition, search_double_stone<kP>, double_stone<kP>},
      {"P-complement-formula", "X* = X^c = X+ in P when neighborhoods partition U",
       H::NeighborhoodPartition, each_member<kP, complement_formula<kP>>,
       complement_formula<kP>},
      {"F-reducible-removal", "F is unchanged by removing a reducible block", H::None,
       each_reducible_block_and_subset<f_minus_reducible>, f_minus_reducible},
      {"F-reduct", "F of C equals F of reduct(C)", H::None, each_subset<f_reduct>, f_reduct},
      {"F-strategies", "union closure of blocks equals the subset scan", H::None,
       each_subset<strategies_agree<kF>>, strategies_agree<kF>},
      {"F-lattice", "F is closed under ∪ and FL(∩)", H::None,
       each_member_pair<kF, closed_under_operations<kF>>, closed_under_operations<kF>},
      {"F-bounds", "∪ and FL(∩) are the least upper and greatest lower bounds in F", H::None,
       each_member_pair<kF, bounds_agree<kF>>, bounds_agree<kF>},
      {"F-block-member", "every block lies in F", H::None, each_block<f_block_member>,
       f_block_member},
      {"F-irreducible-blocks", "a block is join-irreducible in F iff it is irreducible in C", H::None,
       each_block<f_irreducible_blocks>, f_irreducible_blocks},
      {"F-join-irreducibles-hasse", "pairwise and Hasse join-irreducibles agree in F", H::None,
       search_irreducibles<kF>, irreducibles_agree<kF>},
      {"F-complete", "F is a complete lattice", H::None, global<complete<kF>>, complete<kF>},
      {"F-distributive", "F is distributive for a unary covering", H::Unary,
       search_distributive<kF>, distributive<kF>},
      {"F-meet-is-intersection", "F is closed under ∩ for a unary covering", H::Unary,
       each_member_pair<kF, f_meet_is_intersection>, f_meet_is_intersection},
      {"F-double-p", "X* = FL(X^c) and X+ = ∪{irreducible K meeting X^c} for a unary covering",
       H::Unary, each_member<kF, f_double_p_formulas>, f_double_p_formulas},
      {"reduct-partition-unary", "a covering whose reduct is a partition is unary",
       H::ReductPartition, global<reduct_partition_unary>, reduct_partition_unary},
      {"F-boolean", "F is boolean when reduct(C) is a partition", H::ReductPartition,
       search_boolean<kF>, boolean_lattice<kF>},
      {"F-double-stone", "F is double Stone when reduct(C) is a partition", H::ReductPartition,
       search_double_stone<kF>, double_stone<kF>},
      {"F-complement-formula", "X* = X^c = X+ in F when reduct(C) is a partition",
       H::ReductPartition, each_member<kF, complement_formula<kF>>, complement_formula<kF>},
  };
  return table;
}

const Check* find_check(std::string_view id) {
  for (const auto& c : checks())
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace

std::string_view to_string(Hypothesis h) noexcept {
  switch (h) {
    case Hypothesis::None: return "none";
    case Hypothesis::NeighborhoodPartition: return "neighborhoods form a partition";
    case Hypothesis::Unary: return "unary covering";
    case Hypothesis::ReductPartition: return "reduct is a partition";
    case Hypothesis::FewReducibleBlocks: return "few reducible blocks";
  }
  return "unknown";
}

std::vector<std::string_view> theorem_ids() {
  std::vector<std::string_view> out;
  for (const auto& c : checks()) out.push_back(c.id);
  return out;
}

std::vector<TheoremReport> run_theorem_suite(const ApproxSpace& space,
                                             const SuiteOptions& options) {
  Context ctx(space, options);
  std::vector<TheoremReport> out;
  out.reserve(checks().size());
  for (const auto& check : checks()) {
    TheoremReport r;
    r.id = std::string(check.id);
    r.statement = std::string(check.statement);
    r.hypothesis = check.hypothesis;
    r.hypothesis_holds = ctx.hypothesis(check.hypothesis);
    if (r.hypothesis_holds) {
      if (auto w = check.search(ctx)) {
        r.holds = false;
        r.witness = std::move(*w);
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool recheck_witness(const ApproxSpace& space, const TheoremReport& report,
                     const SuiteOptions& options) {
  const Check* check = find_check(report.id);
  if (!check) throw Error(Errc::UnknownPredicate, "no theorem check named '" + report.id + "'");
  Context ctx(space, options);
  if (!ctx.hypothesis(check->hypothesis)) return false;
  return check->violates(ctx, report.witness);
}

// ===========================================================================
// Batch verification

namespace {

std::size_t worker_count(std::size_t requested, std::size_t jobs) {
  std::size_t threads = requested;
  if (threads == 0) {
    if (const char* env = std::getenv("THREADS")) threads = std::strtoul(env, nullptr, 10);
  }
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  return std::max<std::size_t>(1, std::min(threads, jobs));
}

}  // namespace

VerificationSummary verify_coverings(std::span<const Covering> coverings,
                                     const SuiteOptions& options, std::size_t threads) {
  const auto ids = theorem_ids();
  const std::size_t workers = worker_count(threads, coverings.size());

  struct Partial {
    std::vector<TheoremTally> tallies;
    std::vector<SuiteFailure> failures;
    std::exception_ptr error;
  };
  std::vector<Partial> partials(workers);
  for (auto& p : partials) {
    for (auto id : ids) p.tallies.push_back({std::string(id), 0, 0});
  }

  auto work = [&](std::size_t w) {
    Partial& mine = partials[w];
    try {
      for (std::size_t i = w; i < coverings.size(); i += workers) {
        const auto reports = run_theorem_suite(ApproxSpace(coverings[i]), options);
        for (std::size_t t = 0; t < reports.size(); ++t) {
          if (!reports[t].hypothesis_holds) continue;
          ++mine.tallies[t].applicable;
          if (!reports[t].holds) {
            ++mine.tallies[t].failures;
            mine.failures.push_back({i, coverings[i], reports[t]});
          }
        }
      }
    } catch (...) {
      mine.error = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  VerificationSummary summary;
  summary.coverings = coverings.size();
  for (auto id : ids) summary.tallies.push_back({std::string(id), 0, 0});
  for (auto& p : partials) {
    if (p.error) std::rethrow_exception(p.error);
    for (std::size_t t = 0; t < ids.size(); ++t) {
      summary.tallies[t].applicable += p.tallies[t].applicable;
      summary.tallies[t].failures += p.tallies[t].failures;
    }
    for (auto& f : p.failures) summary.failures.push_back(std::move(f));
  }
  std::stable_sort(summary.failures.begin(), summary.failures.end(),
                   [](const SuiteFailure& a, const SuiteFailure& b) {
                     return a.covering_index < b.covering_index;
                   });
  return summary;
}

VerificationSummary verify_exhaustive(std::size_t n, const SuiteOptions& options,
                                      const EnumerationOptions& enumeration, std::size_t threads) {
  const auto coverings = enumerate_coverings(n, enumeration);
  return verify_coverings(coverings, options, threads);
}

VerificationSummary verify_random(std::size_t n, std::size_t trials, double density,
                                  std::uint64_t seed, const SuiteOptions& options,
                                  std::size_t threads) {
  std::vector<Covering> coverings;
  coverings.reserve(trials);
  for (std::size_t i = 0; i < trials; ++i) coverings.push_back(random_covering(n, density, seed + i));
  return verify_coverings(coverings, options, threads);
}

// ===========================================================================
// Counterexample search

namespace {

enum class Property {
  Bounded,
  Complete,
  Distributive,
  Complemented,
  Boolean,
  Pseudocomplemented,
  DualPseudocomplemented,
  Stone,
  DualStone,
  DoublePAlgebra,
  DoubleStone,
};

const std::vector<std::pair<std::string_view, Property>>& properties() {
  static const std::vector<std::pair<std::string_view, Property>> table = {
      {"bounded", Property::Bounded},
      {"complete", Property::Complete},
      {"distributive", Property::Distributive},
      {"complemented", Property::Complemented},
      {"boolean", Property::Boolean},
      {"pseudocomplemented", Property::Pseudocomplemented},
      {"dual-pseudocomplemented", Property::DualPseudocomplemented},
      {"stone", Property::Stone},
      {"dual-stone", Property::DualStone},
      {"double-p-algebra", Property::DoublePAlgebra},
      {"double-stone", Property::DoubleStone},
  };
  return table;
}

constexpr std::string_view kSpacePredicates[] = {"unary", "irreducible", "neighborhood-partition",
                                                 "reduct-partition"};

std::vector<Subset> triple(const DistributivityWitness& w) { return {w.a, w.b, w.c}; }

std::vector<Subset> algebra_witness(const ClassificationReport& r, const AlgebraWitness& w) {
  if (w.reason == AlgebraFailure::NotDistributive) return triple(*r.distributivity_witness);
  return {w.element};
}

bool property_holds(Property p, const ClassificationReport& r, std::vector<Subset>& witness) {
  switch (p) {
    case Property::Bounded: return r.bounded;
    case Property::Complete: return r.complete;
    case Property::Distributive:
      if (!r.distributive) witness = triple(*r.distributivity_witness);
      return r.distributive;
    case Property::Complemented:
      if (!r.complemented) witness = {*r.complement_witness};
      return r.complemented;
    case Property::Boolean:
      if (!r.complemented) witness = {*r.complement_witness};
      else if (!r.distributive) witness = triple(*r.distributivity_witness);
      return r.boolean;
    case Property::Pseudocomplemented:
      if (!r.pseudocomplemented) witness = {*r.pseudocomplement_witness};
      return r.pseudocomplemented;
    case Property::DualPseudocomplemented:
      if (!r.dual_pseudocomplemented) witness = {*r.dual_pseudocomplement_witness};
      return r.dual_pseudocomplemented;
    case Property::Stone:
      if (!r.stone) witness = algebra_witness(r, *r.stone_witness);
      return r.stone;
    case Property::DualStone:
      if (!r.dual_stone) witness = algebra_witness(r, *r.dual_stone_witness);
      return r.dual_stone;
    case Property::DoublePAlgebra:
      if (!r.pseudocomplemented) witness = {*r.pseudocomplement_witness};
      else if (!r.dual_pseudocomplemented) witness = {*r.dual_pseudocomplement_witness};
      return r.double_p_algebra;
    case Property::DoubleStone:
      if (!r.stone) witness = algebra_witness(r, *r.stone_witness);
      else if (!r.dual_stone) witness = algebra_witness(r, *r.dual_stone_witness);
      return r.double_stone;
  }
  return true;
}

std::optional<std::vector<Subset>> overlapping_pair(const std::vector<Subset>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (sets[i] != sets[j] && sets[i].intersects(sets[j])) return std::vector{sets[i], sets[j]};
  return std::nullopt;
}

bool space_predicate_holds(std::string_view id, const ApproxSpace& space,
                           std::vector<Subset>& witness) {
  const std::size_t n = space.universe_size();
  if (id == "unary") {
    const auto& md = space.minimal_descriptions();
    for (std::size_t x = 0; x < n; ++x) {
      if (md[x].size() != 1) {
        witness = {Subset::of(n, {x})};
        return false;
      }
    }
    return true;
  }
  if (id == "irreducible") {
    auto r = reducible_blocks(space.covering());
    if (r.empty()) return true;
    witness = {space.covering().block(r.front())};
    return false;
  }
  const auto sets = id == "neighborhood-partition" ? space.neighborhoods()
                                                   : space.reduct().sorted_blocks();
  if (auto pair = overlapping_pair(sets)) {
    witness = std::move(*pair);
    return false;
  }
  return true;
}

}  // namespace

std::vector<std::string_view> predicate_ids() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const char* family : {"P-", "F-"})
      for (const auto& [name, p] : properties()) v.push_back(family + std::string(name));
    for (auto s : kSpacePredicates) v.emplace_back(s);
    return v;
  }();
  return {names.begin(), names.end()};
}

bool predicate_holds(std::string_view predicate, const ApproxSpace& space,
                     std::vector<Subset>* witness) {
  std::vector<Subset> scratch;
  std::vector<Subset>& w = witness ? *witness : scratch;
  w.clear();
  for (auto s : kSpacePredicates)
    if (predicate == s) return space_predicate_holds(predicate, space, w);
  if (predicate.size() > 2 && (predicate.starts_with("P-") || predicate.starts_with("F-"))) {
    const FamilyKind kind = predicate[0] == 'P' ? FamilyKind::NeighborhoodFixedPoints
                                                : FamilyKind::CoveringFixedPoints;
    const auto name = predicate.substr(2);
    for (const auto& [pname, p] : properties()) {
      if (pname != name) continue;
      const auto report = classify(build_family(space, kind));
      return property_holds(p, report, w);
    }
  }
  throw Error(Errc::UnknownPredicate, "no predicate named '" + std::string(predicate) + "'");
}

std::optional<Counterexample> find_counterexample(std::string_view predicate,
                                                  const GeneratorConfig& config) {
  // Reject unknown names before generating anything.
  const auto ids = predicate_ids();
  if (std::find(ids.begin(), ids.end(), predicate) == ids.end()) {
    throw Error(Errc::UnknownPredicate, "no predicate named '" + std::string(predicate) + "'");
  }
  auto test = [&](std::size_t index, const Covering& c) -> std::optional<Counterexample> {
    std::vector<Subset> witness;
    if (predicate_holds(predicate, ApproxSpace(c), &witness)) return std::nullopt;
    return Counterexample{index, c, std::move(witness)};
  };

  switch (config.kind) {
    case GeneratorConfig::Kind::Exhaustive: {
      EnumerationOptions opts;
      opts.max_n = config.max_n;
      CoveringEnumerator it(config.n, opts);
      std::size_t index = 0;
      while (auto c = it.next()) {
        if (auto hit = test(index++, *c)) return hit;
      }
      return std::nullopt;
    }
    case GeneratorConfig::Kind::Random:
      for (std::size_t i = 0; i < config.trials; ++i) {
        if (auto hit = test(i, random_covering(config.n, config.density, config.seed + i)))
          return hit;
      }
      return std::nullopt;
    case GeneratorConfig::Kind::PartitionsOnly: {
      const auto partitions = enumerate_partitions(config.n);
      for (std::size_t i = 0; i < partitions.size(); ++i) {
        if (auto hit = test(i, partitions[i])) return hit;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace coverlat
