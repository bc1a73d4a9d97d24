#include "coverlat/classification.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "coverlat/approximations.hpp"
#include "coverlat/errors.hpp"

namespace coverlat {

namespace {

// Lattice operations on raw 64-bit words, for universes of at most 64
// elements. F's meet goes through a dense fl table when 2^n is small.
class WordOps {
 public:
  using Value = std::uint64_t;

  explicit WordOps(const FixedPointFamily& family)
      : is_p_(family.kind() == FamilyKind::NeighborhoodFixedPoints),
        n_(family.universe_size()) {
    for (const auto& m : family.members()) members_.push_back(m.word());
    if (!is_p_) {
      for (const auto& b : family.space().covering().blocks()) blocks_.push_back(b.word());
      if (n_ <= kTableBits) build_table();
    }
    if (n_ <= kDenseMembershipBits) {
      dense_.assign(std::size_t{1} << n_, 0);
      for (auto w : members_) dense_[w] = 1;
    } else {
      sparse_.insert(members_.begin(), members_.end());
    }
  }

  const std::vector<Value>& members() const { return members_; }
  Value join(Value a, Value b) const { return a | b; }
  Value meet(Value a, Value b) const { return is_p_ ? (a & b) : lower(a & b); }
  Value intersect(Value a, Value b) const { return a & b; }
  Value unite(Value a, Value b) const { return a | b; }
  bool leq(Value a, Value b) const { return (a & ~b) == 0; }
  Value full() const { return n_ == 64 ? ~Value{0} : ((Value{1} << n_) - 1); }
  Value empty() const { return 0; }
  Value arbitrary_meet_of(Value intersection) const {
    return is_p_ ? intersection : lower(intersection);
  }
  bool is_member(Value w) const {
    return dense_.empty() ? sparse_.count(w) != 0 : dense_[w] != 0;
  }
  Subset to_subset(Value w) const { return Subset::from_word(n_, w); }

 private:
  static constexpr std::size_t kTableBits = 16;
  static constexpr std::size_t kDenseMembershipBits = 20;

  Value lower(Value x) const {
    if (!table_.empty()) return table_[x];
    Value out = 0;
    for (auto b : blocks_)
      if ((b & ~x) == 0) out |= b;
    return out;
  }

  // table_[x] = union of blocks contained in x, via a subset-sum sweep.
  void build_table() {
    table_.assign(std::size_t{1} << n_, 0);
    for (auto b : blocks_) table_[b] |= b;
    for (std::size_t bit = 0; bit < n_; ++bit) {
      const Value mask = Value{1} << bit;
      for (Value x = 0; x < table_.size(); ++x)
        if (x & mask) table_[x] |= table_[x ^ mask];
    }
  }

  bool is_p_;
  std::size_t n_;
  std::vector<Value> members_;
  std::vector<Value> blocks_;
  std::vector<Value> table_;
  std::vector<char> dense_;
  std::unordered_set<Value> sparse_;
};

// Fallback for universes wider than one word.
class SubsetOps {
 public:
  using Value = Subset;

  explicit SubsetOps(const FixedPointFamily& family)
      : family_(family), members_(family.members().begin(), family.members().end()) {}

  const std::vector<Value>& members() const { return members_; }
  Value join(const Value& a, const Value& b) const { return a | b; }
  Value meet(const Value& a, const Value& b) const {
    return family_.kind() == FamilyKind::NeighborhoodFixedPoints ? (a & b)
                                                                 : fl(family_.space(), a & b);
  }
  Value intersect(const Value& a, const Value& b) const { return a & b; }
  Value unite(const Value& a, const Value& b) const { return a | b; }
  bool leq(const Value& a, const Value& b) const { return a.is_subset_of(b); }
  Value full() const { return Subset::full(family_.universe_size()); }
  Value empty() const { return Subset(family_.universe_size()); }
  Value arbitrary_meet_of(const Value& intersection) const {
    return family_.kind() == FamilyKind::NeighborhoodFixedPoints ? intersection
                                                                 : family_.lower(intersection);
  }
  bool is_member(const Value& x) const { return family_.contains(x); }
  Subset to_subset(const Value& x) const { return x; }

 private:
  const FixedPointFamily& family_;
  std::vector<Value> members_;
};

template <class Ops>
class Classifier {
 public:
  using Value = typename Ops::Value;

  Classifier(const Ops& ops, const ClassifyOptions& options)
      : ops_(ops), options_(options), m_(ops.members()) {}

  ClassificationReport run(FamilyKind kind) {
    ClassificationReport r;
    r.kind = kind;
    r.member_count = m_.size();
    if (m_.empty()) return r;

    bottom_ = m_.front();
    top_ = m_.front();
    for (const auto& x : m_) {
      bottom_ = ops_.intersect(bottom_, x);
      top_ = ops_.unite(top_, x);
    }
    r.bounded = ops_.is_member(bottom_) && ops_.is_member(top_);
    r.complete = m_.size() <= options_.enumerate_completeness_up_to ? complete_enumerated()
                                                                    : complete_pairwise();
    check_distributive(r);
    if (!r.bounded) return r;
    check_complemented(r);
    r.boolean = r.complemented && r.distributive;
    compute_pseudocomplements(r);
    check_stone(r);
    r.double_p_algebra = r.pseudocomplemented && r.dual_pseudocomplemented;
    r.double_stone = r.stone && r.dual_stone;
    return r;
  }

 private:
  bool complete_enumerated() const { return dfs(0, ops_.empty(), ops_.full()); }

  // Every sub-family of m_[i..] extended onto the running join and the
  // running raw intersection.
  bool dfs(std::size_t i, const Value& joined, const Value& intersected) const {
    if (i == m_.size()) {
      return ops_.is_member(joined) && ops_.is_member(ops_.arbitrary_meet_of(intersected));
    }
    return dfs(i + 1, joined, intersected) &&
           dfs(i + 1, ops_.unite(joined, m_[i]), ops_.intersect(intersected, m_[i]));
  }

  bool complete_pairwise() const {
    if (!ops_.is_member(ops_.empty()) || !ops_.is_member(ops_.arbitrary_meet_of(ops_.full())))
      return false;
    for (std::size_t i = 0; i < m_.size(); ++i)
      for (std::size_t j = i + 1; j < m_.size(); ++j)
        if (!ops_.is_member(ops_.join(m_[i], m_[j])) || !ops_.is_member(ops_.meet(m_[i], m_[j])))
          return false;
    return true;
  }

  // Only incomparable b < c with a not below b or c can fail, and a failing
  // (a, c, b) implies a failing (a, b, c); skipping the rest keeps the
  // first hit lexicographically least.
  void check_distributive(ClassificationReport& r) const {
    const std::size_t n = m_.size();
    for (std::size_t ia = 0; ia < n; ++ia) {
      const Value& a = m_[ia];
      for (std::size_t ib = 0; ib < n; ++ib) {
        const Value& b = m_[ib];
        if (ops_.leq(a, b)) continue;
        const Value ab = ops_.meet(a, b);
        for (std::size_t ic = ib + 1; ic < n; ++ic) {
          const Value& c = m_[ic];
          if (ops_.leq(b, c) || ops_.leq(c, b) || ops_.leq(a, c)) continue;
          const Value lhs = ops_.meet(a, ops_.join(b, c));
          const Value rhs = ops_.join(ab, ops_.meet(a, c));
          if (lhs != rhs) {
            r.distributive = false;
            r.distributivity_witness =
                DistributivityWitness{ops_.to_subset(a), ops_.to_subset(b), ops_.to_subset(c)};
            return;
          }
        }
      }
    }
    r.distributive = true;
  }

  void check_complemented(ClassificationReport& r) const {
    for (const auto& a : m_) {
      const bool has = std::any_of(m_.begin(), m_.end(), [&](const Value& b) {
        return ops_.join(a, b) == top_ && ops_.meet(a, b) == bottom_;
      });
      if (!has) {
        r.complemented = false;
        r.complement_witness = ops_.to_subset(a);
        return;
      }
    }
    r.complemented = true;
  }

  std::optional<Value> pseudo(const Value& a) const {
    Value reach = bottom_;
    for (const auto& y : m_)
      if (ops_.meet(a, y) == bottom_) reach = ops_.unite(reach, y);
    if (ops_.is_member(reach) && ops_.meet(a, reach) == bottom_) return reach;
    return std::nullopt;
  }

  std::optional<Value> dual_pseudo(const Value& a) const {
    Value common = top_;
    for (const auto& y : m_)
      if (ops_.join(a, y) == top_) common = ops_.intersect(common, y);
    if (ops_.is_member(common) && ops_.join(a, common) == top_) return common;
    return std::nullopt;
  }

  std::size_t index_of(const Value& x) const {
    return static_cast<std::size_t>(std::lower_bound(m_.begin(), m_.end(), x) - m_.begin());
  }

  void compute_pseudocomplements(ClassificationReport& r) {
    star_.resize(m_.size());
    plus_.resize(m_.size());
    r.pseudocomplemented = true;
    r.dual_pseudocomplemented = true;
    for (std::size_t i = 0; i < m_.size(); ++i) {
      star_[i] = pseudo(m_[i]);
      plus_[i] = dual_pseudo(m_[i]);
      if (!star_[i] && r.pseudocomplemented) {
        r.pseudocomplemented = false;
        r.pseudocomplement_witness = ops_.to_subset(m_[i]);
      }
      if (!plus_[i] && r.dual_pseudocomplemented) {
        r.dual_pseudocomplemented = false;
        r.dual_pseudocomplement_witness = ops_.to_subset(m_[i]);
      }
    }
  }

  void check_stone(ClassificationReport& r) const {
    std::vector<bool> stone_bad(m_.size(), false);
    std::vector<bool> dual_bad(m_.size(), false);
    if (r.pseudocomplemented) {
      for (std::size_t i = 0; i < m_.size(); ++i) {
        const Value& s = *star_[i];
        const Value& ss = *star_[index_of(s)];
        stone_bad[i] = ops_.join(s, ss) != top_;
      }
    }
    if (r.dual_pseudocomplemented) {
      for (std::size_t i = 0; i < m_.size(); ++i) {
        const Value& d = *plus_[i];
        const Value& dd = *plus_[index_of(d)];
        dual_bad[i] = ops_.meet(d, dd) != bottom_;
      }
    }
    r.stone_witness = pick(r.pseudocomplemented, r.pseudocomplement_witness, stone_bad, dual_bad, r);
    r.dual_stone_witness =
        pick(r.dual_pseudocomplemented, r.dual_pseudocomplement_witness, dual_bad, stone_bad, r);
    r.stone = !r.stone_witness.has_value();
    r.dual_stone = !r.dual_stone_witness.has_value();
  }

  std::optional<AlgebraWitness> pick(bool has_operation, const std::optional<Subset>& missing,
                                     const std::vector<bool>& bad,
                                     const std::vector<bool>& other_bad,
                                     const ClassificationReport& r) const {
    if (!has_operation) return AlgebraWitness{AlgebraFailure::NoPseudocomplement, *missing};
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < m_.size(); ++i) {
      if (!bad[i]) continue;
      if (other_bad[i]) return AlgebraWitness{AlgebraFailure::IdentityFails, ops_.to_subset(m_[i])};
      if (!first) first = i;
    }
    if (first) return AlgebraWitness{AlgebraFailure::IdentityFails, ops_.to_subset(m_[*first])};
    if (!r.distributive) {
      return AlgebraWitness{AlgebraFailure::NotDistributive, r.distributivity_witness->a};
    }
    return std::nullopt;
  }

  const Ops& ops_;
  const ClassifyOptions& options_;
  const std::vector<Value>& m_;
  Value bottom_{};
  Value top_{};
  std::vector<std::optional<Value>> star_;
  std::vector<std::optional<Value>> plus_;
};

}  // namespace

ClassificationReport classify(const FixedPointFamily& family, const ClassifyOptions& options) {
  if (family.universe_size() <= Subset::kWordBits) {
    const WordOps ops(family);
    return Classifier<WordOps>(ops, options).run(family.kind());
  }
  const SubsetOps ops(family);
  return Classifier<SubsetOps>(ops, options).run(family.kind());
}

bool complete_by_enumeration(const FixedPointFamily& family) {
  const auto members = family.members();
  const std::size_t m = members.size();
  if (m > 24) throw Error(Errc::SizeLimit, "sub-family enumeration over more than 24 members");
  std::vector<Subset> chosen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    chosen.clear();
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1U) chosen.push_back(members[i]);
    if (!family.contains(arbitrary_join(family, chosen)) ||
        !family.contains(arbitrary_meet(family, chosen)))
      return false;
  }
  return true;
}

bool distributivity_fails(const FixedPointFamily& family, const DistributivityWitness& w) {
  const Subset lhs = meet(family, w.a, join(family, w.b, w.c));
  const Subset rhs = join(family, meet(family, w.a, w.b), meet(family, w.a, w.c));
  return lhs != rhs;
}

bool has_no_complement(const FixedPointFamily& family, const Subset& x) {
  const Subset zero(family.universe_size());
  const Subset one = Subset::full(family.universe_size());
  const auto members = family.members();
  return std::none_of(members.begin(), members.end(), [&](const Subset& y) {
    return join(family, x, y) == one && meet(family, x, y) == zero;
  });
}

bool stone_fails(const FixedPointFamily& family, const AlgebraWitness& w,
                 const ClassificationReport& report) {
  switch (w.reason) {
    case AlgebraFailure::NoPseudocomplement: {
      auto s = pseudocomplement(family, w.element);
      return !s || !pseudocomplement(family, *s);
    }
    case AlgebraFailure::IdentityFails: {
      auto s = pseudocomplement(family, w.element);
      if (!s) return false;
      auto ss = pseudocomplement(family, *s);
      return ss && join(family, *s, *ss) != Subset::full(family.universe_size());
    }
    case AlgebraFailure::NotDistributive:
      return report.distributivity_witness &&
             distributivity_fails(family, *report.distributivity_witness);
  }
  return false;
}

bool dual_stone_fails(const FixedPointFamily& family, const AlgebraWitness& w,
                      const ClassificationReport& report) {
  switch (w.reason) {
    case AlgebraFailure::NoPseudocomplement: {
      auto d = dual_pseudocomplement(family, w.element);
      return !d || !dual_pseudocomplement(family, *d);
    }
    case AlgebraFailure::IdentityFails: {
      auto d = dual_pseudocomplement(family, w.element);
      if (!d) return false;
      auto dd = dual_pseudocomplement(family, *d);
      return dd && !meet(family, *d, *dd).empty();
    }
    case AlgebraFailure::NotDistributive:
      return report.distributivity_witness &&
             distributivity_fails(family, *report.distributivity_witness);
  }
  return false;
}

bool report_is_consistent(const FixedPointFamily& family, const ClassificationReport& r) {
  if (r.boolean != (r.complemented && r.distributive)) return false;
  if (r.double_p_algebra != (r.pseudocomplemented && r.dual_pseudocomplemented)) return false;
  if (r.double_stone != (r.stone && r.dual_stone)) return false;
  if (r.stone && !(r.distributive && r.pseudocomplemented)) return false;
  if (r.dual_stone && !(r.distributive && r.dual_pseudocomplemented)) return false;

  if (!r.distributive &&
      !(r.distributivity_witness && distributivity_fails(family, *r.distributivity_witness)))
    return false;
  if (!r.complemented &&
      !(r.complement_witness && has_no_complement(family, *r.complement_witness)))
    return false;
  if (!r.pseudocomplemented &&
      !(r.pseudocomplement_witness && !pseudocomplement(family, *r.pseudocomplement_witness)))
    return false;
  if (!r.dual_pseudocomplemented &&
      !(r.dual_pseudocomplement_witness &&
        !dual_pseudocomplement(family, *r.dual_pseudocomplement_witness)))
    return false;
  if (!r.stone && !(r.stone_witness && stone_fails(family, *r.stone_witness, r))) return false;
  if (!r.dual_stone &&
      !(r.dual_stone_witness && dual_stone_fails(family, *r.dual_stone_witness, r)))
    return false;
  return true;
}

}  // namespace coverlat
