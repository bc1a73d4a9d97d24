#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace coverlat {

/// A subset of a finite universe {0, ..., n-1}, stored as a bit-vector.
///
/// Universes of up to 64 elements live in a single inline word; larger
/// universes spill into a heap-allocated word vector. Both representations
/// share every operation and compare identically. Binary operations between
/// subsets of differently sized universes throw `Errc::UniverseMismatch`.
///
/// The total order (`operator<=>`) is the canonical bit order: subsets are
/// compared as unsigned integers whose bit i is element i.
class Subset {
 public:
  static constexpr std::size_t kWordBits = 64;

  Subset() = default;
  explicit Subset(std::size_t universe_size);

  static Subset full(std::size_t universe_size);
  static Subset from_word(std::size_t universe_size, std::uint64_t bits);
  static Subset of(std::size_t universe_size, std::initializer_list<std::size_t> elements);

  std::size_t universe_size() const noexcept { return size_; }
  bool is_inline() const noexcept { return size_ <= kWordBits; }

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept;

  bool contains(std::size_t element) const;
  void insert(std::size_t element);
  void erase(std::size_t element);

  bool is_subset_of(const Subset& other) const;
  bool is_proper_subset_of(const Subset& other) const;
  bool intersects(const Subset& other) const;

  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  Subset& operator-=(const Subset& other);
  Subset operator~() const;

  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  friend bool operator==(const Subset& a, const Subset& b) noexcept;
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) noexcept;

  /// The raw word of an inline subset. Only valid when `is_inline()`.
  std::uint64_t word() const noexcept { return word_; }

  /// Visits the members in increasing index order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    const std::size_t nwords = word_count();
    for (std::size_t w = 0; w < nwords; ++w) {
      std::uint64_t bits = word_at(w);
      while (bits != 0) {
        fn(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> elements() const;
  std::size_t hash() const noexcept;

 private:
  std::size_t word_count() const noexcept {
    return is_inline() ? 1 : words_.size();
  }
  std::uint64_t word_at(std::size_t w) const noexcept {
    return is_inline() ? word_ : words_[w];
  }
  std::uint64_t& word_ref(std::size_t w) noexcept {
    return is_inline() ? word_ : words_[w];
  }
  std::uint64_t last_word_mask() const noexcept;
  void check_element(std::size_t element) const;
  void check_same_universe(const Subset& other) const;

  std::size_t size_ = 0;
  std::uint64_t word_ = 0;
  std::vector<std::uint64_t> words_;
};

/// U \ x.
inline Subset complement(const Subset& x) { return ~x; }

/// Orders by cardinality first, then by canonical bit order. Used for
/// Hasse-diagram node numbering.
bool popcount_less(const Subset& a, const Subset& b) noexcept;

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept { return s.hash(); }
};

}  // namespace coverlat
