#include "coverlat/subset.hpp"

#include <string>

#include "coverlat/errors.hpp"

namespace coverlat {

namespace {

constexpr std::size_t words_for(std::size_t n) {
  return (n + Subset::kWordBits - 1) / Subset::kWordBits;
}

}  // namespace

Subset::Subset(std::size_t universe_size) : size_(universe_size) {
  if (!is_inline()) words_.assign(words_for(size_), 0);
}

Subset Subset::full(std::size_t universe_size) {
  Subset s(universe_size);
  const std::size_t nwords = s.word_count();
  for (std::size_t w = 0; w < nwords; ++w) s.word_ref(w) = ~std::uint64_t{0};
  s.word_ref(nwords - 1) &= s.last_word_mask();
  if (universe_size == 0) s.word_ = 0;
  return s;
}

Subset Subset::from_word(std::size_t universe_size, std::uint64_t bits) {
  Subset s(universe_size);
  if (universe_size > kWordBits) {
    s.words_[0] = bits;
  } else {
    if ((bits & ~s.last_word_mask()) != 0 || (universe_size == 0 && bits != 0)) {
      throw Error(Errc::UnknownElement, "bit pattern exceeds universe of size " +
                                            std::to_string(universe_size));
    }
    s.word_ = bits;
  }
  return s;
}

Subset Subset::of(std::size_t universe_size, std::initializer_list<std::size_t> elements) {
  Subset s(universe_size);
  for (std::size_t e : elements) s.insert(e);
  return s;
}

std::uint64_t Subset::last_word_mask() const noexcept {
  const std::size_t rem = size_ % kWordBits;
  return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

std::size_t Subset::count() const noexcept {
  std::size_t total = 0;
  for (std::size_t w = 0; w < word_count(); ++w) total += std::popcount(word_at(w));
  return total;
}

bool Subset::empty() const noexcept {
  for (std::size_t w = 0; w < word_count(); ++w)
    if (word_at(w) != 0) return false;
  return true;
}

bool Subset::is_full() const noexcept { return count() == size_; }

void Subset::check_element(std::size_t element) const {
  if (element >= size_) {
    throw Error(Errc::UnknownElement, "element index " + std::to_string(element) +
                                          " outside universe of size " + std::to_string(size_));
  }
}

void Subset::check_same_universe(const Subset& other) const {
  if (size_ != other.size_) {
    throw Error(Errc::UniverseMismatch, "subsets of universes of size " + std::to_string(size_) +
                                            " and " + std::to_string(other.size_));
  }
}

bool Subset::contains(std::size_t element) const {
  check_element(element);
  return (word_at(element / kWordBits) >> (element % kWordBits)) & 1U;
}

void Subset::insert(std::size_t element) {
  check_element(element);
  word_ref(element / kWordBits) |= std::uint64_t{1} << (element % kWordBits);
}

void Subset::erase(std::size_t element) {
  check_element(element);
  word_ref(element / kWordBits) &= ~(std::uint64_t{1} << (element % kWordBits));
}

bool Subset::is_subset_of(const Subset& other) const {
  check_same_universe(other);
  if (is_inline()) return (word_ & ~other.word_) == 0;
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  return true;
}

bool Subset::is_proper_subset_of(const Subset& other) const {
  return is_subset_of(other) && *this != other;
}

bool Subset::intersects(const Subset& other) const {
  check_same_universe(other);
  if (is_inline()) return (word_ & other.word_) != 0;
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & other.words_[w]) != 0) return true;
  return false;
}

Subset& Subset::operator|=(const Subset& other) {
  check_same_universe(other);
  if (is_inline()) {
    word_ |= other.word_;
  } else {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  }
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  check_same_universe(other);
  if (is_inline()) {
    word_ &= other.word_;
  } else {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  }
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  check_same_universe(other);
  if (is_inline()) {
    word_ &= ~other.word_;
  } else {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  }
  return *this;
}

Subset Subset::operator~() const {
  Subset out(*this);
  if (size_ == 0) return out;
  const std::size_t nwords = out.word_count();
  for (std::size_t w = 0; w < nwords; ++w) out.word_ref(w) = ~out.word_ref(w);
  out.word_ref(nwords - 1) &= last_word_mask();
  return out;
}

bool operator==(const Subset& a, const Subset& b) noexcept {
  return a.size_ == b.size_ && a.word_ == b.word_ && a.words_ == b.words_;
}

std::strong_ordering operator<=>(const Subset& a, const Subset& b) noexcept {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  if (a.is_inline()) return a.word_ <=> b.word_;
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::vector<std::size_t> Subset::elements() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t e) { out.push_back(e); });
  return out;
}

std::size_t Subset::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ size_;
  for (std::size_t w = 0; w < word_count(); ++w) {
    h ^= word_at(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool popcount_less(const Subset& a, const Subset& b) noexcept {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  return a < b;
}

}  // namespace coverlat
