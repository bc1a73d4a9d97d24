#include "coverlat/covering.hpp"

#include <algorithm>

#include "coverlat/errors.hpp"

namespace coverlat {

Covering Covering::from_labels(std::shared_ptr<const Universe> universe,
                               const std::vector<std::vector<std::string>>& blocks) {
  std::vector<Subset> subsets;
  subsets.reserve(blocks.size());
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    Subset s(universe->size());
    for (const auto& label : blocks[k]) {
      auto index = universe->index_of(label);
      if (!index) {
        throw Error(Errc::UnknownElement,
                    "block " + std::to_string(k + 1) + " references '" + label +
                        "', which is not an element of the universe");
      }
      s.insert(*index);
    }
    subsets.push_back(std::move(s));
  }
  return from_subsets(std::move(universe), std::move(subsets));
}

Covering Covering::from_subsets(std::shared_ptr<const Universe> universe,
                                std::vector<Subset> blocks) {
  const std::size_t n = universe->size();
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (blocks[k].universe_size() != n) {
      throw Error(Errc::UniverseMismatch, "block " + std::to_string(k + 1) +
                                              " is over a universe of a different size");
    }
    if (blocks[k].empty()) {
      throw Error(Errc::EmptyBlock, "block " + std::to_string(k + 1) +
                                        " is empty; a covering consists of nonempty subsets");
    }
  }
  std::vector<Subset> sorted = blocks;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw Error(Errc::DuplicateBlock,
                "a block appears more than once; a covering is a set of subsets");
  }
  Subset covered(n);
  for (const auto& b : blocks) covered |= b;
  if (!covered.is_full()) {
    const auto missing = (~covered).elements();
    throw Error(Errc::NotACover, "the union of the blocks misses element '" +
                                     universe->label(missing.front()) + "'");
  }
  return Covering(std::move(universe), std::move(blocks));
}

Covering Covering::from_subsets(std::size_t universe_size, std::vector<Subset> blocks) {
  return from_subsets(std::make_shared<const Universe>(Universe::of_size(universe_size)),
                      std::move(blocks));
}

const Subset& Covering::block(std::size_t k) const {
  if (k >= blocks_.size()) {
    throw Error(Errc::BadIndex, "block index " + std::to_string(k) + " out of range");
  }
  return blocks_[k];
}

Covering Covering::without(std::size_t k) const {
  block(k);
  std::vector<Subset> rest;
  rest.reserve(blocks_.size() - 1);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (i != k) rest.push_back(blocks_[i]);
  return from_subsets(universe_, std::move(rest));
}

std::vector<Subset> Covering::sorted_blocks() const {
  std::vector<Subset> out = blocks_;
  std::sort(out.begin(), out.end());
  return out;
}

bool Covering::is_partition() const {
  Subset seen(universe_size());
  for (const auto& b : blocks_) {
    if (b.intersects(seen)) return false;
    seen |= b;
  }
  return seen.is_full();
}

bool operator==(const Covering& a, const Covering& b) {
  return *a.universe_ == *b.universe_ && a.sorted_blocks() == b.sorted_blocks();
}

}  // namespace coverlat
