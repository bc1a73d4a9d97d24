#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "coverlat/subset.hpp"
#include "coverlat/universe.hpp"

namespace coverlat {

/// A family of distinct nonempty subsets whose union is the universe.
///
/// Blocks keep the order they were given in; equality is set equality of
/// the block families and ignores that order.
class Covering {
 public:
  /// Validates and builds a covering. Throws, in this order of precedence,
  /// `UnknownElement`, `EmptyBlock`, `DuplicateBlock`, `NotACover`.
  static Covering from_labels(std::shared_ptr<const Universe> universe,
                              const std::vector<std::vector<std::string>>& blocks);
  static Covering from_subsets(std::shared_ptr<const Universe> universe,
                               std::vector<Subset> blocks);
  /// Convenience for the default "1".."n" universe.
  static Covering from_subsets(std::size_t universe_size, std::vector<Subset> blocks);

  const Universe& universe() const noexcept { return *universe_; }
  const std::shared_ptr<const Universe>& universe_ptr() const noexcept { return universe_; }
  std::size_t universe_size() const noexcept { return universe_->size(); }

  std::size_t block_count() const noexcept { return blocks_.size(); }
  std::span<const Subset> blocks() const noexcept { return blocks_; }
  const Subset& block(std::size_t k) const;

  /// C - {K_k}. Throws `NotACover` when the remaining blocks miss an element.
  Covering without(std::size_t k) const;

  /// Blocks sorted by canonical bit order.
  std::vector<Subset> sorted_blocks() const;

  bool is_partition() const;

  friend bool operator==(const Covering& a, const Covering& b);

 private:
  Covering(std::shared_ptr<const Universe> universe, std::vector<Subset> blocks)
      : universe_(std::move(universe)), blocks_(std::move(blocks)) {}

  std::shared_ptr<const Universe> universe_;
  std::vector<Subset> blocks_;
};

}  // namespace coverlat
