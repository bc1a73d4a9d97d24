#pragma once

#include <memory>
#include <vector>

#include "coverlat/covering.hpp"

namespace coverlat {

/// A covering approximation space <U, C> with lazily computed derived data
/// (neighborhoods, minimal descriptions, reduct).
///
/// Copies share one cache. Each cached value is filled exactly once, under
/// `std::call_once`, so concurrent readers are safe.
class ApproxSpace {
 public:
  explicit ApproxSpace(Covering covering);

  const Covering& covering() const noexcept { return *covering_; }
  const Universe& universe() const noexcept { return covering_->universe(); }
  std::size_t universe_size() const noexcept { return covering_->universe_size(); }

  /// N(x) for every element, indexed by element.
  const std::vector<Subset>& neighborhoods() const;
  /// Md(x) for every element; each list sorted in canonical bit order.
  const std::vector<std::vector<Subset>>& minimal_descriptions() const;
  const Covering& reduct() const;

 private:
  struct Cache;
  std::shared_ptr<const Covering> covering_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace coverlat
