#include "coverlat/approx_space.hpp"

#include <mutex>
#include <optional>

#include "coverlat/descriptions.hpp"
#include "coverlat/reduction.hpp"

namespace coverlat {

struct ApproxSpace::Cache {
  std::once_flag neighborhoods_once;
  std::vector<Subset> neighborhoods;
  std::once_flag descriptions_once;
  std::vector<std::vector<Subset>> descriptions;
  std::once_flag reduct_once;
  std::optional<Covering> reduct;
};

ApproxSpace::ApproxSpace(Covering covering)
    : covering_(std::make_shared<const Covering>(std::move(covering))),
      cache_(std::make_shared<Cache>()) {}

const std::vector<Subset>& ApproxSpace::neighborhoods() const {
  std::call_once(cache_->neighborhoods_once,
                 [&] { cache_->neighborhoods = compute_neighborhoods(*covering_); });
  return cache_->neighborhoods;
}

const std::vector<std::vector<Subset>>& ApproxSpace::minimal_descriptions() const {
  std::call_once(cache_->descriptions_once,
                 [&] { cache_->descriptions = compute_minimal_descriptions(*covering_); });
  return cache_->descriptions;
}

const Covering& ApproxSpace::reduct() const {
  std::call_once(cache_->reduct_once, [&] { cache_->reduct = compute_reduct(*covering_); });
  return *cache_->reduct;
}

}  // namespace coverlat
