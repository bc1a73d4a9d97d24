#include "coverlat/descriptions.hpp"

#include <algorithm>
#include <string>

#include "coverlat/errors.hpp"

namespace coverlat {

namespace {

void check_element(const ApproxSpace& space, std::size_t x) {
  if (x >= space.universe_size()) {
    throw Error(Errc::UnknownElement, "element index " + std::to_string(x) +
                                          " outside universe of size " +
                                          std::to_string(space.universe_size()));
  }
}

}  // namespace

std::vector<Subset> compute_neighborhoods(const Covering& covering) {
  const std::size_t n = covering.universe_size();
  std::vector<Subset> out(n, Subset::full(n));
  for (const auto& block : covering.blocks()) {
    block.for_each([&](std::size_t x) { out[x] &= block; });
  }
  return out;
}

std::vector<std::vector<Subset>> compute_minimal_descriptions(const Covering& covering) {
  const std::size_t n = covering.universe_size();
  std::vector<std::vector<Subset>> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Subset> containing;
    for (const auto& block : covering.blocks())
      if (block.contains(x)) containing.push_back(block);
    for (const auto& k : containing) {
      const bool minimal = std::none_of(containing.begin(), containing.end(),
                                        [&](const Subset& s) { return s.is_proper_subset_of(k); });
      if (minimal) out[x].push_back(k);
    }
    std::sort(out[x].begin(), out[x].end());
  }
  return out;
}

Subset neighborhood(const ApproxSpace& space, std::size_t x) {
  check_element(space, x);
  return space.neighborhoods()[x];
}

std::vector<Subset> minimal_description(const ApproxSpace& space, std::size_t x) {
  check_element(space, x);
  return space.minimal_descriptions()[x];
}

bool is_unary(const ApproxSpace& space) {
  const auto& md = space.minimal_descriptions();
  return std::all_of(md.begin(), md.end(), [](const auto& d) { return d.size() == 1; });
}

bool intersections_are_block_unions(const ApproxSpace& space) {
  const auto blocks = space.covering().blocks();
  const std::size_t n = space.universe_size();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      const Subset meet = blocks[i] & blocks[j];
      Subset inside(n);
      for (const auto& s : blocks)
        if (s.is_subset_of(meet)) inside |= s;
      if (inside != meet) return false;
    }
  }
  return true;
}

bool neighborhoods_form_partition(const ApproxSpace& space) {
  auto distinct = space.neighborhoods();
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Subset seen(space.universe_size());
  for (const auto& nb : distinct) {
    if (nb.intersects(seen)) return false;
    seen |= nb;
  }
  return seen.is_full();
}

}  // namespace coverlat
