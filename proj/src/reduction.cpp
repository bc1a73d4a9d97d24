#include "coverlat/reduction.hpp"

#include <algorithm>
#include <span>

namespace coverlat {

namespace {

bool reducible_in(std::span<const Subset> blocks, std::size_t k) {
  const Subset& target = blocks[k];
  Subset inside(target.universe_size());
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (i != k && blocks[i].is_subset_of(target)) inside |= blocks[i];
  return inside == target;
}

}  // namespace

bool is_reducible(const Covering& covering, std::size_t k) {
  covering.block(k);
  return reducible_in(covering.blocks(), k);
}

bool is_reducible(const ApproxSpace& space, std::size_t k) {
  return is_reducible(space.covering(), k);
}

std::vector<std::size_t> reducible_blocks(const Covering& covering) {
  const auto blocks = covering.blocks();
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < blocks.size(); ++k)
    if (reducible_in(blocks, k)) out.push_back(k);
  return out;
}

Covering reduct(const ApproxSpace& space) { return space.reduct(); }

Covering compute_reduct(const Covering& covering) {
  std::vector<Subset> blocks = covering.sorted_blocks();
  for (;;) {
    std::size_t k = 0;
    while (k < blocks.size() && !reducible_in(blocks, k)) ++k;
    if (k == blocks.size()) break;
    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return Covering::from_subsets(covering.universe_ptr(), std::move(blocks));
}

}  // namespace coverlat
