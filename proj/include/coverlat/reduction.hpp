#pragma once

#include <cstddef>
#include <vector>

#include "coverlat/approx_space.hpp"

namespace coverlat {

/// True iff block k is the union of the other blocks it contains.
/// Throws `Errc::BadIndex` for an out-of-range index.
bool is_reducible(const Covering& covering, std::size_t k);
bool is_reducible(const ApproxSpace& space, std::size_t k);

/// Indices of all reducible blocks, ascending.
std::vector<std::size_t> reducible_blocks(const Covering& covering);

/// reduct(C), cached on the space. Blocks are in canonical bit order.
Covering reduct(const ApproxSpace& space);

/// Removes reducible blocks one at a time (first reducible in canonical
/// order each round) until none remain.
Covering compute_reduct(const Covering& covering);

}  // namespace coverlat
