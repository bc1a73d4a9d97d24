#pragma once

#include <cstddef>
#include <vector>

#include "coverlat/approx_space.hpp"

namespace coverlat {

/// N(x): the intersection of all blocks containing x.
Subset neighborhood(const ApproxSpace& space, std::size_t x);

/// Md(x): the inclusion-minimal blocks containing x, in canonical bit order.
std::vector<Subset> minimal_description(const ApproxSpace& space, std::size_t x);

/// True iff every element has exactly one minimal block.
bool is_unary(const ApproxSpace& space);

/// True iff for every pair of blocks K1, K2 the intersection K1 ∩ K2 is the
/// union of the blocks it contains (the empty intersection is the empty union).
bool intersections_are_block_unions(const ApproxSpace& space);

/// True iff the distinct neighborhoods are pairwise disjoint.
bool neighborhoods_form_partition(const ApproxSpace& space);

// Uncached computations backing the ApproxSpace cache.
std::vector<Subset> compute_neighborhoods(const Covering& covering);
std::vector<std::vector<Subset>> compute_minimal_descriptions(const Covering& covering);

}  // namespace coverlat
