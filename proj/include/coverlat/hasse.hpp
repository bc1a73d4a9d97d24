#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "coverlat/fixed_point_family.hpp"

namespace coverlat {

/// Cover relation of a family ordered by ⊆.
struct HasseDiagram {
  /// Members sorted by (cardinality, canonical bit order).
  std::vector<Subset> nodes;
  /// (lower, upper) node indices with lower ⋖ upper, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  /// Number of lower covers of each node.
  std::vector<std::size_t> lower_cover_counts() const;
};

HasseDiagram hasse(const FixedPointFamily& family);

/// Join-irreducibles read off the diagram: nodes with exactly one lower cover.
std::vector<Subset> join_irreducibles_by_hasse(const FixedPointFamily& family);

}  // namespace coverlat
