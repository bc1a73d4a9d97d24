#include "coverlat/hasse.hpp"

#include <algorithm>

namespace coverlat {

std::vector<std::size_t> HasseDiagram::lower_cover_counts() const {
  std::vector<std::size_t> counts(nodes.size(), 0);
  for (const auto& [lower, upper] : edges) ++counts[upper];
  return counts;
}

HasseDiagram hasse(const FixedPointFamily& family) {
  HasseDiagram d;
  d.nodes.assign(family.members().begin(), family.members().end());
  std::sort(d.nodes.begin(), d.nodes.end(), popcount_less);

  // The lower covers of y are the maximal members strictly below y.
  std::vector<std::size_t> below;
  for (std::size_t y = 0; y < d.nodes.size(); ++y) {
    below.clear();
    for (std::size_t x = 0; x < y; ++x)
      if (d.nodes[x].is_proper_subset_of(d.nodes[y])) below.push_back(x);
    for (std::size_t x : below) {
      const bool maximal = std::none_of(below.begin(), below.end(), [&](std::size_t z) {
        return d.nodes[x].is_proper_subset_of(d.nodes[z]);
      });
      if (maximal) d.edges.emplace_back(x, y);
    }
  }
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

std::vector<Subset> join_irreducibles_by_hasse(const FixedPointFamily& family) {
  const HasseDiagram d = hasse(family);
  const auto counts = d.lower_cover_counts();
  std::vector<Subset> out;
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    if (counts[i] == 1) out.push_back(d.nodes[i]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coverlat
