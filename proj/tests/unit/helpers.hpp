#pragma once

#include <initializer_list>
#include <vector>

#include "coverlat/approx_space.hpp"
#include "coverlat/covering.hpp"
#include "coverlat/subset.hpp"

namespace testing {

using coverlat::ApproxSpace;
using coverlat::Covering;
using coverlat::Subset;

// Elements are written 1-based, as in the labels "1".."n".
inline Subset S(std::size_t n, std::initializer_list<std::size_t> one_based) {
  Subset out(n);
  for (std::size_t e : one_based) out.insert(e - 1);
  return out;
}

inline Covering make_covering(std::size_t n,
                              std::initializer_list<std::initializer_list<std::size_t>> blocks) {
  std::vector<Subset> subsets;
  for (auto b : blocks) subsets.push_back(S(n, b));
  return Covering::from_subsets(n, std::move(subsets));
}

inline Covering example_one() { return make_covering(4, {{1, 2, 3}, {1}, {1, 3, 4}, {2, 3}}); }
inline Covering non_distributive() { return make_covering(4, {{1, 2}, {2, 3}, {1, 3, 4}}); }
inline Covering example_three() { return make_covering(4, {{3}, {1}, {1, 3, 4}, {2, 3}}); }

inline std::vector<Subset> family(std::size_t n,
                                  std::initializer_list<std::initializer_list<std::size_t>> sets) {
  std::vector<Subset> out;
  for (auto s : sets) out.push_back(S(n, s));
  return out;
}

}  // namespace testing
