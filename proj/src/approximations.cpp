#include "coverlat/approximations.hpp"

#include <string>

#include "coverlat/errors.hpp"

namespace coverlat {

namespace {

void check_universe(const ApproxSpace& space, const Subset& x) {
  if (x.universe_size() != space.universe_size()) {
    throw Error(Errc::UniverseMismatch, "subset over a universe of size " +
                                            std::to_string(x.universe_size()) +
                                            ", space has size " +
                                            std::to_string(space.universe_size()));
  }
}

}  // namespace

Subset fl(const ApproxSpace& space, const Subset& x) {
  check_universe(space, x);
  Subset out(x.universe_size());
  for (const auto& block : space.covering().blocks())
    if (block.is_subset_of(x)) out |= block;
  return out;
}

Subset fh(const ApproxSpace& space, const Subset& x) {
  check_universe(space, x);
  Subset out(x.universe_size());
  for (const auto& block : space.covering().blocks())
    if (block.intersects(x)) out |= block;
  return out;
}

Subset xl(const ApproxSpace& space, const Subset& x) {
  check_universe(space, x);
  const auto& nbhd = space.neighborhoods();
  Subset out(x.universe_size());
  for (std::size_t e = 0; e < nbhd.size(); ++e)
    if (nbhd[e].is_subset_of(x)) out.insert(e);
  return out;
}

Subset xh(const ApproxSpace& space, const Subset& x) {
  check_universe(space, x);
  const auto& nbhd = space.neighborhoods();
  Subset out(x.universe_size());
  for (std::size_t e = 0; e < nbhd.size(); ++e)
    if (nbhd[e].intersects(x)) out.insert(e);
  return out;
}

}  // namespace coverlat
