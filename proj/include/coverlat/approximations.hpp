#pragma once

#include "coverlat/approx_space.hpp"

namespace coverlat {

// First-type (block based) and sixth-type (neighborhood based) lower and
// upper approximations. All throw `Errc::UniverseMismatch` when x is over a
// universe of a different size.

/// Union of the blocks contained in x.
Subset fl(const ApproxSpace& space, const Subset& x);
/// Union of the blocks meeting x.
Subset fh(const ApproxSpace& space, const Subset& x);
/// Elements whose neighborhood is contained in x.
Subset xl(const ApproxSpace& space, const Subset& x);
/// Elements whose neighborhood meets x.
Subset xh(const ApproxSpace& space, const Subset& x);

}  // namespace coverlat
