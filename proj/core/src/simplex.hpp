#pragma once

#include "pairlab/rational.hpp"

#include <vector>

namespace pairlab::detail {

/// maximize c.y  subject to  A y <= b,  y >= 0,  with b >= 0.
///
/// Dense tableau, slack basis start, Bland's rule for entering and leaving
/// variables. `prices` holds the optimal dual solution (one per row).
struct PackingSolution {
    Rational value;
    std::vector<Rational> y;
    std::vector<Rational> prices;
};

PackingSolution solve_packing_lp(const std::vector<std::vector<Rational>>& a,
                                 const std::vector<Rational>& b,
                                 const std::vector<Rational>& c);

}  // namespace pairlab::detail
