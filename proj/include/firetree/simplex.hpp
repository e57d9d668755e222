#pragma once

#include <vector>

#include "firetree/rational.hpp"

namespace firetree {

// Exact-rational primal simplex for max c'x s.t. Ax <= b, x >= 0 with b >= 0
// entrywise (the slack basis is then feasible). Bland's rule, so it cannot
// cycle; performance is irrelevant at the sizes used here.
struct LpResult {
    Rat value;
    std::vector<Rat> x;
    long long pivots = 0;
};

LpResult solve_lp_max(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                      const std::vector<Rat>& c);

}  // namespace firetree
