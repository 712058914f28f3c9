#pragma once

#include "hn/rational.hpp"

#include <optional>
#include <vector>

namespace hn {

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
    LPStatus status;
    Rat objective;        // valid when Optimal
    std::vector<Rat> x;   // valid when Optimal
};

// minimize c.x subject to A x = b, x >= 0, in exact rational arithmetic.
// Two-phase dense simplex with Bland's rule (always terminates).
LPResult solve_lp(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                  const std::vector<Rat>& c);

// Convex weights lambda >= 0 with sum lambda = 1 and
// |sum_i lambda_i pts[i] - p|_inf <= eps, if such weights exist.
std::optional<std::vector<Rat>> convex_weights(const std::vector<RatVec>& pts, const RatVec& p,
                                               const Rat& eps);

bool in_convex_hull(const std::vector<RatVec>& pts, const RatVec& p);

// p lies in the relative interior of conv(pts): some convex combination
// uses every point with a strictly positive weight.
bool in_relative_interior(const std::vector<RatVec>& pts, const RatVec& p);

// min over s in [0,1] of |a + s (b - a) - p|_inf, exact.
Rat dist_inf_to_segment(const RatVec& a, const RatVec& b, const RatVec& p);

}  // namespace hn
