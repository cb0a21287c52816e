#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lcpoly {

//! Dense LP: maximize c.x subject to A x <= b, x >= 0. A is row-major m x n.
struct LinearProgram {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;
    std::vector<double> b;
    std::vector<double> c;
};

struct LpSolution {
    std::vector<double> x;
    double objective = 0;
};

/*!
 * Two-phase dense tableau simplex with Bland's rule, so degenerate
 * problems terminate and results are deterministic. Throws
 * InfeasibleError or UnboundedError.
 */
LpSolution simplex_maximize(const LinearProgram& lp);

//! Constraint x_i - x_j <= bound.
struct DifferenceBound {
    std::size_t i = 0;
    std::size_t j = 0;
    double bound = 0;
};

/*!
 * Maximizes costs.x over x >= 0 subject to difference bounds. Among the
 * optimal points the lexicographically smallest is returned; when the
 * costs sum to zero this pins min_i x_i = 0. Throws InfeasibleError for a
 * contradictory bound set and UnboundedError when the objective is
 * unbounded (costs not summing to zero, for instance).
 */
LpSolution lp_solve(std::span<const double> costs, std::span<const DifferenceBound> constraints);

}  // namespace lcpoly
