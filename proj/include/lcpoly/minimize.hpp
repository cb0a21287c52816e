#pragma once

#include <cstddef>
#include <functional>

#include "lcpoly/quadrature.hpp"

namespace lcpoly {

struct MinimizeResult {
    double argmin = 0;
    double min_value = 0;
    //! The minimum sits at an endpoint of the search interval.
    bool at_boundary = false;
    //! Final bracket containing argmin.
    Interval bracket;
    std::size_t evaluations = 0;
    friend bool operator==(const MinimizeResult&, const MinimizeResult&) = default;
};

struct MinimizeOptions {
    double tol = 1e-8;         //!< absolute tolerance on argmin
    std::size_t grid = 101;    //!< uniform scan points, endpoints included
};

/*!
 * Bracketing minimizer on [lo, hi]: a uniform scan locates the best grid
 * point, then golden-section search refines inside its neighbouring cells.
 * The returned value is never worse than the best scanned sample. Throws
 * EvaluationError if the objective returns a non-finite value.
 */
MinimizeResult minimize_1d(const std::function<double(double)>& objective, Interval domain,
                           const MinimizeOptions& opts = {});

}  // namespace lcpoly
