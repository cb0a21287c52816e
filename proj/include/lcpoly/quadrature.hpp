#pragma once

#include <cstddef>
#include <functional>

namespace lcpoly {

struct QuadratureResult {
    double value = 0;
    double error_estimate = 0;
    std::size_t evaluations = 0;
    friend bool operator==(const QuadratureResult&, const QuadratureResult&) = default;
};

//! A cell is accepted once the summed error is below max(abs_tol, rel_tol*|I|).
struct QuadOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    std::size_t max_evals = 1'000'000;
};

struct Interval {
    double lo = 0;
    double hi = 0;
    friend bool operator==(const Interval&, const Interval&) = default;
};

struct Rect {
    Interval x;
    Interval y;
};

using Integrand1d = std::function<double(double)>;
using Integrand2d = std::function<double(double, double)>;

/*!
 * Globally adaptive Gauss-Kronrod quadrature (15-point Kronrod, nested
 * 7-point Gauss error estimate). The interval with the largest error is
 * bisected until the tolerance is met. Throws AccuracyError carrying the
 * best estimate when the evaluation budget runs out, EvaluationError on a
 * non-finite integrand value.
 */
QuadratureResult quad1d(const Integrand1d& f, Interval domain, const QuadOptions& opts = {});

/*!
 * Two-dimensional counterpart of quad1d on a rectangle: tensor 15x15
 * Kronrod rule per cell, tensor 7x7 Gauss subset for the error, bisection
 * of the longer side of the worst cell. Deterministic for fixed options.
 */
QuadratureResult quad2d(const Integrand2d& f, Rect domain, const QuadOptions& opts = {});

}  // namespace lcpoly
