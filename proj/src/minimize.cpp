#include "lcpoly/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "lcpoly/errors.hpp"

namespace lcpoly {

MinimizeResult minimize_1d(const std::function<double(double)>& objective, Interval domain,
                           const MinimizeOptions& opts)
{
    if (!(domain.lo < domain.hi))
        throw DomainError("minimize_1d: empty search interval");
    if (opts.grid < 2)
        throw DomainError("minimize_1d: grid needs at least two points");

    std::size_t evals = 0;
    auto eval = [&](double x) {
        ++evals;
        const double v = objective(x);
        if (!std::isfinite(v)) {
            std::ostringstream os;
            os << "objective is not finite at " << x;
            throw EvaluationError(os.str());
        }
        return v;
    };

    const std::size_t n = opts.grid;
    const double step = (domain.hi - domain.lo) / static_cast<double>(n - 1);
    auto grid_x = [&](std::size_t i) {
        return i + 1 == n ? domain.hi : domain.lo + step * static_cast<double>(i);
    };
    std::vector<double> values(n);
    std::size_t best = 0;
    for (std::size_t i = 0; i < n; ++i) {
        values[i] = eval(grid_x(i));
        if (values[i] < values[best])
            best = i;
    }

    double a = grid_x(best == 0 ? 0 : best - 1);
    double b = grid_x(best + 1 == n ? n - 1 : best + 1);
    double best_x = grid_x(best);
    double best_v = values[best];

    // Golden section on [a, b].
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = eval(c), fd = eval(d);
    while (b - a > opts.tol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = eval(c);
        }
        else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = eval(d);
        }
    }
    const double gx = fc <= fd ? c : d;
    const double gv = std::min(fc, fd);

    MinimizeResult result;
    if (gv < best_v) {
        result.argmin = gx;
        result.min_value = gv;
    }
    else {
        result.argmin = best_x;
        result.min_value = best_v;
    }
    // Endpoint best, or the refined minimum collapsed onto an endpoint.
    const bool at_lo = result.argmin - domain.lo <= opts.tol;
    const bool at_hi = domain.hi - result.argmin <= opts.tol;
    result.at_boundary = at_lo || at_hi;
    result.bracket = {std::min(a, result.argmin), std::max(b, result.argmin)};
    if (at_lo)
        result.bracket.lo = domain.lo;
    else if (at_hi)
        result.bracket.hi = domain.hi;
    result.evaluations = evals;
    return result;
}

}  // namespace lcpoly
