#include "lcpoly/appell.hpp"

#include <cmath>
#include <sstream>

#include "lcpoly/errors.hpp"
#include "lcpoly/quadrature.hpp"

namespace lcpoly {

double appell_f2_restricted(double p, double q)
{
    if (!std::isfinite(p) || !std::isfinite(q) || p < 0 || q < 0) {
        std::ostringstream os;
        os << "appell_f2_restricted: arguments must be finite and >= 0 (got " << p
           << ", " << q << ")";
        throw DomainError(os.str());
    }
    // int_0^1 dy / (a + q y^2) = atan(t)/(t a) with t = sqrt(q/a).
    auto inner = [q](double x, double p_) {
        const double a = 1.0 + p_ * x * x;
        const double t = std::sqrt(q / a);
        return (t > 0 ? std::atan(t) / t : 1.0) / a;
    };
    QuadOptions opts;
    opts.abs_tol = 0;
    opts.rel_tol = 1e-13;
    opts.max_evals = 200'000;
    return quad1d([&](double x) { return inner(x, p); }, {0.0, 1.0}, opts).value;
}

}  // namespace lcpoly
