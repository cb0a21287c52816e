#include "lcpoly/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "lcpoly/errors.hpp"

namespace lcpoly {
namespace {

constexpr double kPi = std::numbers::pi;

int parity_sign(std::size_t count) { return count % 2 == 0 ? 1 : -1; }

// Sum over j = 1..N of (-1)^j sign_j with factors sorted by position.
int alternating_sum(std::vector<AxisFactor> factors)
{
    std::stable_sort(factors.begin(), factors.end(),
                     [](const AxisFactor& a, const AxisFactor& b) { return a.position < b.position; });
    int sum = 0;
    for (std::size_t j = 0; j < factors.size(); ++j)
        sum += parity_sign(j + 1) * factors[j].sign;
    return sum;
}

int sign_sum(const std::vector<AxisFactor>& factors)
{
    int sum = 0;
    for (const AxisFactor& f : factors)
        sum += f.sign;
    return sum;
}

double wrap_angle(double a)
{
    a = std::remainder(a, 2 * kPi);
    return a <= -kPi ? a + 2 * kPi : a;
}

class ArcTracker {
  public:
    ArcTracker(const RationalMap& map, int axis) : map_(map), i_(axis), j_((axis + 1) % 3), k_((axis + 2) % 3) {}

    int kink()
    {
        const std::vector<double> alphas = samples();
        double prev_alpha = alphas.front();
        double prev_phi = angle(prev_alpha);
        const double start = prev_phi;
        double total = 0;
        for (std::size_t s = 1; s < alphas.size(); ++s) {
            const double alpha = alphas[s];
            const double phi = angle(alpha);
            total += refine(prev_alpha, prev_phi, alpha, phi, 0);
            prev_alpha = alpha;
            prev_phi = phi;
        }
        const double shortest = wrap_angle(prev_phi - start);
        const double windings = (shortest - total) / (2 * kPi);
        const double rounded = std::round(windings);
        if (std::abs(windings - rounded) > 1e-6) {
            std::ostringstream os;
            os << "kink oracle on face " << "xyz"[i_] << " produced non-integer winding " << windings;
            throw PathResolutionError(os.str(), windings, std::abs(windings - rounded));
        }
        return static_cast<int>(rounded);
    }

  private:
    // Arc parameters where a zero or pole of f meets (or, for the z face,
    // faces) the path. The director can turn through 2 pi within a width
    // set by the local residue, far below any uniform step.
    std::vector<double> breakpoints() const
    {
        const RationalMapSpec& spec = map_.spec();
        std::vector<double> out{0.0, 0.5 * kPi};
        if (i_ == 0) {
            // w = i cos(alpha) / (1 + sin(alpha)) runs from i to 0.
            for (const AxisFactor& f : spec.imag_factors)
                out.push_back(0.5 * kPi - 2 * std::atan(f.position));
        }
        else if (i_ == 1) {
            // w = tan(alpha / 2) runs from 0 to 1.
            for (const AxisFactor& f : spec.real_factors)
                out.push_back(2 * std::atan(f.position));
        }
        else {
            // w = exp(i alpha); complex quartets sit at angle arg(t).
            for (const ComplexFactor& f : spec.complex_factors)
                out.push_back(std::atan2(std::abs(f.position.imag()), std::abs(f.position.real())));
        }
        return out;
    }

    // Uniform grid plus samples graded geometrically toward each breakpoint.
    std::vector<double> samples() const
    {
        constexpr int initial = 2048;
        constexpr int grading = 52;
        const double end = 0.5 * kPi;
        const double step = end / initial;
        std::vector<double> a;
        for (int s = 0; s <= initial; ++s)
            a.push_back(s == initial ? end : s * step);
        for (double b : breakpoints()) {
            a.push_back(b);
            for (int m = 0; m <= grading; ++m) {
                const double d = step * std::ldexp(1.0, -m);
                if (b - d > 0)
                    a.push_back(b - d);
                if (b + d < end)
                    a.push_back(b + d);
            }
        }
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        return a;
    }

    Vec3 point(double alpha) const
    {
        Vec3 r;
        r[j_] = std::cos(alpha);
        r[k_] = std::sin(alpha);
        return r;
    }

    double angle(double alpha)
    {
        if (++evals_ > kBudget)
            throw PathResolutionError("kink oracle exhausted its sampling budget", 0, 0);
        const Vec3 n = map_.director(point(alpha));
        return std::atan2(n[k_], n[j_]);
    }

    double refine(double a0, double phi0, double a1, double phi1, int depth)
    {
        const double delta = wrap_angle(phi1 - phi0);
        if (std::abs(delta) < 0.5 * kPi)
            return delta;
        if (depth >= kMaxDepth)
            throw PathResolutionError("kink oracle cannot resolve a phase jump of "
                                          + std::to_string(delta),
                                      delta, 0);
        const double am = 0.5 * (a0 + a1);
        const double pm = angle(am);
        return refine(a0, phi0, am, pm, depth + 1) + refine(am, pm, a1, phi1, depth + 1);
    }

    static constexpr int kMaxDepth = 40;
    static constexpr long kBudget = 1'000'000;

    const RationalMap& map_;
    int i_, j_, k_;
    long evals_ = 0;
};

}  // namespace

double trapped_area(const RationalMapSpec& spec)
{
    validate(spec);
    return spec.orientation_sign() * 0.5 * spec.degree() * kPi;
}

EdgeOrientations edge_orientations(const RationalMapSpec& spec)
{
    validate(spec);
    const int a = static_cast<int>(spec.real_factors.size());
    const int b = static_cast<int>(spec.imag_factors.size());
    EdgeOrientations e;
    e.ex = spec.epsilon * parity_sign(static_cast<std::size_t>(a));
    // (-1)^((n-1)/2), valid for negative odd n as well.
    const int half = (spec.n - 1) / 2;
    e.ey = spec.epsilon * parity_sign(static_cast<std::size_t>(b)) * (half % 2 == 0 ? 1 : -1);
    e.ez = spec.n > 0 ? 1 : -1;
    if (spec.orientation == Orientation::anticonformal)
        e.ey = -e.ey;
    return e;
}

KinkNumbers kink_numbers(const RationalMapSpec& spec)
{
    validate(spec);
    // The closed forms describe the conformal field.
    RationalMapSpec conformal = spec;
    conformal.orientation = Orientation::conformal;
    const EdgeOrientations e = edge_orientations(conformal);

    const int a = static_cast<int>(spec.real_factors.size());
    const int b = static_cast<int>(spec.imag_factors.size());
    const int pa = a % 2 == 0 ? 1 : -1;
    const int pb = b % 2 == 0 ? 1 : -1;

    // Each bracket is even, so the halvings below are exact.
    const int bx = alternating_sum(spec.imag_factors) + (1 - pb) / 2 * e.ez;
    const int by = alternating_sum(spec.real_factors) + (1 - pa) / 2 * e.ez;
    KinkNumbers k;
    k.kx = -pb * e.ey * bx / 2;
    k.ky = -pa * e.ex * by / 2;

    int tau = 0;
    for (const ComplexFactor& f : spec.complex_factors)
        tau += f.sign;
    // 4 kz = ex ey - n - 2 sum(rho) - 2 sum(sigma) - 4 sum(tau)
    const int kz4 = e.ex * e.ey - spec.n - 2 * sign_sum(spec.real_factors)
                    - 2 * sign_sum(spec.imag_factors) - 4 * tau;
    k.kz = kz4 / 4;

    if (spec.orientation == Orientation::anticonformal) {
        k.kx = -k.kx;
        k.kz = -k.kz;
    }
    return k;
}

double omega_min(const KinkNumbers& k)
{
    return 2 * kPi * (std::abs(k.kx) + std::abs(k.ky) + std::abs(k.kz) + 0.25);
}

TopologicalInvariants invariants_of(const RationalMapSpec& spec)
{
    TopologicalInvariants inv;
    inv.edges = edge_orientations(spec);
    inv.kinks = kink_numbers(spec);
    inv.omega0 = trapped_area(spec);
    inv.omega_min = omega_min(inv.kinks);
    return inv;
}

QuadratureResult numeric_trapped_area(const RationalMapSpec& spec, double tol)
{
    if (!(tol > 0))
        throw DomainError("numeric_trapped_area: tolerance must be positive");
    const RationalMap map(spec);
    QuadOptions opts;
    opts.abs_tol = tol;
    opts.rel_tol = 0;
    // rho = t^3 spreads densities concentrated at the origin (small |f| or
    // |1/f| there) over many cells; the angle is scaled to [0, 1].
    auto integrand = [&](double t, double u) {
        const double rho = t * t * t;
        const double jacobian = 3 * t * t * rho * 0.5 * kPi;
        return map.area_density(std::polar(rho, 0.5 * kPi * u)) * jacobian;
    };
    QuadratureResult r = quad2d(integrand, {{0.0, 1.0}, {0.0, 1.0}}, opts);
    r.value *= spec.orientation_sign();
    return r;
}

int numeric_kink_x(const RationalMapSpec& spec)
{
    return ArcTracker(RationalMap(spec), 0).kink();
}

int numeric_kink_y(const RationalMapSpec& spec)
{
    return ArcTracker(RationalMap(spec), 1).kink();
}

int numeric_kink_z(const RationalMapSpec& spec)
{
    return ArcTracker(RationalMap(spec), 2).kink();
}

KinkNumbers numeric_kinks(const RationalMapSpec& spec)
{
    const RationalMap map(spec);
    return {ArcTracker(map, 0).kink(), ArcTracker(map, 1).kink(), ArcTracker(map, 2).kink()};
}

EdgeOrientations sampled_edge_orientations(const RationalMapSpec& spec)
{
    const RationalMap map(spec);
    auto sign = [](double v) { return v >= 0 ? 1 : -1; };
    return {sign(map.director({0.5, 0, 0}).x), sign(map.director({0, 0.5, 0}).y),
            sign(map.director({0, 0, 0.5}).z)};
}

bool InvariantsReport::consistent(double tol) const
{
    return closed.kinks == kinks_numeric && closed.edges == edges_sampled
           && std::abs(closed.omega0 - omega0_numeric.value) <= tol;
}

InvariantsReport check_invariants(const RationalMapSpec& spec, double tol)
{
    InvariantsReport r;
    r.closed = invariants_of(spec);
    r.degree = spec.degree();
    r.omega0_numeric = numeric_trapped_area(spec, tol);
    r.kinks_numeric = numeric_kinks(spec);
    r.edges_sampled = sampled_edge_orientations(spec);
    return r;
}

}  // namespace lcpoly
