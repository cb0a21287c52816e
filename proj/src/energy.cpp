#include "lcpoly/energy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lcpoly/appell.hpp"
#include "lcpoly/errors.hpp"
#include "lcpoly/invariants.hpp"
#include "lcpoly/simplex.hpp"

namespace lcpoly {
namespace {

void check_k(double K)
{
    if (!std::isfinite(K) || !(K > 0)) {
        std::ostringstream os;
        os << "elastic constant must be finite and positive (got " << K << ")";
        throw InvalidInput(os.str());
    }
}

}  // namespace

std::optional<double> ElasticConstants::min_frank() const
{
    if (!frank)
        return std::nullopt;
    return *std::min_element(frank->begin(), frank->end());
}

void validate(const ElasticConstants& constants)
{
    check_k(constants.K);
    if (constants.frank) {
        for (double k : *constants.frank)
            check_k(k);
    }
}

double lower_bound_prism(const Prism& prism, double omega0, double K)
{
    check_k(K);
    return 8 * K * prism.lz() * std::abs(omega0);
}

double upper_bound_prism(const Prism& prism, double omega0, double K)
{
    check_k(K);
    return 8 * K * norm(prism.lengths()) * std::abs(omega0);
}

double bound_ratio(const Prism& prism)
{
    const double axz = prism.aspect(0, 2);
    const double ayz = prism.aspect(1, 2);
    return std::sqrt(axz * axz + ayz * ayz + 1);
}

LowerBoundCertificate
lower_bound_lp(std::span<const WeightedVertex> vertices, double K, LpConstraints mode,
               std::span<const std::pair<std::size_t, std::size_t>> edges)
{
    check_k(K);
    const std::size_t n = vertices.size();
    if (n < 2)
        throw InvalidInput("lower_bound_lp: at least two vertices are required");
    double sum = 0, total = 0;
    for (const WeightedVertex& v : vertices) {
        sum += v.omega;
        total += std::abs(v.omega);
    }
    if (std::abs(sum) > 1e-9 * std::max(1.0, total)) {
        std::ostringstream os;
        os << "lower_bound_lp: trapped areas must sum to zero (sum = " << sum << ")";
        throw InvalidInput(os.str());
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (mode == LpConstraints::all_pairs) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                pairs.emplace_back(a, b);
    }
    else {
        if (edges.empty())
            throw InvalidInput("lower_bound_lp: edge constraints requested without an edge list");
        for (auto [a, b] : edges) {
            if (a >= n || b >= n)
                throw InvalidInput("lower_bound_lp: edge references a missing vertex");
            pairs.emplace_back(a, b);
        }
    }

    std::vector<DifferenceBound> bounds;
    for (auto [a, b] : pairs) {
        const double d = norm(vertices[a].position - vertices[b].position);
        bounds.push_back({a, b, d});
        bounds.push_back({b, a, d});
    }
    std::vector<double> costs(n);
    std::transform(vertices.begin(), vertices.end(), costs.begin(),
                   [](const WeightedVertex& v) { return v.omega; });

    const LpSolution sol = lp_solve(costs, bounds);

    LowerBoundCertificate cert;
    cert.xi = sol.x;
    // Gauge: the optimum is only defined up to a shift.
    const double shift = *std::min_element(cert.xi.begin(), cert.xi.end());
    for (double& x : cert.xi)
        x -= shift;
    double objective = 0;
    for (std::size_t a = 0; a < n; ++a)
        objective += cert.xi[a] * vertices[a].omega;
    cert.objective = 2 * K * objective;
    cert.feasible = true;
    for (const DifferenceBound& d : bounds) {
        if (cert.xi[d.i] - cert.xi[d.j] > d.bound * (1 + 1e-9) + 1e-12)
            cert.feasible = false;
    }
    return cert;
}

std::vector<WeightedVertex> prism_vertex_data(const Prism& prism, double omega0)
{
    std::vector<WeightedVertex> out;
    for (const VertexArea& va : vertex_trapped_areas(prism, omega0))
        out.push_back({va.vertex.coords, va.omega});
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> prism_edge_list(const Prism& prism)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto [a, b] : prism.edges())
        out.emplace_back(a, b);
    return out;
}

QuadratureResult face_flux(const RationalMap& map, const OctantFace& face, FluxWeight weight,
                           const QuadOptions& opts)
{
    const Vec3 normal = face.outward_normal();
    const int u = face.free_axes[0];
    const int v = face.free_axes[1];
    auto integrand = [&](double a, double b) {
        Vec3 r;
        r[face.axis] = face.offset;
        r[u] = a;
        r[v] = b;
        const double flux = dot(map.flux(r), normal);
        return weight == FluxWeight::radius ? norm(r) * flux : flux;
    };
    return quad2d(integrand, {{0.0, face.extent[0]}, {0.0, face.extent[1]}}, opts);
}

EnergyEstimate conformal_energy(const Prism& prism, const RationalMapSpec& spec, double K,
                                double tol)
{
    check_k(K);
    if (!(tol > 0))
        throw InvalidInput("conformal_energy: tolerance must be positive");
    const RationalMap map(spec);
    QuadOptions opts;
    opts.rel_tol = tol;
    opts.abs_tol = 1e-300;
    opts.max_evals = 1'000'000;

    const double scale = 16 * K * spec.orientation_sign();
    EnergyEstimate e;
    for (const OctantFace& face : prism.octant().interior) {
        QuadratureResult r;
        try {
            r = face_flux(map, face, FluxWeight::radius, opts);
        }
        catch (const AccuracyError& err) {
            std::ostringstream os;
            os << "conformal_energy: face " << "xyz"[face.axis] << " = L/2 did not converge: "
               << err.what();
            throw AccuracyError(os.str(), std::abs(scale) * (e.value + err.best()),
                                std::abs(scale) * (e.error + err.error_estimate()));
        }
        e.value += r.value;
        e.error += r.error_estimate;
        e.evaluations += r.evaluations;
    }
    e.value *= scale;
    e.error *= std::abs(scale);
    return e;
}

double unwrapped_energy(const Prism& prism, double K)
{
    check_k(K);
    // Cyclic (i, j, k); a_ji = L_j / L_i.
    double sum = 0;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        const int k = (i + 2) % 3;
        const double aj = prism.aspect(j, i);
        const double ak = prism.aspect(k, i);
        sum += aj * ak * prism.length(i) * appell_f2_restricted(aj * aj, ak * ak);
    }
    return 8 * K * sum;
}

double scaled_energy(double energy, const Prism& prism)
{
    return energy / std::cbrt(prism.volume());
}

EnergyReport bounds_report(const Prism& prism, double omega0, const ElasticConstants& constants)
{
    validate(constants);
    if (!std::isfinite(omega0))
        throw InvalidInput("omega0 must be finite");
    EnergyReport r;
    r.lower = lower_bound_prism(prism, omega0, constants.K);
    r.upper = upper_bound_prism(prism, omega0, constants.K);
    r.ratio = bound_ratio(prism);
    if (auto kmin = constants.min_frank())
        r.lower_frank = lower_bound_prism(prism, omega0, *kmin);
    return r;
}

EnergyReport energy_report(const Prism& prism, const RationalMapSpec& spec,
                           const ElasticConstants& constants, double tol)
{
    EnergyReport r = bounds_report(prism, trapped_area(spec), constants);
    const EnergyEstimate e = conformal_energy(prism, spec, constants.K, tol);
    r.exact = e.value;
    r.exact_err = e.error;
    r.scaled = scaled_energy(e.value, prism);
    return r;
}

}  // namespace lcpoly
