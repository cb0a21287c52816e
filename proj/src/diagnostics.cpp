#include "lcpoly/diagnostics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace lcpoly {
namespace {

std::array<Vec3, 3> director_jacobian(const RationalMap& map, Vec3 r, double h)
{
    std::array<Vec3, 3> d;
    for (int j = 0; j < 3; ++j) {
        Vec3 step;
        step[j] = h;
        d[j] = (map.director(r + step) - map.director(r - step)) / (2 * h);
    }
    return d;
}

}  // namespace

double gradient_energy_density_fd(const RationalMap& map, Vec3 r, double rel_step)
{
    const auto d = director_jacobian(map, r, rel_step * norm(r));
    return dot(d[0], d[0]) + dot(d[1], d[1]) + dot(d[2], d[2]);
}

Vec3 flux_from_definition_fd(const RationalMap& map, Vec3 r, double rel_step)
{
    const auto d = director_jacobian(map, r, rel_step * norm(r));
    const Vec3 n = map.director(r);
    // 1/2 eps_jkl (d_k n x d_l n) = d_k n x d_l n for (j,k,l) cyclic.
    return {dot(cross(d[1], d[2]), n), dot(cross(d[2], d[0]), n), dot(cross(d[0], d[1]), n)};
}

double divergence_fd(const RationalMap& map, Vec3 r, double rel_step)
{
    const double h = rel_step * norm(r);
    double div = 0;
    for (int j = 0; j < 3; ++j) {
        Vec3 step;
        step[j] = h;
        const double f1 = map.flux(r + step)[j] - map.flux(r - step)[j];
        const double f2 = map.flux(r + step * 2.0)[j] - map.flux(r - step * 2.0)[j];
        div += (8 * f1 - f2) / (12 * h);
    }
    return div;
}

FieldCheck check_field(const RationalMapSpec& spec, const Prism& prism, std::size_t points,
                       std::uint64_t seed)
{
    const RationalMap map(spec);
    const Octant oct = prism.octant();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.02, 0.98);

    FieldCheck check;
    check.points = points;
    for (std::size_t p = 0; p < points; ++p) {
        const Vec3 r{oct.half.x * unit(rng), oct.half.y * unit(rng), oct.half.z * unit(rng)};
        const Vec3 D = map.flux(r);
        const double dn = norm(D);

        const double grad2 = gradient_energy_density_fd(map, r);
        check.conformality = std::max(
            check.conformality, std::abs(grad2 - 2 * dn) / std::max({grad2, 2 * dn, 1e-300}));

        const double div = std::abs(divergence_fd(map, r));
        check.divergence = std::max(check.divergence, div * norm(r) / std::max(dn, 1e-300));
        check.divergence_abs = std::max(check.divergence_abs, div);

        const Vec3 Dfd = flux_from_definition_fd(map, r);
        check.definition = std::max(check.definition, norm(D - Dfd) / std::max(dn, 1e-300));
    }
    return check;
}

}  // namespace lcpoly
