#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lcpoly/conformal.hpp"
#include "lcpoly/geometry.hpp"
#include "lcpoly/quadrature.hpp"

namespace lcpoly {

//! One-constant modulus K, optionally with splay/twist/bend constants.
struct ElasticConstants {
    double K = 1;
    std::optional<std::array<double, 3>> frank;

    //! min(K1, K2, K3), which may replace K in every lower bound.
    std::optional<double> min_frank() const;
};

//! Throws InvalidInput unless K > 0 and every Frank constant is > 0.
void validate(const ElasticConstants& constants);

//! E- = 8 K Lz |omega0|
double lower_bound_prism(const Prism& prism, double omega0, double K);
//! E+ = 8 K |(Lx, Ly, Lz)| |omega0|
double upper_bound_prism(const Prism& prism, double omega0, double K);
//! E+/E- = sqrt(a_xz^2 + a_yz^2 + 1), independent of omega0.
double bound_ratio(const Prism& prism);

struct WeightedVertex {
    Vec3 position;
    double omega = 0;
};

enum class LpConstraints { all_pairs, edges };

struct LowerBoundCertificate {
    std::vector<double> xi;  //!< per-vertex Lipschitz weights, min = 0
    double objective = 0;    //!< 2 K sum_a xi_a omega_a
    bool feasible = false;   //!< every Lipschitz constraint holds on output
    friend bool operator==(const LowerBoundCertificate&, const LowerBoundCertificate&) = default;
};

/*!
 * Lower bound E >= 2K max sum_a xi_a Omega_a over 1-Lipschitz vertex
 * weights. With LpConstraints::all_pairs every vertex pair is bounded by
 * its straight-line distance, which is exactly the condition for the
 * interpolant max_a(xi_a - |r - a|) to exist. With LpConstraints::edges
 * only the listed pairs are constrained.
 *
 * Requires at least two vertices and sum_a Omega_a = 0 (within 1e-9,
 * relative to sum |Omega_a|); throws InvalidInput otherwise.
 */
LowerBoundCertificate
lower_bound_lp(std::span<const WeightedVertex> vertices, double K,
               LpConstraints mode = LpConstraints::all_pairs,
               std::span<const std::pair<std::size_t, std::size_t>> edges = {});

//! Prism corners weighted by parity * omega0, in vertex-bit order.
std::vector<WeightedVertex> prism_vertex_data(const Prism& prism, double omega0);
std::vector<std::pair<std::size_t, std::size_t>> prism_edge_list(const Prism& prism);

enum class FluxWeight {
    radius,  //!< integrate |r| D.n, the energy flux
    unit,    //!< integrate D.n, the trapped-area flux
};

//! Adaptive integral of the weighted flux of D through one octant face.
QuadratureResult face_flux(const RationalMap& map, const OctantFace& face, FluxWeight weight,
                           const QuadOptions& opts);

struct EnergyEstimate {
    double value = 0;
    double error = 0;
    std::size_t evaluations = 0;
};

/*!
 * Exact one-constant energy of the reflection-symmetric conformal field,
 * 16 K times the r-weighted flux of D through the three interior octant
 * faces. tol is relative. Each face gets a budget of 10^6 integrand
 * evaluations; exhausting it throws AccuracyError with the best estimate.
 */
EnergyEstimate conformal_energy(const Prism& prism, const RationalMapSpec& spec, double K,
                                double tol = 1e-8);

//! Closed form for f(w) = w through the restricted Appell F2.
double unwrapped_energy(const Prism& prism, double K);

//! E / V^(1/3)
double scaled_energy(double energy, const Prism& prism);

struct EnergyReport {
    double lower = 0;
    double upper = 0;
    std::optional<double> exact;
    std::optional<double> exact_err;
    std::optional<double> scaled;
    double ratio = 0;
    //! Lower bound with K replaced by min(K1, K2, K3), when given.
    std::optional<double> lower_frank;

    friend bool operator==(const EnergyReport&, const EnergyReport&) = default;
};

EnergyReport bounds_report(const Prism& prism, double omega0, const ElasticConstants& constants);
EnergyReport energy_report(const Prism& prism, const RationalMapSpec& spec,
                           const ElasticConstants& constants, double tol);

}  // namespace lcpoly
