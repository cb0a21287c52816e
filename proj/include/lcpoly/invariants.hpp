#pragma once

#include "lcpoly/conformal.hpp"
#include "lcpoly/quadrature.hpp"

namespace lcpoly {

//! Sign of n along the x-, y- and z-edges.
struct EdgeOrientations {
    int ex = 1;
    int ey = 1;
    int ez = 1;
    friend bool operator==(const EdgeOrientations&, const EdgeOrientations&) = default;
};

//! Kink number on the face normal to each axis.
struct KinkNumbers {
    int kx = 0;
    int ky = 0;
    int kz = 0;
    friend bool operator==(const KinkNumbers&, const KinkNumbers&) = default;
};

struct TopologicalInvariants {
    EdgeOrientations edges;
    KinkNumbers kinks;
    double omega0 = 0;     //!< trapped area at the origin (sr)
    double omega_min = 0;  //!< 2 pi (|kx| + |ky| + |kz| + 1/4)
    friend bool operator==(const TopologicalInvariants&, const TopologicalInvariants&) = default;
};

//! (|n| + 2(a+b) + 4c) pi / 2, negated for anticonformal maps.
double trapped_area(const RationalMapSpec& spec);

EdgeOrientations edge_orientations(const RationalMapSpec& spec);

/*!
 * Closed-form kink numbers. Axis factors enter the alternating sums sorted
 * by ascending position. Anticonformal maps are the conformal field with
 * n_y reflected, which negates k_x and k_z and leaves k_y.
 */
KinkNumbers kink_numbers(const RationalMapSpec& spec);

double omega_min(const KinkNumbers& kinks);
inline double omega_min(const TopologicalInvariants& inv) { return omega_min(inv.kinks); }

TopologicalInvariants invariants_of(const RationalMapSpec& spec);

//! Adaptive quadrature of A over the quarter disc in polar coordinates
//! with rho = t^3; |error| <= tol.
QuadratureResult numeric_trapped_area(const RationalMapSpec& spec, double tol);

/*!
 * Winding oracles. For the face normal to axis i, with (i, j, k) cyclic,
 * the director is followed along the quarter arc from the j-edge to the
 * k-edge and its in-face angle (measured from j toward k) is unwrapped.
 * The kink number is (shortest - total) / 2 pi. Sampling starts from 2048
 * uniform steps, graded geometrically toward the arc ends and toward every
 * point where a factor's zero or pole meets the path, and bisects any step
 * whose angle jump reaches pi/2; an exhausted refinement budget throws
 * PathResolutionError.
 */
int numeric_kink_x(const RationalMapSpec& spec);
int numeric_kink_y(const RationalMapSpec& spec);
int numeric_kink_z(const RationalMapSpec& spec);
KinkNumbers numeric_kinks(const RationalMapSpec& spec);

//! Sign of the director sampled at the middle of each coordinate axis.
EdgeOrientations sampled_edge_orientations(const RationalMapSpec& spec);

//! Closed forms side by side with every numerical oracle.
struct InvariantsReport {
    TopologicalInvariants closed;
    int degree = 0;
    QuadratureResult omega0_numeric;
    KinkNumbers kinks_numeric;
    EdgeOrientations edges_sampled;

    //! Integer invariants match exactly and omega0 within the quadrature tolerance.
    bool consistent(double tol) const;
    friend bool operator==(const InvariantsReport&, const InvariantsReport&) = default;
};

InvariantsReport check_invariants(const RationalMapSpec& spec, double tol = 1e-8);

}  // namespace lcpoly
