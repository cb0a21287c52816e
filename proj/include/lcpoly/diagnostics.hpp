#pragma once

#include <cstdint>

#include "lcpoly/conformal.hpp"
#include "lcpoly/geometry.hpp"

// Finite-difference checks that treat a RationalMap as a black-box field.
// Steps are relative to |r| because every field here is radially constant.

namespace lcpoly {

//! sum_j |d_j n|^2 by central differences with step rel_step*|r|.
double gradient_energy_density_fd(const RationalMap& map, Vec3 r, double rel_step = 1e-5);

//! D_j = 1/2 eps_jkl (d_k n x d_l n) . n by central differences.
Vec3 flux_from_definition_fd(const RationalMap& map, Vec3 r, double rel_step = 1e-5);

//! div D by fourth-order central differences of RationalMap::flux.
double divergence_fd(const RationalMap& map, Vec3 r, double rel_step = 1e-4);

struct FieldCheck {
    std::size_t points = 0;
    //! max | (grad n)^2 - 2|D| | / max((grad n)^2, 2|D|)
    double conformality = 0;
    //! max |div D| * |r| / |D|
    double divergence = 0;
    //! max |div D|
    double divergence_abs = 0;
    //! max |D - D_fd| / |D|, D_fd from the defining formula
    double definition = 0;
};

//! Runs the three checks at `points` uniform random interior octant points.
FieldCheck check_field(const RationalMapSpec& spec, const Prism& prism, std::size_t points,
                       std::uint64_t seed);

}  // namespace lcpoly
