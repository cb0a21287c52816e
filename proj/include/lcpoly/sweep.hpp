#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcpoly/conformal.hpp"
#include "lcpoly/energy.hpp"
#include "lcpoly/geometry.hpp"
#include "lcpoly/invariants.hpp"
#include "lcpoly/minimize.hpp"

namespace lcpoly {

//! Which scalar of a spec template the family parameter replaces.
struct ParamSlot {
    enum class Kind { real, imag, complex_re, complex_im };
    Kind kind = Kind::imag;
    std::size_t index = 0;

    friend bool operator==(const ParamSlot&, const ParamSlot&) = default;
};

/*!
 * One-parameter family of rational maps: a template spec with at most one
 * slot filled by s in (0, 1). Families without a slot are single
 * configurations.
 */
struct ConfigFamily {
    std::string name;
    RationalMapSpec base;
    std::optional<ParamSlot> slot;

    bool has_parameter() const { return slot.has_value(); }
    //! Throws DomainError for s outside (0, 1), SpecError if the result is invalid.
    RationalMapSpec instantiate(double s) const;

    friend bool operator==(const ConfigFamily&, const ConfigFamily&) = default;
};

/*!
 * "imag1": f(w) = w (w^2 + s^2)/(s^2 w^2 + 1).
 * "unwrapped": f(w) = w, plus its images under w -> -w, 1/w and conj(w):
 * "unwrapped-neg", "unwrapped-inv", "unwrapped-neg-inv" and the same four
 * names with a "-conj" suffix. Unknown names throw LookupError.
 */
ConfigFamily builtin_family(std::string_view name);
std::vector<std::string> builtin_family_names();
//! The eight unwrapped configurations.
std::vector<ConfigFamily> unwrapped_variants();

struct SweepRow {
    std::optional<double> s;  //!< absent for parameterless families
    double energy = 0;
    double energy_err = 0;
    double scaled = 0;
    double lower = 0;
    double upper = 0;
    TopologicalInvariants invariants;
    //! Set when the energy quadrature ran out of budget; energy is then the best estimate.
    std::optional<std::string> error;
};

struct SweepOptions {
    double tol = 1e-8;     //!< relative quadrature tolerance
    unsigned threads = 1;  //!< worker cap; rows are ordered by input regardless
};

std::vector<SweepRow> sweep_energy(const ConfigFamily& family, const Prism& prism, double K,
                                   std::span<const double> s_values, const SweepOptions& opts = {});

enum class Classification {
    smooth,         //!< interior minimum
    edge_singular,  //!< energy keeps falling into the coalescence limit s -> 1
    lower_limit,    //!< minimum pinned at the s -> 0 end of the search interval
};

std::string_view to_string(Classification c);
Classification classification_from_string(std::string_view name);

struct FamilyMinimizeOptions {
    double energy_tol = 1e-9;  //!< relative quadrature tolerance per evaluation
    double s_tol = 1e-4;
    double delta = 1e-3;  //!< search interval is [delta, 1 - delta]
    std::size_t grid = 101;
};

struct FamilyMinimum {
    //! Search result over s; absent for parameterless families.
    std::optional<MinimizeResult> search;
    double min_scaled = 0;
    Classification classification = Classification::smooth;
    friend bool operator==(const FamilyMinimum&, const FamilyMinimum&) = default;
};

//! Minimizes the scaled energy over the family parameter and classifies the minimizer.
FamilyMinimum minimize_family(const ConfigFamily& family, const Prism& prism, double K,
                              const FamilyMinimizeOptions& opts = {});

}  // namespace lcpoly
