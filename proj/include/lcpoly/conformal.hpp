#pragma once

#include <complex>
#include <vector>

#include "lcpoly/vec3.hpp"

namespace lcpoly {

using Complex = std::complex<double>;

//! A point of the extended complex plane.
class ExtendedComplex {
  public:
    ExtendedComplex() = default;
    ExtendedComplex(Complex z) : z_(z) {}  // NOLINT: implicit by intent
    ExtendedComplex(double x) : z_(x) {}   // NOLINT

    static ExtendedComplex infinity()
    {
        ExtendedComplex e;
        e.infinite_ = true;
        return e;
    }

    bool is_infinite() const { return infinite_; }
    //! Finite value; meaningless when is_infinite().
    Complex value() const { return z_; }

  private:
    Complex z_{0.0, 0.0};
    bool infinite_ = false;
};

enum class Orientation { conformal, anticonformal };

//! Zero (sign +1) or pole (sign -1) pair +-x on the real axis, or +-i*x on
//! the imaginary axis, together with its reciprocal partner.
struct AxisFactor {
    double position = 0;
    int sign = 1;
};

//! Zero or pole quartet +-t, +-conj(t) with reciprocal partners.
struct ComplexFactor {
    Complex position;
    int sign = 1;
};

/*!
 * Discrete and continuous data of a rational map obeying tangent boundary
 * conditions on the quarter disc:
 *
 *   f(w) = eps w^n prod_j R_j(w)^rho_j prod_k I_k(w)^sigma_k prod_l C_l(w)^tau_l
 *
 * with R(w) = (w^2 - r^2)/(r^2 w^2 - 1), I(w) = (w^2 + s^2)/(s^2 w^2 + 1)
 * and C(w) = (w^2 - t^2)(w^2 - tbar^2)/((t^2 w^2 - 1)(tbar^2 w^2 - 1)).
 * Anticonformal maps evaluate f at conj(w).
 */
struct RationalMapSpec {
    int epsilon = 1;
    int n = 1;
    std::vector<AxisFactor> real_factors;
    std::vector<AxisFactor> imag_factors;
    std::vector<ComplexFactor> complex_factors;
    Orientation orientation = Orientation::conformal;

    //! Degree of f as a map of the Riemann sphere: |n| + 2(a+b) + 4c.
    int degree() const;
    //! +1 for conformal, -1 for anticonformal.
    int orientation_sign() const
    {
        return orientation == Orientation::conformal ? 1 : -1;
    }

    friend bool operator==(const RationalMapSpec&, const RationalMapSpec&);
};

bool operator==(const AxisFactor&, const AxisFactor&);
bool operator==(const ComplexFactor&, const ComplexFactor&);

//! Throws SpecError unless the spec satisfies every structural constraint.
void validate(const RationalMapSpec& spec);

//! f(w) = w
RationalMapSpec unwrapped_spec();

//! Projective value f = p/q together with the derivatives dp/dw, dq/dw.
struct HomogeneousValue {
    Complex p;
    Complex q;
    Complex dp;
    Complex dq;

    ExtendedComplex value() const;
};

/*!
 * Validated, evaluation-ready rational map.
 *
 * All evaluation is projective. Points with |w| > 1 (and infinity) are
 * handled through f(w) = 1/f(1/w), so nothing overflows near poles or at
 * infinity.
 */
class RationalMap {
  public:
    explicit RationalMap(RationalMapSpec spec);

    const RationalMapSpec& spec() const { return spec_; }

    HomogeneousValue eval(ExtendedComplex w) const;

    //! 4|f'|^2/(1+|f|^2)^2, the pulled-back area density in the w-plane.
    double area_density(ExtendedComplex w) const;

    //! Area magnification of the induced sphere map, A (1+|w|^2)^2 / 4.
    //! Invariant under w -> 1/w pointwise.
    double spherical_density(ExtendedComplex w) const;

    //! Director n(r); throws UndefinedAtVertex at the origin.
    Vec3 director(Vec3 r) const;

    //! Topological flux density D(r), radial with magnitude d(r^)/|r|^2.
    Vec3 flux(Vec3 r) const;

  private:
    // Evaluation at |w| <= 1 after any conjugation.
    HomogeneousValue eval_inner(Complex w) const;
    // Effective argument after orientation handling.
    ExtendedComplex oriented(ExtendedComplex w) const;

    RationalMapSpec spec_;
};

HomogeneousValue eval_f(const RationalMapSpec& spec, ExtendedComplex w);

//! Inverse stereographic projection w -> unit vector, (ex + i ey)/(1 + ez) = w.
Vec3 stereo_lift(ExtendedComplex w);
//! Lift of a projective pair p/q without forming the quotient.
Vec3 stereo_lift(Complex p, Complex q);
//! Throws NormalizationError if |e| differs from 1 by more than 1e-9.
ExtendedComplex stereo_project(Vec3 e);
//! Stereographic image of the direction of r (r need not be unit).
ExtendedComplex project_direction(Vec3 r);

Vec3 director(const RationalMapSpec& spec, Vec3 r);
double area_density(const RationalMapSpec& spec, ExtendedComplex w);
Vec3 flux_field(const RationalMapSpec& spec, Vec3 r);

struct DirectorSample {
    Vec3 position;
    Vec3 n;
    Vec3 D;
    double density = 0;  //!< A at the projected w
};

DirectorSample sample_director(const RationalMap& map, Vec3 r);

}  // namespace lcpoly
