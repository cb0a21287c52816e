#include "lcpoly/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lcpoly/errors.hpp"

namespace lcpoly {
namespace {

// Strict inequalities are enforced with this margin.
constexpr double kStrictTol = 1e-12;

// Value/derivative pair for product-rule accumulation.
struct Jet {
    Complex v;
    Complex d;

    void mul(Complex g, Complex dg)
    {
        d = d * g + v * dg;
        v *= g;
    }
};

Complex ipow(Complex w, int m)
{
    Complex r{1.0, 0.0};
    for (int i = 0; i < m; ++i)
        r *= w;
    return r;
}

std::string describe(const char* group, std::size_t index)
{
    std::ostringstream os;
    os << group << "[" << index << "]";
    return os.str();
}

void check_sign(int sign, const std::string& where)
{
    if (sign != 1 && sign != -1)
        throw SpecError(where + ": sign must be +1 (zero) or -1 (pole)");
}

void check_modulus(double m, const std::string& where)
{
    if (!std::isfinite(m) || !(m > kStrictTol) || !(m < 1 - kStrictTol)) {
        std::ostringstream os;
        os << where << ": modulus " << m << " must lie strictly inside (0,1)";
        throw SpecError(os.str());
    }
}

}  // namespace

int RationalMapSpec::degree() const
{
    return std::abs(n) + 2 * static_cast<int>(real_factors.size() + imag_factors.size())
           + 4 * static_cast<int>(complex_factors.size());
}

bool operator==(const AxisFactor& a, const AxisFactor& b)
{
    return a.position == b.position && a.sign == b.sign;
}

bool operator==(const ComplexFactor& a, const ComplexFactor& b)
{
    return a.position == b.position && a.sign == b.sign;
}

bool operator==(const RationalMapSpec& a, const RationalMapSpec& b)
{
    return a.epsilon == b.epsilon && a.n == b.n && a.real_factors == b.real_factors
           && a.imag_factors == b.imag_factors && a.complex_factors == b.complex_factors
           && a.orientation == b.orientation;
}

void validate(const RationalMapSpec& spec)
{
    if (spec.epsilon != 1 && spec.epsilon != -1)
        throw SpecError("epsilon must be +1 or -1");
    if (spec.n % 2 == 0)
        throw SpecError("n must be odd (got " + std::to_string(spec.n) + ")");
    for (std::size_t j = 0; j < spec.real_factors.size(); ++j) {
        auto where = describe("real", j);
        check_modulus(spec.real_factors[j].position, where);
        check_sign(spec.real_factors[j].sign, where);
    }
    for (std::size_t k = 0; k < spec.imag_factors.size(); ++k) {
        auto where = describe("imag", k);
        check_modulus(spec.imag_factors[k].position, where);
        check_sign(spec.imag_factors[k].sign, where);
    }
    for (std::size_t l = 0; l < spec.complex_factors.size(); ++l) {
        auto where = describe("complex", l);
        const Complex t = spec.complex_factors[l].position;
        if (!std::isfinite(t.real()) || !std::isfinite(t.imag()))
            throw SpecError(where + ": position must be finite");
        check_modulus(std::abs(t), where);
        if (std::abs(t.real()) <= kStrictTol || std::abs(t.imag()) <= kStrictTol)
            throw SpecError(where + ": position must lie strictly off both axes");
        check_sign(spec.complex_factors[l].sign, where);
    }
}

RationalMapSpec unwrapped_spec()
{
    return RationalMapSpec{};
}

ExtendedComplex HomogeneousValue::value() const
{
    if (q == Complex{0, 0})
        return ExtendedComplex::infinity();
    return p / q;
}

RationalMap::RationalMap(RationalMapSpec spec) : spec_(std::move(spec))
{
    validate(spec_);
}

ExtendedComplex RationalMap::oriented(ExtendedComplex w) const
{
    if (spec_.orientation == Orientation::anticonformal && !w.is_infinite())
        return std::conj(w.value());
    return w;
}

HomogeneousValue RationalMap::eval_inner(Complex w) const
{
    Jet p{Complex(spec_.epsilon), 0.0};
    Jet q{1.0, 0.0};

    const int m = std::abs(spec_.n);
    const Complex wm = ipow(w, m);
    const Complex dwm = static_cast<double>(m) * ipow(w, m - 1);
    (spec_.n > 0 ? p : q).mul(wm, dwm);

    const Complex w2 = w * w;
    auto apply = [&](Complex num, Complex dnum, Complex den, Complex dden, int sign) {
        if (sign > 0) {
            p.mul(num, dnum);
            q.mul(den, dden);
        }
        else {
            p.mul(den, dden);
            q.mul(num, dnum);
        }
    };

    for (const AxisFactor& f : spec_.real_factors) {
        const double r2 = f.position * f.position;
        apply(w2 - r2, 2.0 * w, r2 * w2 - 1.0, 2.0 * r2 * w, f.sign);
    }
    for (const AxisFactor& f : spec_.imag_factors) {
        const double s2 = f.position * f.position;
        apply(w2 + s2, 2.0 * w, s2 * w2 + 1.0, 2.0 * s2 * w, f.sign);
    }
    for (const ComplexFactor& f : spec_.complex_factors) {
        // (w^2 - t^2)(w^2 - tbar^2) = w^4 - 2 Re(t^2) w^2 + |t|^4
        const Complex t2 = f.position * f.position;
        const double c = 2.0 * t2.real();
        const double m4 = std::norm(t2);
        const Complex w4 = w2 * w2;
        apply(w4 - c * w2 + m4, 4.0 * w2 * w - 2.0 * c * w,
              m4 * w4 - c * w2 + 1.0, 4.0 * m4 * w2 * w - 2.0 * c * w, f.sign);
    }
    return {p.v, q.v, p.d, q.d};
}

HomogeneousValue RationalMap::eval(ExtendedComplex w) const
{
    w = oriented(w);
    if (!w.is_infinite() && std::abs(w.value()) <= 1.0)
        return eval_inner(w.value());

    // f(w) = 1/f(u) with u = 1/w; d/dw = -u^2 d/du.
    const Complex u = w.is_infinite() ? Complex{0, 0} : 1.0 / w.value();
    const HomogeneousValue h = eval_inner(u);
    const Complex u2 = u * u;
    return {h.q, h.p, -u2 * h.dq, -u2 * h.dp};
}

double RationalMap::spherical_density(ExtendedComplex w) const
{
    w = oriented(w);
    // Pointwise invariant under w -> 1/w, so evaluate inside the unit disc.
    Complex u;
    if (w.is_infinite())
        u = 0.0;
    else
        u = std::abs(w.value()) <= 1.0 ? w.value() : 1.0 / w.value();
    const HomogeneousValue h = eval_inner(u);
    const double scale = std::max(std::abs(h.p), std::abs(h.q));
    const Complex p = h.p / scale, q = h.q / scale;
    const Complex dp = h.dp / scale, dq = h.dq / scale;
    const double s = std::norm(p) + std::norm(q);
    const double jac = 1.0 + std::norm(u);
    return std::norm(dp * q - p * dq) * jac * jac / (s * s);
}

double RationalMap::area_density(ExtendedComplex w) const
{
    if (w.is_infinite())
        return 0.0;
    const double jac = 1.0 + std::norm(w.value());
    return 4.0 * spherical_density(w) / (jac * jac);
}

Vec3 RationalMap::director(Vec3 r) const
{
    if (r == Vec3{})
        throw UndefinedAtVertex("director is undefined at the vertex r = 0");
    const HomogeneousValue h = eval(project_direction(r));
    return stereo_lift(h.p, h.q);
}

Vec3 RationalMap::flux(Vec3 r) const
{
    if (r == Vec3{})
        throw UndefinedAtVertex("flux field is undefined at the vertex r = 0");
    const double len = norm(r);
    const double d = spherical_density(project_direction(r));
    return (spec_.orientation_sign() * d / (len * len * len)) * r;
}

HomogeneousValue eval_f(const RationalMapSpec& spec, ExtendedComplex w)
{
    return RationalMap(spec).eval(w);
}

Vec3 stereo_lift(Complex p, Complex q)
{
    const double scale = std::max(std::abs(p), std::abs(q));
    p /= scale;
    q /= scale;
    const Complex pq = p * std::conj(q);
    const double s = std::norm(p) + std::norm(q);
    return Vec3{2.0 * pq.real(), 2.0 * pq.imag(), std::norm(q) - std::norm(p)} / s;
}

Vec3 stereo_lift(ExtendedComplex w)
{
    if (w.is_infinite())
        return {0, 0, -1};
    return stereo_lift(w.value(), Complex{1.0, 0.0});
}

ExtendedComplex stereo_project(Vec3 e)
{
    if (!(std::abs(norm(e) - 1.0) <= 1e-9)) {
        std::ostringstream os;
        os << "stereographic projection needs a unit vector (|e| = " << norm(e) << ")";
        throw NormalizationError(os.str());
    }
    return project_direction(e);
}

ExtendedComplex project_direction(Vec3 r)
{
    const double len = norm(r);
    if (r.z >= 0)
        return Complex(r.x, r.y) / (len + r.z);
    // (x+iy)/(len+z) = (len-z)/(x-iy); the second form is accurate near -z.
    const Complex den(r.x, -r.y);
    if (den == Complex{0, 0})
        return ExtendedComplex::infinity();
    return (len - r.z) / den;
}

Vec3 director(const RationalMapSpec& spec, Vec3 r)
{
    return RationalMap(spec).director(r);
}

double area_density(const RationalMapSpec& spec, ExtendedComplex w)
{
    return RationalMap(spec).area_density(w);
}

Vec3 flux_field(const RationalMapSpec& spec, Vec3 r)
{
    return RationalMap(spec).flux(r);
}

DirectorSample sample_director(const RationalMap& map, Vec3 r)
{
    DirectorSample s;
    s.position = r;
    s.n = map.director(r);
    s.D = map.flux(r);
    s.density = map.area_density(project_direction(r));
    return s;
}

}  // namespace lcpoly
