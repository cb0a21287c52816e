// Acceptance run: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lcpoly/diagnostics.hpp"
#include "lcpoly/energy.hpp"
#include "lcpoly/invariants.hpp"
#include "lcpoly/sweep.hpp"
#include "support.hpp"

using namespace lcpoly;

namespace {

constexpr double kPi = std::numbers::pi;

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            if (pass)
                detail << "failed: ";
            else
                detail << "; ";
            detail << what;
            pass = false;
        }
    }
};

struct Criterion {
    const char* id;
    const char* title;
    double budget_s;  // 0 means no runtime limit beyond "instant"
    std::function<void(Verdict&)> body;
};

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// The 50 specs shared by AC4 and AC5.
std::vector<RationalMapSpec> oracle_specs()
{
    std::mt19937_64 rng(20240504);
    std::vector<RationalMapSpec> specs;
    for (int i = 0; i < 50; ++i)
        specs.push_back(testing::random_spec(rng, 9));
    return specs;
}

void ac1(Verdict& v)
{
    const double lower = lower_bound_prism(make_prism(1, 1, 1), kPi / 2, 1);
    v.detail << "lower = " << lower;
    v.require(std::abs(lower - 4 * kPi) <= 1e-12 * 4 * kPi, "cube lower bound differs from 4 pi");
}

void ac2(Verdict& v)
{
    const Prism cube = make_prism(1, 1, 1);
    const double r = upper_bound_prism(cube, kPi / 2, 1) / lower_bound_prism(cube, kPi / 2, 1);
    v.require(rel_diff(r, std::sqrt(3.0)) <= 1e-12, "cube ratio differs from sqrt 3");
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> w(0.1, 10);
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
        const Prism p = testing::random_prism(rng);
        const double w0 = w(rng);
        const double axz = p.lx() / p.lz(), ayz = p.ly() / p.lz();
        const double ratio = upper_bound_prism(p, w0, 1) / lower_bound_prism(p, w0, 1);
        worst = std::max(worst, rel_diff(ratio, std::sqrt(axz * axz + ayz * ayz + 1)));
    }
    v.detail << "cube ratio = " << r << ", worst random deviation = " << worst;
    v.require(worst <= 1e-12, "random-prism ratio deviates");
}

void ac3(Verdict& v)
{
    const Prism cube = make_prism(1, 1, 1);
    const double closed = unwrapped_energy(cube, 1);
    const double quad = conformal_energy(cube, unwrapped_spec(), 1).value;
    const double ratio = closed / (4 * kPi);
    v.detail << "E = " << closed << ", E/4pi = " << ratio << ", quadrature rel diff = " << rel_diff(quad, closed);
    v.require(closed >= 15.25 && closed <= 15.45, "energy outside [15.25, 15.45]");
    v.require(ratio >= 1.21 && ratio <= 1.23, "E/4pi outside [1.21, 1.23]");
    v.require(rel_diff(quad, closed) <= 1e-4, "quadrature disagrees with the closed form");
}

void ac4(Verdict& v)
{
    std::vector<RationalMapSpec> specs{unwrapped_spec(), builtin_family("imag1").instantiate(0.5)};
    for (const RationalMapSpec& s : oracle_specs())
        specs.push_back(s);
    double worst = 0;
    for (const RationalMapSpec& s : specs)
        worst = std::max(worst, std::abs(numeric_trapped_area(s, 1e-7).value - trapped_area(s)));
    v.detail << specs.size() << " specs, worst |numeric - closed| = " << worst;
    v.require(rel_diff(numeric_trapped_area(specs[0], 1e-7).value, kPi / 2) < 1e-5, "unwrapped is not pi/2");
    v.require(rel_diff(numeric_trapped_area(specs[1], 1e-7).value, 3 * kPi / 2) < 1e-5, "imag1 is not 3 pi/2");
    v.require(worst <= 1e-5, "trapped area mismatch");
}

void ac5(Verdict& v)
{
    std::vector<RationalMapSpec> specs = oracle_specs();
    const RationalMapSpec imag1 = builtin_family("imag1").instantiate(0.5);
    specs.push_back(imag1);
    int mismatches = 0;
    for (const RationalMapSpec& s : specs) {
        if (!(numeric_kinks(s) == kink_numbers(s)))
            ++mismatches;
    }
    const int kz = kink_numbers(imag1).kz;
    v.detail << specs.size() << " specs, " << mismatches << " mismatches, imag1 kz = " << kz;
    v.require(mismatches == 0, "closed-form and winding kinks differ");
    v.require(std::abs(kz) == 1 && std::abs(numeric_kinks(imag1).kz) == 1, "imag1 |kz| != 1");
}

void ac6(Verdict& v)
{
    const ConfigFamily fam = builtin_family("imag1");
    std::vector<double> grid;
    for (int i = 0; i <= 9; ++i)
        grid.push_back(0.5 + 0.05 * i);
    SweepOptions opts;
    opts.threads = 4;

    const Prism cube = make_prism(1, 1, 1);
    const auto rows = sweep_energy(fam, cube, 1, grid, opts);
    bool decreasing = true;
    for (std::size_t i = 1; i < rows.size(); ++i)
        decreasing = decreasing && rows[i].scaled < rows[i - 1].scaled;
    const FamilyMinimum mc = minimize_family(fam, cube, 1);

    const Prism slab = make_prism(20, 10, 1);
    const auto srows = sweep_energy(fam, slab, 1, grid, opts);
    std::size_t arg = 0;
    for (std::size_t i = 1; i < srows.size(); ++i)
        if (srows[i].scaled < srows[arg].scaled)
            arg = i;
    const FamilyMinimum ms = minimize_family(fam, slab, 1);

    v.detail << "cube: decreasing=" << decreasing << ", class=" << to_string(mc.classification)
             << "; (20,10,1): grid argmin s=" << grid[arg] << ", min s=" << ms.search->argmin
             << ", class=" << to_string(ms.classification);
    v.require(decreasing, "cube scaled energy not strictly decreasing");
    v.require(mc.classification == Classification::edge_singular, "cube not edge-singular");
    v.require(arg != 0 && arg + 1 != srows.size(), "(20,10,1) grid minimum not interior");
    v.require(ms.classification == Classification::smooth, "(20,10,1) not smooth");
}

void ac7(Verdict& v)
{
    std::mt19937_64 rng(7);
    int violations = 0;
    double tightest = 1e300;
    for (int i = 0; i < 20; ++i) {
        const RationalMapSpec s = testing::random_spec(rng, 9);
        const Prism p = testing::random_prism(rng);
        const EnergyReport r = energy_report(p, s, {}, 1e-8);
        if (!(r.lower <= *r.exact + *r.exact_err && *r.exact - *r.exact_err <= r.upper))
            ++violations;
        tightest = std::min(tightest, *r.exact / r.lower);
    }
    v.detail << "20 pairs, " << violations << " violations, min exact/lower = " << tightest;
    v.require(violations == 0, "bound sandwich violated");
}

void ac8(Verdict& v)
{
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> w(-12, 12);
    double worst = 0;
    bool feasible = true;
    for (int i = 0; i < 10; ++i) {
        const Prism p = testing::random_prism(rng);
        const double w0 = w(rng);
        const LowerBoundCertificate c = lower_bound_lp(prism_vertex_data(p, w0), 1);
        feasible = feasible && c.feasible;
        worst = std::max(worst, rel_diff(c.objective, 8 * p.lz() * std::abs(w0)));
    }
    v.detail << "10 prisms, worst relative deviation = " << worst;
    v.require(feasible, "infeasible certificate");
    v.require(worst <= 1e-9, "LP optimum deviates from 8 K Lz |omega0|");
}

void ac9(Verdict& v)
{
    std::mt19937_64 rng(9);
    double worst = 0;
    for (int i = 0; i < 10; ++i) {
        const RationalMapSpec s = testing::random_spec(rng, 9);
        const Prism p = testing::random_prism(rng);
        worst = std::max(worst, check_field(s, p, 100, 900 + i).conformality);
    }
    v.detail << "1000 points, worst relative gap = " << worst;
    v.require(worst <= 1e-5, "(grad n)^2 != 2|D|");
}

void ac10(Verdict& v)
{
    std::mt19937_64 rng(10);
    double div = 0, div_abs = 0, exterior = 0;
    QuadOptions opts;
    opts.abs_tol = 1e-12;
    opts.rel_tol = 1e-11;
    for (int i = 0; i < 10; ++i) {
        const RationalMapSpec s = testing::random_spec(rng, 9);
        const Prism p = testing::random_prism(rng);
        const FieldCheck fc = check_field(s, p, 100, 1000 + i);
        div = std::max(div, fc.divergence);
        div_abs = std::max(div_abs, fc.divergence_abs);
        const RationalMap map(s);
        double total = 0, outside = 0;
        for (const OctantFace& f : p.octant().interior)
            total += face_flux(map, f, FluxWeight::unit, opts).value;
        for (const OctantFace& f : p.octant().exterior)
            outside += std::abs(face_flux(map, f, FluxWeight::unit, opts).value);
        exterior = std::max(exterior, outside / std::abs(total));
    }
    bool exact_sum = true;
    std::uniform_real_distribution<double> w(-20, 20);
    for (int i = 0; i < 100; ++i) {
        double sum = 0;
        for (const VertexArea& va : vertex_trapped_areas(testing::random_prism(rng), w(rng)))
            sum += va.omega;
        exact_sum = exact_sum && sum == 0.0;
    }
    v.detail << "max |div D| |r|/|D| = " << div << ", max |div D| = " << div_abs << ", max exterior/total flux = " << exterior
             << ", sum of vertex areas exactly 0: " << (exact_sum ? "yes" : "no");
    v.require(div <= 1e-5 && div_abs <= 1e-5, "divergence too large");
    v.require(exterior <= 1e-8, "exterior flux too large");
    v.require(exact_sum, "vertex trapped areas do not cancel");
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {"AC1", "cube lower bound is 4 pi", 1, ac1},
        {"AC2", "upper/lower ratio", 1, ac2},
        {"AC3", "unwrapped cube energy", 5, ac3},
        {"AC4", "degree oracle", 60, ac4},
        {"AC5", "kink oracle", 30, ac5},
        {"AC6", "sweep shapes", 120, ac6},
        {"AC7", "bound sandwich", 120, ac7},
        {"AC8", "LP agreement", 1, ac8},
        {"AC9", "conformality equality", 10, ac9},
        {"AC10", "conservation", 10, ac10},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        Verdict v;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(v);
        }
        catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream t;
        t << "runtime " << secs << " s exceeds " << c.budget_s << " s";
        v.require(secs <= c.budget_s, t.str());
        failures += v.pass ? 0 : 1;
        std::printf("[%s] %s: %s (%s; %.2f s)\n", v.pass ? "PASS" : "FAIL", c.id, c.title,
                    v.detail.str().c_str(), secs);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
