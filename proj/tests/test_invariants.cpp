#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "lcpoly/errors.hpp"
#include "lcpoly/invariants.hpp"
#include "lcpoly/sweep.hpp"
#include "support.hpp"

using namespace lcpoly;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("unwrapped configuration")
{
    const TopologicalInvariants inv = invariants_of(unwrapped_spec());
    CHECK(inv.edges == EdgeOrientations{1, 1, 1});
    CHECK(inv.kinks == KinkNumbers{0, 0, 0});
    CHECK(inv.omega0 == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(inv.omega_min == doctest::Approx(kPi / 2).epsilon(1e-15));
}

TEST_CASE("imag1 carries a single z kink")
{
    for (double s : {0.1, 0.5, 0.9}) {
        const RationalMapSpec spec = builtin_family("imag1").instantiate(s);
        const TopologicalInvariants inv = invariants_of(spec);
        CHECK(inv.edges == EdgeOrientations{1, -1, 1});
        CHECK(inv.kinks == KinkNumbers{0, 0, -1});
        CHECK(std::abs(inv.kinks.kz) == 1);
        CHECK(inv.omega0 == doctest::Approx(3 * kPi / 2));
        CHECK(inv.omega_min == doctest::Approx(2 * kPi * 1.25));
        CHECK(numeric_kinks(spec) == inv.kinks);
    }
}

TEST_CASE("unwrapped variants")
{
    for (const ConfigFamily& f : unwrapped_variants()) {
        CAPTURE(f.name);
        const TopologicalInvariants inv = invariants_of(f.base);
        CHECK(inv.kinks == KinkNumbers{0, 0, 0});
        CHECK(std::abs(inv.omega0) == doctest::Approx(kPi / 2));
        CHECK(inv.omega0 * f.base.orientation_sign() > 0);
        CHECK(inv.edges.ex == f.base.epsilon);
        CHECK(inv.edges.ez == (f.base.n > 0 ? 1 : -1));
        CHECK(sampled_edge_orientations(f.base) == inv.edges);
        CHECK(numeric_kinks(f.base) == inv.kinks);
    }
}

TEST_CASE("trapped area counts the degree")
{
    RationalMapSpec s;
    s.n = -5;
    s.real_factors = {{0.3, 1}};
    s.imag_factors = {{0.4, -1}, {0.7, 1}};
    s.complex_factors = {{{0.3, 0.5}, 1}};
    CHECK(trapped_area(s) == doctest::Approx((5 + 6 + 4) * kPi / 2));
    s.orientation = Orientation::anticonformal;
    CHECK(trapped_area(s) == doctest::Approx(-(5 + 6 + 4) * kPi / 2));
}

TEST_CASE("closed forms ignore the listing order of axis factors")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        RationalMapSpec spec = testing::random_spec(rng);
        const KinkNumbers k = kink_numbers(spec);
        std::reverse(spec.real_factors.begin(), spec.real_factors.end());
        std::reverse(spec.imag_factors.begin(), spec.imag_factors.end());
        CHECK(kink_numbers(spec) == k);
    }
}

TEST_CASE("closed forms agree with the numerical oracles on random specs")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 15; ++trial) {
        const RationalMapSpec spec = testing::random_spec(rng);
        const InvariantsReport r = check_invariants(spec, 1e-8);
        CAPTURE(trial);
        CHECK(r.closed.kinks == r.kinks_numeric);
        CHECK(r.closed.edges == r.edges_sampled);
        CHECK(std::abs(r.closed.omega0 - r.omega0_numeric.value) <= 1e-6);
        CHECK(r.consistent(1e-6));
        CHECK(r.degree == spec.degree());
    }
}

TEST_CASE("a single reversed sign changes the kink number")
{
    RationalMapSpec spec;
    spec.real_factors = {{0.3, 1}, {0.6, 1}};
    const KinkNumbers base = kink_numbers(spec);
    CHECK(numeric_kinks(spec) == base);
    spec.real_factors[1].sign = -1;
    const KinkNumbers flipped = kink_numbers(spec);
    CHECK(numeric_kinks(spec) == flipped);
    CHECK_FALSE(flipped == base);
}

TEST_CASE("anticonformal kinks")
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        RationalMapSpec spec = testing::random_spec(rng, 7);
        spec.orientation = Orientation::conformal;
        const KinkNumbers c = kink_numbers(spec);
        spec.orientation = Orientation::anticonformal;
        const KinkNumbers a = kink_numbers(spec);
        CHECK(a.kx == -c.kx);
        CHECK(a.ky == c.ky);
        CHECK(a.kz == -c.kz);
        CHECK(numeric_kinks(spec) == a);
    }
}

TEST_CASE("numeric trapped area rejects a bad tolerance")
{
    CHECK_THROWS_AS(numeric_trapped_area(unwrapped_spec(), 0), DomainError);
    CHECK_THROWS_AS(numeric_trapped_area(unwrapped_spec(), -1), DomainError);
}

TEST_CASE("omega_min")
{
    CHECK(omega_min(KinkNumbers{1, -2, 0}) == doctest::Approx(2 * kPi * 3.25));
    CHECK(omega_min(KinkNumbers{}) == doctest::Approx(kPi / 2));
}

TEST_CASE("winding oracle resolves a pole with a tiny residue on the path")
{
    // f ~ 1e-5 w^5 near the imaginary-axis pole at 0.1117i: the director
    // turns through 2 pi within ~1e-5 of arc, narrower than a uniform step.
    RationalMapSpec spec;
    spec.epsilon = -1;
    spec.n = 5;
    spec.imag_factors = {{0.11166711024512348, -1}, {0.2648623154616955, 1}};
    CHECK(kink_numbers(spec) == KinkNumbers{1, 0, -1});
    CHECK(numeric_kinks(spec) == kink_numbers(spec));
}

TEST_CASE("winding oracle near the ends of the imag1 family")
{
    for (double s : {1e-3, 0.999, 1 - 1e-9}) {
        CAPTURE(s);
        const RationalMapSpec spec = builtin_family("imag1").instantiate(s);
        CHECK(numeric_kinks(spec) == kink_numbers(spec));
    }
}
