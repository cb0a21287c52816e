#include <doctest.h>

#include <cmath>
#include <vector>

#include "lcpoly/errors.hpp"
#include "lcpoly/sweep.hpp"

using namespace lcpoly;

namespace {

std::vector<double> grid(double lo, double hi, int steps)
{
    std::vector<double> s;
    for (int i = 0; i < steps; ++i)
        s.push_back(lo + (hi - lo) * i / (steps - 1));
    return s;
}

}  // namespace

TEST_CASE("builtin families")
{
    const auto names = builtin_family_names();
    CHECK(names.size() == 9);
    CHECK(names.front() == "imag1");
    for (const std::string& n : names)
        CHECK(builtin_family(n).name == n);
    CHECK_THROWS_AS(builtin_family("imag2"), LookupError);
    CHECK_THROWS_WITH(builtin_family("nope"), doctest::Contains("imag1"));

    const ConfigFamily f = builtin_family("imag1");
    CHECK(f.has_parameter());
    const RationalMapSpec spec = f.instantiate(0.3);
    REQUIRE(spec.imag_factors.size() == 1);
    CHECK(spec.imag_factors[0].position == 0.3);
    CHECK(spec.degree() == 3);
    CHECK_THROWS_AS(f.instantiate(0), DomainError);
    CHECK_THROWS_AS(f.instantiate(1), DomainError);
    CHECK_THROWS_AS(f.instantiate(-0.5), DomainError);
    CHECK_FALSE(builtin_family("unwrapped").has_parameter());
    CHECK(builtin_family("unwrapped").instantiate(7) == unwrapped_spec());
}

TEST_CASE("parameter slots")
{
    ConfigFamily f;
    f.name = "c";
    f.base.complex_factors = {{{0.3, 0.4}, 1}};
    f.slot = ParamSlot{ParamSlot::Kind::complex_im, 0};
    CHECK(f.instantiate(0.2).complex_factors[0].position == Complex{0.3, 0.2});
    f.slot = ParamSlot{ParamSlot::Kind::complex_re, 0};
    CHECK(f.instantiate(0.2).complex_factors[0].position == Complex{0.2, 0.4});
    // |t| >= 1 is not a valid spec.
    CHECK_THROWS_AS(f.instantiate(0.95), SpecError);
    f.slot = ParamSlot{ParamSlot::Kind::real, 0};
    CHECK_THROWS_AS(f.instantiate(0.5), SpecError);
}

TEST_CASE("sweep rows")
{
    const Prism cube = make_prism(1, 1, 1);
    const auto s = grid(0.1, 0.9, 9);
    const auto serial = sweep_energy(builtin_family("imag1"), cube, 1, s);
    SweepOptions par;
    par.threads = 4;
    const auto parallel = sweep_energy(builtin_family("imag1"), cube, 1, s, par);
    REQUIRE(serial.size() == s.size());
    REQUIRE(parallel.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(*serial[i].s == s[i]);
        CHECK(serial[i].energy == parallel[i].energy);
        CHECK(serial[i].energy_err == parallel[i].energy_err);
        CHECK_FALSE(serial[i].error.has_value());
        CHECK(serial[i].invariants.kinks == KinkNumbers{0, 0, -1});
        CHECK(serial[i].lower <= serial[i].energy);
        CHECK(serial[i].energy <= serial[i].upper);
        CHECK(serial[i].scaled == doctest::Approx(serial[i].energy));
    }
    CHECK_THROWS_AS(sweep_energy(builtin_family("imag1"), cube, 1, std::vector<double>{0.5, 1.0}), DomainError);
    CHECK_THROWS_AS(sweep_energy(builtin_family("imag1"), cube, 1, std::vector<double>{}), InvalidInput);

    const auto single = sweep_energy(builtin_family("unwrapped"), cube, 1, std::vector<double>{});
    REQUIRE(single.size() == 1);
    CHECK_FALSE(single[0].s.has_value());
    CHECK(single[0].energy == doctest::Approx(15.348248444887).epsilon(1e-9));
}

TEST_CASE("cube energy falls toward the coalescence limit")
{
    const Prism cube = make_prism(1, 1, 1);
    const auto rows = sweep_energy(builtin_family("imag1"), cube, 1, grid(0.5, 0.95, 10));
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i].scaled < rows[i - 1].scaled);
    const FamilyMinimum m = minimize_family(builtin_family("imag1"), cube, 1);
    CHECK(m.classification == Classification::edge_singular);
    REQUIRE(m.search.has_value());
    CHECK(m.search->at_boundary);
    CHECK(m.min_scaled < rows.back().scaled);
}

TEST_CASE("elongated prism has an interior minimum")
{
    const Prism p = make_prism(20, 10, 1);
    const FamilyMinimum m = minimize_family(builtin_family("imag1"), p, 1);
    CHECK(m.classification == Classification::smooth);
    REQUIRE(m.search.has_value());
    CHECK_FALSE(m.search->at_boundary);
    CHECK(m.search->argmin == doctest::Approx(0.5465).epsilon(2e-3));
    CHECK(m.min_scaled == doctest::Approx(45.0794).epsilon(1e-4));
    CHECK(m.min_scaled < scaled_energy(conformal_energy(p, builtin_family("imag1").instantiate(0.05), 1).value, p));
    CHECK(m.min_scaled < scaled_energy(conformal_energy(p, builtin_family("imag1").instantiate(0.95), 1).value, p));
}

TEST_CASE("minimum pinned at the lower end")
{
    ConfigFamily f;
    f.name = "real-pole";
    f.base.real_factors = {{0.5, -1}};
    f.slot = ParamSlot{ParamSlot::Kind::real, 0};
    const FamilyMinimum m = minimize_family(f, make_prism(1, 1, 1), 1);
    CHECK(m.classification == Classification::lower_limit);
    CHECK(m.search->argmin == doctest::Approx(1e-3));
}

TEST_CASE("parameterless minimization and option checks")
{
    const FamilyMinimum m = minimize_family(builtin_family("unwrapped-neg-inv"), make_prism(1, 1, 1), 1);
    CHECK_FALSE(m.search.has_value());
    CHECK(m.classification == Classification::smooth);
    CHECK(m.min_scaled == doctest::Approx(15.348248444887).epsilon(1e-8));
    FamilyMinimizeOptions bad;
    bad.delta = 0.6;
    CHECK_THROWS_AS(minimize_family(builtin_family("imag1"), make_prism(1, 1, 1), 1, bad), DomainError);
}

TEST_CASE("classification names")
{
    for (Classification c : {Classification::smooth, Classification::edge_singular, Classification::lower_limit})
        CHECK(classification_from_string(to_string(c)) == c);
    CHECK(to_string(Classification::edge_singular) == "edge-singular");
    CHECK_THROWS_AS(classification_from_string("singular"), LookupError);
}
