#include <doctest.h>

#include <cmath>
#include <random>

#include "lcpoly/errors.hpp"
#include "lcpoly/geometry.hpp"
#include "support.hpp"

using namespace lcpoly;

TEST_CASE("make_prism validates sides and ordering")
{
    CHECK_NOTHROW(make_prism(3, 2, 1));
    CHECK_NOTHROW(make_prism(1, 1, 1));
    CHECK_THROWS_AS(make_prism(0, 1, 1), InvalidDimension);
    CHECK_THROWS_AS(make_prism(2, 1, -1), InvalidDimension);
    CHECK_THROWS_AS(make_prism(NAN, 1, 1), InvalidDimension);
    CHECK_THROWS_AS(make_prism(INFINITY, 1, 1), InvalidDimension);
    CHECK_THROWS_AS(make_prism(1, 2, 1), OrderingError);
    CHECK_THROWS_AS(make_prism(1, 1, 2), OrderingError);
    CHECK_THROWS_WITH_AS(make_prism(1, 3, 2), doctest::Contains("3,2,1"), OrderingError);
}

TEST_CASE("vertices, parity and edges of a prism")
{
    const Prism p = make_prism(4, 2, 1);
    CHECK(p.volume() == doctest::Approx(8));
    CHECK(p.aspect(0, 2) == 4);
    CHECK(p.half_diagonal() == doctest::Approx(0.5 * std::sqrt(21.0)));

    int parity_sum = 0;
    for (unsigned bits = 0; bits < 8; ++bits) {
        const PrismVertex& v = p.vertex(bits);
        CHECK(v.bits == bits);
        for (int axis = 0; axis < 3; ++axis)
            CHECK(v.coords[axis] == ((bits >> axis) & 1u ? p.length(axis) : 0.0));
        const int flips = static_cast<int>((bits & 1u) + ((bits >> 1) & 1u) + ((bits >> 2) & 1u));
        CHECK(v.parity == (flips % 2 == 0 ? 1 : -1));
        parity_sum += v.parity;
    }
    CHECK(parity_sum == 0);

    const auto edges = p.edges();
    double total = 0;
    for (const auto& [a, b] : edges) {
        CHECK(a < b);
        const auto len = edge_length(p, p.vertex(a), p.vertex(b));
        REQUIRE(len.has_value());
        total += *len;
        // Adjacent vertices differ in exactly one coordinate and have opposite parity.
        CHECK(p.vertex(a).parity == -p.vertex(b).parity);
    }
    CHECK(total == doctest::Approx(4 * (4 + 2 + 1)));
}

TEST_CASE("edge_length rejects non-adjacent and foreign vertices")
{
    const Prism p = make_prism(3, 2, 1);
    CHECK_FALSE(edge_length(p, p.vertex(0), p.vertex(3)).has_value());
    CHECK_FALSE(edge_length(p, p.vertex(0), p.vertex(7)).has_value());
    CHECK_FALSE(edge_length(p, p.vertex(5), p.vertex(5)).has_value());
    CHECK(*edge_length(p, p.vertex(0), p.vertex(4)) == 1);

    PrismVertex stranger = p.vertex(1);
    stranger.coords.x = 2.5;
    CHECK_THROWS_AS((void)edge_length(p, p.vertex(0), stranger), DomainError);
}

TEST_CASE("octant faces")
{
    const Prism p = make_prism(6, 4, 2);
    const Octant o = p.octant();
    CHECK(o.half == Vec3{3, 2, 1});
    for (int axis = 0; axis < 3; ++axis) {
        const OctantFace& in = o.interior[axis];
        const OctantFace& ex = o.exterior[axis];
        CHECK(in.axis == axis);
        CHECK(in.interior);
        CHECK_FALSE(ex.interior);
        CHECK(in.offset == o.half[axis]);
        CHECK(ex.offset == 0);
        CHECK(in.outward_normal()[axis] == 1);
        CHECK(ex.outward_normal()[axis] == -1);
        CHECK(in.free_axes[0] == (axis + 1) % 3);
        CHECK(in.free_axes[1] == (axis + 2) % 3);
        CHECK(in.area() == doctest::Approx(o.half[in.free_axes[0]] * o.half[in.free_axes[1]]));
    }
    CHECK(o.contains({1, 1, 1}));
    CHECK(o.contains({3, 2, 1}));
    CHECK_FALSE(o.contains({3.1, 1, 1}));
    CHECK_FALSE(o.contains({-0.1, 1, 1}));
}

TEST_CASE("vertex trapped areas sum to zero exactly")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> omega(-20, 20);
    for (int trial = 0; trial < 50; ++trial) {
        const Prism p = testing::random_prism(rng);
        const double w0 = omega(rng);
        const auto areas = vertex_trapped_areas(p, w0);
        double sum = 0;
        for (const VertexArea& va : areas) {
            CHECK(va.omega == va.vertex.parity * w0);
            sum += va.omega;
        }
        CHECK(sum == 0.0);
    }
    CHECK(vertex_trapped_areas(make_prism(1, 1, 1), 1.0)[0].omega == 1.0);
}
