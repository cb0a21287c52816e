#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "lcpoly/conformal.hpp"
#include "lcpoly/geometry.hpp"

namespace lcpoly::testing {

// Draws `count` positions in [lo, hi] at least `gap` apart.
inline std::vector<double> spaced_positions(std::mt19937_64& rng, std::size_t count, double lo,
                                            double hi, double gap)
{
    std::uniform_real_distribution<double> u(lo, hi);
    for (;;) {
        std::vector<double> v(count);
        for (double& x : v)
            x = u(rng);
        std::sort(v.begin(), v.end());
        bool ok = true;
        for (std::size_t i = 1; i < v.size(); ++i)
            ok = ok && v[i] - v[i - 1] >= gap;
        if (ok)
            return v;
    }
}

// Random valid spec of degree <= max_degree with both orientations, both
// signs of epsilon and n, and factor positions kept apart.
inline RationalMapSpec random_spec(std::mt19937_64& rng, int max_degree = 9)
{
    std::uniform_int_distribution<int> coin(0, 1);
    auto sign = [&] { return coin(rng) ? 1 : -1; };

    RationalMapSpec spec;
    spec.epsilon = sign();
    const int abs_n = 2 * std::uniform_int_distribution<int>(0, (max_degree - 1) / 4)(rng) + 1;
    spec.n = sign() * abs_n;
    spec.orientation = coin(rng) ? Orientation::conformal : Orientation::anticonformal;

    int budget = max_degree - abs_n;
    const int c = budget >= 4 ? std::uniform_int_distribution<int>(0, std::min(1, budget / 4))(rng) : 0;
    budget -= 4 * c;
    const int ab = std::uniform_int_distribution<int>(0, budget / 2)(rng);
    const int a = std::uniform_int_distribution<int>(0, ab)(rng);
    const int b = ab - a;

    for (double x : spaced_positions(rng, static_cast<std::size_t>(a), 0.1, 0.9, 0.08))
        spec.real_factors.push_back({x, sign()});
    for (double x : spaced_positions(rng, static_cast<std::size_t>(b), 0.1, 0.9, 0.08))
        spec.imag_factors.push_back({x, sign()});
    std::uniform_real_distribution<double> part(0.15, 0.6);
    for (int l = 0; l < c; ++l)
        spec.complex_factors.push_back({{part(rng), part(rng)}, sign()});
    std::shuffle(spec.real_factors.begin(), spec.real_factors.end(), rng);
    std::shuffle(spec.imag_factors.begin(), spec.imag_factors.end(), rng);
    return spec;
}

// Random ordered prism with sides in [0.2, 5].
inline Prism random_prism(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> side(0.2, 5.0);
    double l[3] = {side(rng), side(rng), side(rng)};
    std::sort(l, l + 3, [](double x, double y) { return x > y; });
    return make_prism(l[0], l[1], l[2]);
}

}  // namespace lcpoly::testing
