#include "lcpoly/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "lcpoly/errors.hpp"

namespace lcpoly {
namespace {

// 15-point Kronrod abscissae on [-1,1] (positive half, descending) and
// weights. Odd entries (1,3,5) and the centre are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Rule {
    std::array<double, 15> node{};    // on [-1,1], ascending
    std::array<double, 15> kronrod{};
    std::array<double, 15> gauss{};   // zero off the Gauss subset
};

constexpr Rule make_rule()
{
    Rule r;
    for (int i = 0; i < 7; ++i) {
        r.node[i] = -kXgk[i];
        r.node[14 - i] = kXgk[i];
        r.kronrod[i] = r.kronrod[14 - i] = kWgk[i];
        if (i % 2 == 1)
            r.gauss[i] = r.gauss[14 - i] = kWg[i / 2];
    }
    r.node[7] = 0.0;
    r.kronrod[7] = kWgk[7];
    r.gauss[7] = kWg[3];
    return r;
}

constexpr Rule kRule = make_rule();

double checked(double v, double x, double y)
{
    if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "integrand is not finite at (" << x << ", " << y << ")";
        throw EvaluationError(os.str());
    }
    return v;
}

template<class Cell>
struct ByError {
    bool operator()(const Cell& a, const Cell& b) const
    {
        if (a.error != b.error)
            return a.error < b.error;
        return a.serial > b.serial;
    }
};

// Shared driver. Cell must expose value, error, serial; `split` returns the
// two children of a cell.
template<class Cell, class Eval, class Split>
QuadratureResult adapt(Cell root, Eval&& eval, Split&& split, std::size_t evals_per_cell,
                       const QuadOptions& opts, const char* what)
{
    std::vector<Cell> heap;
    std::size_t serial = 0;
    std::size_t evals = 0;
    auto push = [&](Cell c) {
        c.serial = serial++;
        eval(c);
        evals += evals_per_cell;
        heap.push_back(c);
        std::push_heap(heap.begin(), heap.end(), ByError<Cell>{});
    };
    push(root);

    for (;;) {
        // Summation in heap order is deterministic for fixed input.
        double value = 0, error = 0;
        for (const Cell& c : heap) {
            value += c.value;
            error += c.error;
        }
        if (error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(value)))
            return {value, error, evals};
        if (evals + 2 * evals_per_cell > opts.max_evals) {
            std::ostringstream os;
            os << what << ": evaluation budget of " << opts.max_evals
               << " exhausted (estimate " << value << " +- " << error << ")";
            throw AccuracyError(os.str(), value, error);
        }
        std::pop_heap(heap.begin(), heap.end(), ByError<Cell>{});
        Cell worst = heap.back();
        heap.pop_back();
        auto [a, b] = split(worst);
        push(a);
        push(b);
    }
}

struct Cell1 {
    Interval iv;
    double value = 0;
    double error = 0;
    std::size_t serial = 0;
};

struct Cell2 {
    Rect rect;
    double value = 0;
    double error = 0;
    std::size_t serial = 0;
};

}  // namespace

QuadratureResult quad1d(const Integrand1d& f, Interval domain, const QuadOptions& opts)
{
    auto eval = [&](Cell1& c) {
        const double half = 0.5 * (c.iv.hi - c.iv.lo);
        const double mid = 0.5 * (c.iv.hi + c.iv.lo);
        double k = 0, g = 0;
        for (int i = 0; i < 15; ++i) {
            const double x = mid + half * kRule.node[i];
            const double v = checked(f(x), x, 0.0);
            k += kRule.kronrod[i] * v;
            g += kRule.gauss[i] * v;
        }
        c.value = k * half;
        c.error = std::abs(k - g) * half;
    };
    auto split = [](const Cell1& c) {
        const double mid = 0.5 * (c.iv.lo + c.iv.hi);
        return std::pair{Cell1{{c.iv.lo, mid}}, Cell1{{mid, c.iv.hi}}};
    };
    return adapt(Cell1{domain}, eval, split, 15, opts, "quad1d");
}

QuadratureResult quad2d(const Integrand2d& f, Rect domain, const QuadOptions& opts)
{
    auto eval = [&](Cell2& c) {
        const double hx = 0.5 * (c.rect.x.hi - c.rect.x.lo);
        const double mx = 0.5 * (c.rect.x.hi + c.rect.x.lo);
        const double hy = 0.5 * (c.rect.y.hi - c.rect.y.lo);
        const double my = 0.5 * (c.rect.y.hi + c.rect.y.lo);
        double k = 0, g = 0;
        for (int i = 0; i < 15; ++i) {
            const double x = mx + hx * kRule.node[i];
            double ki = 0, gi = 0;
            for (int j = 0; j < 15; ++j) {
                const double y = my + hy * kRule.node[j];
                const double v = checked(f(x, y), x, y);
                ki += kRule.kronrod[j] * v;
                gi += kRule.gauss[j] * v;
            }
            k += kRule.kronrod[i] * ki;
            g += kRule.gauss[i] * gi;
        }
        c.value = k * hx * hy;
        c.error = std::abs(k - g) * hx * hy;
    };
    auto split = [](const Cell2& c) {
        Cell2 a{c.rect}, b{c.rect};
        if (c.rect.x.hi - c.rect.x.lo >= c.rect.y.hi - c.rect.y.lo) {
            const double mid = 0.5 * (c.rect.x.lo + c.rect.x.hi);
            a.rect.x.hi = mid;
            b.rect.x.lo = mid;
        }
        else {
            const double mid = 0.5 * (c.rect.y.lo + c.rect.y.hi);
            a.rect.y.hi = mid;
            b.rect.y.lo = mid;
        }
        return std::pair{a, b};
    };
    return adapt(Cell2{domain}, eval, split, 225, opts, "quad2d");
}

}  // namespace lcpoly
