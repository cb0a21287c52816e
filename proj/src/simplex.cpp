#include "lcpoly/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lcpoly/errors.hpp"

namespace lcpoly {
namespace {

constexpr double kEps = 1e-11;

// Slack-form tableau. Column n holds the phase-one artificial variable
// (id -1), column n+1 the right-hand side. Row m is the objective, row m+1
// the phase-one objective.
class Tableau {
  public:
    explicit Tableau(const LinearProgram& lp)
        : m_(lp.rows), n_(lp.cols), basic_(m_), nonbasic_(n_ + 1),
          d_((m_ + 2) * (n_ + 2), 0.0)
    {
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j)
                at(i, j) = lp.a[i * n_ + j];
            at(i, n_) = -1.0;
            at(i, n_ + 1) = lp.b[i];
            basic_[i] = static_cast<long>(n_ + i);
        }
        for (std::size_t j = 0; j < n_; ++j) {
            nonbasic_[j] = static_cast<long>(j);
            at(m_, j) = -lp.c[j];
        }
        nonbasic_[n_] = -1;
        at(m_ + 1, n_) = 1.0;
    }

    LpSolution solve()
    {
        std::size_t r = 0;
        for (std::size_t i = 1; i < m_; ++i) {
            if (rhs(i) < rhs(r))
                r = i;
        }
        if (m_ > 0 && rhs(r) < -kEps) {
            pivot(r, n_);
            if (!run(1) || at(m_ + 1, n_ + 1) < -kEps)
                throw InfeasibleError("linear program is infeasible");
            for (std::size_t i = 0; i < m_; ++i) {
                if (basic_[i] != -1)
                    continue;
                std::size_t s = 0;
                for (std::size_t j = 1; j <= n_; ++j) {
                    if (at(i, j) < at(i, s) || (at(i, j) == at(i, s) && nonbasic_[j] < nonbasic_[s]))
                        s = j;
                }
                pivot(i, s);
            }
        }
        if (!run(2))
            throw UnboundedError("linear program is unbounded");

        LpSolution sol;
        sol.x.assign(n_, 0.0);
        for (std::size_t i = 0; i < m_; ++i) {
            if (basic_[i] >= 0 && static_cast<std::size_t>(basic_[i]) < n_)
                sol.x[static_cast<std::size_t>(basic_[i])] = rhs(i);
        }
        sol.objective = at(m_, n_ + 1);
        return sol;
    }

  private:
    double& at(std::size_t i, std::size_t j) { return d_[i * (n_ + 2) + j]; }
    double rhs(std::size_t i) { return at(i, n_ + 1); }

    void pivot(std::size_t r, std::size_t s)
    {
        const double inv = 1.0 / at(r, s);
        for (std::size_t i = 0; i < m_ + 2; ++i) {
            if (i == r)
                continue;
            const double f = at(i, s) * inv;
            if (f == 0.0)
                continue;
            for (std::size_t j = 0; j < n_ + 2; ++j) {
                if (j != s)
                    at(i, j) -= at(r, j) * f;
            }
        }
        for (std::size_t j = 0; j < n_ + 2; ++j) {
            if (j != s)
                at(r, j) *= inv;
        }
        for (std::size_t i = 0; i < m_ + 2; ++i) {
            if (i != r)
                at(i, s) *= -inv;
        }
        at(r, s) = inv;
        std::swap(basic_[r], nonbasic_[s]);
    }

    // Bland's rule: lowest-id improving column, ratio ties to lowest basic id.
    bool run(int phase)
    {
        const std::size_t obj = phase == 1 ? m_ + 1 : m_;
        for (;;) {
            long s = -1;
            for (std::size_t j = 0; j <= n_; ++j) {
                if (phase == 2 && nonbasic_[j] == -1)
                    continue;
                if (at(obj, j) < -kEps && (s < 0 || nonbasic_[j] < nonbasic_[static_cast<std::size_t>(s)]))
                    s = static_cast<long>(j);
            }
            if (s < 0)
                return true;
            const auto sc = static_cast<std::size_t>(s);
            long r = -1;
            double best = 0;
            for (std::size_t i = 0; i < m_; ++i) {
                if (at(i, sc) <= kEps)
                    continue;
                const double ratio = rhs(i) / at(i, sc);
                if (r < 0 || ratio < best - kEps
                    || (ratio <= best + kEps && basic_[i] < basic_[static_cast<std::size_t>(r)])) {
                    r = static_cast<long>(i);
                    best = ratio;
                }
            }
            if (r < 0)
                return false;
            pivot(static_cast<std::size_t>(r), sc);
        }
    }

    std::size_t m_;
    std::size_t n_;
    std::vector<long> basic_;
    std::vector<long> nonbasic_;
    std::vector<double> d_;
};

}  // namespace

LpSolution simplex_maximize(const LinearProgram& lp)
{
    if (lp.a.size() != lp.rows * lp.cols || lp.b.size() != lp.rows || lp.c.size() != lp.cols)
        throw DomainError("simplex_maximize: inconsistent problem dimensions");
    return Tableau(lp).solve();
}

LpSolution lp_solve(std::span<const double> costs, std::span<const DifferenceBound> constraints)
{
    const std::size_t n = costs.size();
    LinearProgram lp;
    lp.cols = n;
    lp.c.assign(costs.begin(), costs.end());
    double scale = 1.0;
    for (const DifferenceBound& d : constraints) {
        if (d.i >= n || d.j >= n)
            throw DomainError("lp_solve: constraint references a missing variable");
        if (!std::isfinite(d.bound))
            throw DomainError("lp_solve: constraint bound must be finite");
        if (d.i == d.j) {
            if (d.bound < 0)
                throw InfeasibleError("lp_solve: x_i - x_i <= negative bound");
            continue;
        }
        std::vector<double> row(n, 0.0);
        row[d.i] = 1.0;
        row[d.j] = -1.0;
        lp.a.insert(lp.a.end(), row.begin(), row.end());
        lp.b.push_back(d.bound);
        ++lp.rows;
        scale = std::max(scale, std::abs(d.bound));
    }

    const LpSolution first = simplex_maximize(lp);

    // Lexicographic tie-break: minimize x_0, then x_1, ... over the optimal face.
    const double slack = 1e-12 * scale;
    LinearProgram lex = lp;
    auto add_row = [&](std::vector<double> row, double bound) {
        lex.a.insert(lex.a.end(), row.begin(), row.end());
        lex.b.push_back(bound);
        ++lex.rows;
    };
    std::vector<double> neg_c(n);
    std::transform(lp.c.begin(), lp.c.end(), neg_c.begin(), [](double v) { return -v; });
    add_row(neg_c, -first.objective + slack * (1.0 + std::abs(first.objective)));

    std::vector<double> x(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        lex.c.assign(n, 0.0);
        lex.c[k] = -1.0;
        x[k] = -simplex_maximize(lex).objective;
        std::vector<double> row(n, 0.0);
        row[k] = 1.0;
        add_row(row, x[k] + slack);
    }

    LpSolution sol;
    sol.x = std::move(x);
    sol.objective = 0;
    for (std::size_t k = 0; k < n; ++k)
        sol.objective += costs[k] * sol.x[k];
    return sol;
}

}  // namespace lcpoly
