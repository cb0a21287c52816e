#include "lcpoly/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "lcpoly/errors.hpp"

namespace lcpoly {
namespace {

// Runs body(i) for i in [0, count) on up to `threads` workers.
template<class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body)
{
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        body(i);
                    }
                    catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure)
                            failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure)
        std::rethrow_exception(failure);
}

struct UnwrappedVariant {
    const char* name;
    int epsilon;
    int n;
    Orientation orientation;
};

constexpr UnwrappedVariant kUnwrapped[] = {
    {"unwrapped", 1, 1, Orientation::conformal},
    {"unwrapped-neg", -1, 1, Orientation::conformal},
    {"unwrapped-inv", 1, -1, Orientation::conformal},
    {"unwrapped-neg-inv", -1, -1, Orientation::conformal},
    {"unwrapped-conj", 1, 1, Orientation::anticonformal},
    {"unwrapped-neg-conj", -1, 1, Orientation::anticonformal},
    {"unwrapped-inv-conj", 1, -1, Orientation::anticonformal},
    {"unwrapped-neg-inv-conj", -1, -1, Orientation::anticonformal},
};

}  // namespace

RationalMapSpec ConfigFamily::instantiate(double s) const
{
    if (!slot)
        return base;
    if (!(s > 0 && s < 1)) {
        std::ostringstream os;
        os << "family '" << name << "': parameter " << s << " outside (0, 1)";
        throw DomainError(os.str());
    }
    RationalMapSpec spec = base;
    auto need = [&](std::size_t size) {
        if (slot->index >= size)
            throw SpecError("family '" + name + "': parameter slot index out of range");
    };
    switch (slot->kind) {
        case ParamSlot::Kind::real:
            need(spec.real_factors.size());
            spec.real_factors[slot->index].position = s;
            break;
        case ParamSlot::Kind::imag:
            need(spec.imag_factors.size());
            spec.imag_factors[slot->index].position = s;
            break;
        case ParamSlot::Kind::complex_re:
            need(spec.complex_factors.size());
            spec.complex_factors[slot->index].position.real(s);
            break;
        case ParamSlot::Kind::complex_im:
            need(spec.complex_factors.size());
            spec.complex_factors[slot->index].position.imag(s);
            break;
    }
    validate(spec);
    return spec;
}

ConfigFamily builtin_family(std::string_view name)
{
    if (name == "imag1") {
        ConfigFamily f;
        f.name = "imag1";
        f.base.imag_factors = {{0.5, 1}};
        f.slot = ParamSlot{ParamSlot::Kind::imag, 0};
        return f;
    }
    for (const UnwrappedVariant& v : kUnwrapped) {
        if (name == v.name) {
            ConfigFamily f;
            f.name = v.name;
            f.base.epsilon = v.epsilon;
            f.base.n = v.n;
            f.base.orientation = v.orientation;
            return f;
        }
    }
    std::ostringstream os;
    os << "unknown family '" << name << "' (known:";
    for (const std::string& known : builtin_family_names())
        os << " " << known;
    os << ")";
    throw LookupError(os.str());
}

std::vector<std::string> builtin_family_names()
{
    std::vector<std::string> names{"imag1"};
    for (const UnwrappedVariant& v : kUnwrapped)
        names.emplace_back(v.name);
    return names;
}

std::vector<ConfigFamily> unwrapped_variants()
{
    std::vector<ConfigFamily> out;
    for (const UnwrappedVariant& v : kUnwrapped)
        out.push_back(builtin_family(v.name));
    return out;
}

std::vector<SweepRow> sweep_energy(const ConfigFamily& family, const Prism& prism, double K,
                                   std::span<const double> s_values, const SweepOptions& opts)
{
    std::vector<std::optional<double>> points;
    if (family.has_parameter()) {
        if (s_values.empty())
            throw InvalidInput("sweep_energy: no parameter values given");
        for (double s : s_values) {
            if (!(s > 0 && s < 1)) {
                std::ostringstream os;
                os << "sweep_energy: parameter " << s << " outside (0, 1)";
                throw DomainError(os.str());
            }
            points.emplace_back(s);
        }
    }
    else {
        points.emplace_back(std::nullopt);
    }

    const RationalMapSpec first = family.instantiate(points.front().value_or(0.5));
    const TopologicalInvariants inv = invariants_of(first);
    const double lower = lower_bound_prism(prism, inv.omega0, K);
    const double upper = upper_bound_prism(prism, inv.omega0, K);

    std::vector<SweepRow> rows(points.size());
    parallel_for(points.size(), opts.threads, [&](std::size_t i) {
        SweepRow& row = rows[i];
        row.s = points[i];
        row.invariants = inv;
        row.lower = lower;
        row.upper = upper;
        const RationalMapSpec spec = family.instantiate(points[i].value_or(0.5));
        try {
            const EnergyEstimate e = conformal_energy(prism, spec, K, opts.tol);
            row.energy = e.value;
            row.energy_err = e.error;
        }
        catch (const AccuracyError& err) {
            row.energy = err.best();
            row.energy_err = err.error_estimate();
            row.error = err.what();
        }
        row.scaled = scaled_energy(row.energy, prism);
    });
    return rows;
}

std::string_view to_string(Classification c)
{
    switch (c) {
        case Classification::smooth: return "smooth";
        case Classification::edge_singular: return "edge-singular";
        case Classification::lower_limit: return "lower-limit";
    }
    return "smooth";
}

Classification classification_from_string(std::string_view name)
{
    for (Classification c :
         {Classification::smooth, Classification::edge_singular, Classification::lower_limit}) {
        if (to_string(c) == name)
            return c;
    }
    throw LookupError("unknown classification '" + std::string(name) + "'");
}

FamilyMinimum minimize_family(const ConfigFamily& family, const Prism& prism, double K,
                              const FamilyMinimizeOptions& opts)
{
    FamilyMinimum out;
    if (!family.has_parameter()) {
        const EnergyEstimate e = conformal_energy(prism, family.base, K, opts.energy_tol);
        out.min_scaled = scaled_energy(e.value, prism);
        out.classification = Classification::smooth;
        return out;
    }
    if (!(opts.delta > 0 && opts.delta < 0.5))
        throw DomainError("minimize_family: delta must lie in (0, 1/2)");

    auto objective = [&](double s) {
        const EnergyEstimate e = conformal_energy(prism, family.instantiate(s), K, opts.energy_tol);
        return scaled_energy(e.value, prism);
    };
    MinimizeOptions mopts;
    mopts.tol = opts.s_tol;
    mopts.grid = opts.grid;
    const Interval domain{opts.delta, 1 - opts.delta};
    const MinimizeResult r = minimize_1d(objective, domain, mopts);

    out.search = r;
    out.min_scaled = r.min_value;
    if (!r.at_boundary)
        out.classification = Classification::smooth;
    else if (domain.hi - r.argmin <= opts.s_tol)
        out.classification = Classification::edge_singular;
    else
        out.classification = Classification::lower_limit;
    return out;
}

}  // namespace lcpoly
