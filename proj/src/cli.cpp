#include "lcpoly/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lcpoly/diagnostics.hpp"
#include "lcpoly/errors.hpp"
#include "lcpoly/io.hpp"

namespace lcpoly::cli {
namespace {

template<class F>
auto with_context(const std::string& context, F&& body)
{
    try {
        return body();
    }
    catch (const SpecError& e) {
        throw SpecError(context + ": " + e.what());
    }
    catch (const DomainError& e) {
        throw DomainError(context + ": " + e.what());
    }
}

// Where a configuration comes from: a spec file, or a family and parameter.
struct Source {
    std::string spec_path;
    std::string family_name;
    std::string family_path;
    std::optional<double> s;

    void add_to(CLI::App& cmd, bool allow_s)
    {
        auto* spec = cmd.add_option("--spec", spec_path, "rational-map spec (JSON file)");
        auto* fam = cmd.add_option("--family", family_name, "built-in family name");
        auto* file = cmd.add_option("--family-file", family_path, "family template (JSON file)");
        spec->excludes(fam)->excludes(file);
        fam->excludes(file);
        if (allow_s)
            cmd.add_option("--s", s, "family parameter in (0, 1)");
    }

    bool given() const
    {
        return !spec_path.empty() || !family_name.empty() || !family_path.empty();
    }

    ConfigFamily family() const
    {
        if (!family_name.empty())
            return builtin_family(family_name);
        if (!family_path.empty())
            return with_context("--family-file " + family_path,
                                [&] { return family_from_json(read_json_file(family_path)); });
        if (!spec_path.empty()) {
            ConfigFamily f;
            f.name = spec_path;
            f.base = with_context("--spec " + spec_path,
                                  [&] { return spec_from_json(read_json_file(spec_path)); });
            return f;
        }
        throw InvalidInput("one of --spec, --family or --family-file is required");
    }

    RationalMapSpec spec() const
    {
        const ConfigFamily f = family();
        if (f.has_parameter() && !s)
            throw InvalidInput("--s is required for family '" + f.name + "'");
        if (!f.has_parameter() && s)
            throw InvalidInput("--s given but family '" + f.name + "' has no parameter");
        return with_context("--s", [&] { return f.instantiate(s.value_or(0.5)); });
    }

};

struct Constants {
    double K = 1;
    std::optional<double> k1, k2, k3;

    void add_to(CLI::App& cmd)
    {
        cmd.add_option("--K", K, "one-constant elastic modulus")->capture_default_str();
        auto* a = cmd.add_option("--K1", k1, "splay constant");
        auto* b = cmd.add_option("--K2", k2, "twist constant");
        auto* c = cmd.add_option("--K3", k3, "bend constant");
        a->needs(b)->needs(c);
        b->needs(a)->needs(c);
        c->needs(a)->needs(b);
    }

    ElasticConstants get() const
    {
        ElasticConstants c;
        c.K = K;
        if (k1)
            c.frank = std::array<double, 3>{*k1, *k2, *k3};
        validate(c);
        return c;
    }
};

class Output {
  public:
    explicit Output(std::ostream& fallback) : fallback_(fallback) {}

    void add_to(CLI::App& cmd) { cmd.add_option("--out", path_, "output file (default stdout)"); }

    void write(const std::function<void(std::ostream&)>& emit) const
    {
        if (path_.empty()) {
            emit(fallback_);
            return;
        }
        std::ofstream file(path_);
        if (!file)
            throw InvalidInput("--out: cannot write '" + path_ + "'");
        emit(file);
        if (!file)
            throw InvalidInput("--out: write to '" + path_ + "' failed");
    }

  private:
    std::ostream& fallback_;
    std::string path_;
};

std::vector<double> linspace(Interval r, std::size_t steps)
{
    if (steps == 0)
        throw InvalidInput("--steps must be positive");
    if (steps == 1)
        return {r.lo};
    std::vector<double> v(steps);
    for (std::size_t i = 0; i < steps; ++i)
        v[i] = i + 1 == steps ? r.hi : r.lo + (r.hi - r.lo) * static_cast<double>(i) / (steps - 1);
    return v;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Conformal director configurations in rectangular prisms", "lcpoly"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned threads = 1;
    app.add_option("--threads", threads, "cap on worker threads")->check(CLI::PositiveNumber);

    std::function<int()> action;
    Output output(out);
    Source source;
    Constants constants;
    std::string prism_text;
    double tol = 1e-8;

    auto* inv = app.add_subcommand("invariants", "closed-form invariants with numerical cross-checks");
    source.add_to(*inv, true);
    inv->add_option("--tol", tol, "absolute tolerance of the trapped-area quadrature")
        ->capture_default_str();
    output.add_to(*inv);
    inv->callback([&] {
        action = [&] {
            const InvariantsReport report = check_invariants(source.spec(), tol);
            output.write([&](std::ostream& os) { os << dump(invariants_to_json(report)); });
            return int{kSuccess};
        };
    });

    std::optional<double> omega0;
    std::string lp_mode = "all-pairs";
    auto* bounds = app.add_subcommand("bounds", "topological lower bound and closed-form upper bound");
    bounds->add_option("--prism", prism_text, "Lx,Ly,Lz with Lx >= Ly >= Lz")->required();
    auto* omega_opt = bounds->add_option("--omega0", omega0, "trapped area at the origin (sr)");
    source.add_to(*bounds, true);
    omega_opt->excludes("--spec")->excludes("--family")->excludes("--family-file");
    constants.add_to(*bounds);
    bounds->add_option("--lp-constraints", lp_mode, "Lipschitz constraints of the vertex LP")
        ->check(CLI::IsMember({"all-pairs", "edges"}))
        ->capture_default_str();
    output.add_to(*bounds);
    bounds->callback([&] {
        action = [&] {
            const Prism prism = parse_prism(prism_text);
            if (!omega0 && !source.given())
                throw InvalidInput("bounds: one of --omega0 or --spec/--family is required");
            const double w0 = omega0 ? *omega0 : trapped_area(source.spec());
            const ElasticConstants c = constants.get();
            const EnergyReport report = bounds_report(prism, w0, c);
            const auto vertices = prism_vertex_data(prism, w0);
            const auto edges = prism_edge_list(prism);
            const LpConstraints mode = lp_mode == "edges" ? LpConstraints::edges : LpConstraints::all_pairs;
            const LowerBoundCertificate cert = lower_bound_lp(vertices, c.K, mode, edges);
            Json j = energy_report_to_json(report);
            j["lp_constraints"] = lp_mode;
            j["certificate"] = certificate_to_json(cert);
            output.write([&](std::ostream& os) { os << dump(j); });
            return int{kSuccess};
        };
    });

    auto* energy = app.add_subcommand("energy", "exact energy by adaptive quadrature, with bounds");
    energy->add_option("--prism", prism_text, "Lx,Ly,Lz with Lx >= Ly >= Lz")->required();
    source.add_to(*energy, true);
    constants.add_to(*energy);
    energy->add_option("--tol", tol, "relative quadrature tolerance")->capture_default_str();
    output.add_to(*energy);
    energy->callback([&] {
        action = [&] {
            const Prism prism = parse_prism(prism_text);
            const EnergyReport report = energy_report(prism, source.spec(), constants.get(), tol);
            output.write([&](std::ostream& os) { os << dump(energy_report_to_json(report)); });
            return int{kSuccess};
        };
    });

    std::string range_text = "0.05:0.95";
    std::size_t steps = 19;
    auto* sweep = app.add_subcommand("sweep", "energy along a one-parameter family (CSV)");
    sweep->add_option("--prism", prism_text, "Lx,Ly,Lz with Lx >= Ly >= Lz")->required();
    source.add_to(*sweep, false);
    sweep->add_option("--range", range_text, "parameter range a:b inside (0, 1)")->capture_default_str();
    sweep->add_option("--steps", steps, "number of parameter values, endpoints included")
        ->capture_default_str();
    sweep->add_option("--tol", tol, "relative quadrature tolerance")->capture_default_str();
    constants.add_to(*sweep);
    output.add_to(*sweep);
    sweep->callback([&] {
        action = [&] {
            const Prism prism = parse_prism(prism_text);
            const ConfigFamily family = source.family();
            const std::vector<double> s = linspace(parse_range(range_text), steps);
            const std::vector<SweepRow> rows =
                sweep_energy(family, prism, constants.get().K, s, SweepOptions{tol, threads});
            output.write([&](std::ostream& os) { write_sweep_csv(os, rows); });
            int code = kSuccess;
            for (const SweepRow& row : rows) {
                if (row.error) {
                    err << "lcpoly: s = " << row.s.value_or(0) << ": " << *row.error << "\n";
                    code = kAccuracyFailure;
                }
            }
            return code;
        };
    });

    FamilyMinimizeOptions mopts;
    auto* minimize = app.add_subcommand("minimize", "minimize the scaled energy over a family");
    minimize->add_option("--prism", prism_text, "Lx,Ly,Lz with Lx >= Ly >= Lz")->required();
    source.add_to(*minimize, false);
    constants.add_to(*minimize);
    minimize->add_option("--tol", mopts.energy_tol, "relative quadrature tolerance per energy")
        ->capture_default_str();
    minimize->add_option("--s-tol", mopts.s_tol, "tolerance on the minimizing parameter")
        ->capture_default_str();
    minimize->add_option("--grid", mopts.grid, "scan points before refinement")->capture_default_str();
    output.add_to(*minimize);
    minimize->callback([&] {
        action = [&] {
            const Prism prism = parse_prism(prism_text);
            const ConfigFamily family = source.family();
            const FamilyMinimum m = minimize_family(family, prism, constants.get().K, mopts);
            Json j;
            j["family"] = family.name;
            const Json body = family_minimum_to_json(m);
            for (const auto& [key, value] : body.items())
                j[key] = value;
            output.write([&](std::ostream& os) { os << dump(j); });
            return int{kSuccess};
        };
    });

    std::size_t grid = 16;
    auto* field = app.add_subcommand("field", "director samples on the octant lattice (CSV)");
    field->add_option("--prism", prism_text, "Lx,Ly,Lz with Lx >= Ly >= Lz")->required();
    source.add_to(*field, true);
    field->add_option("--grid", grid, "lattice cells per axis")->capture_default_str();
    output.add_to(*field);
    field->callback([&] {
        action = [&] {
            const Prism prism = parse_prism(prism_text);
            const RationalMapSpec spec = source.spec();
            output.write([&](std::ostream& os) { write_field_csv(os, spec, prism, grid); });
            return int{kSuccess};
        };
    });

    std::size_t points = 100;
    std::uint64_t seed = 1;
    prism_text = "1,1,1";
    auto* check = app.add_subcommand("check", "finite-difference self-check of n and D");
    check->add_option("--prism", prism_text, "Lx,Ly,Lz with Lx >= Ly >= Lz")->capture_default_str();
    source.add_to(*check, true);
    check->add_option("--points", points, "random interior points")->capture_default_str();
    check->add_option("--seed", seed, "seed of the point generator")->capture_default_str();
    output.add_to(*check);
    check->callback([&] {
        action = [&] {
            const Prism prism = parse_prism(prism_text);
            const FieldCheck c = check_field(source.spec(), prism, points, seed);
            output.write([&](std::ostream& os) { os << dump(field_check_to_json(c)); });
            return int{kSuccess};
        };
    });

    if (argc > 1 && argv[1][0] != '-') {
        bool known = false;
        for (const CLI::App* sub : app.get_subcommands({}))
            known = known || sub->check_name(argv[1]);
        if (!known) {
            err << "lcpoly: unknown command '" << argv[1] << "'\n" << "Run with --help for more information.\n";
            return kInvalidInput;
        }
    }

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? int{kSuccess} : int{kInvalidInput};
    }

    try {
        return action();
    }
    catch (const InvalidInput& e) {
        err << "lcpoly: invalid input: " << e.what() << "\n";
        return kInvalidInput;
    }
    catch (const AccuracyError& e) {
        err << "lcpoly: accuracy failure: " << e.what() << " (best estimate " << e.best()
            << ", error estimate " << e.error_estimate() << ")\n";
        return kAccuracyFailure;
    }
    catch (const Error& e) {
        err << "lcpoly: numerical failure: " << e.what() << "\n";
        return kAccuracyFailure;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"lcpoly"};
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace lcpoly::cli
