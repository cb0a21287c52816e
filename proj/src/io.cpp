#include "lcpoly/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "lcpoly/errors.hpp"

namespace lcpoly {
namespace {

constexpr std::string_view kPlaceholder = "$s";

double parse_number(std::string_view text, std::string_view what)
{
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ')
        text.remove_suffix(1);
    double value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size())
        throw InvalidInput(std::string(what) + ": cannot parse '" + std::string(text) + "' as a number");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos)
            return parts;
        start = pos + 1;
    }
}

const Json& field(const Json& j, std::string_view name, std::string_view where)
{
    if (!j.is_object())
        throw SpecError(std::string(where) + ": expected a JSON object");
    const auto it = j.find(name);
    if (it == j.end())
        throw SpecError(std::string(where) + ": missing field '" + std::string(name) + "'");
    return *it;
}

double as_double(const Json& j, std::string_view name)
{
    if (!j.is_number())
        throw SpecError("field '" + std::string(name) + "' must be a number");
    return j.get<double>();
}

int as_int(const Json& j, std::string_view name)
{
    if (!j.is_number_integer())
        throw SpecError("field '" + std::string(name) + "' must be an integer");
    return j.get<int>();
}

std::size_t as_count(const Json& j, std::string_view name)
{
    if (!j.is_number_unsigned())
        throw SpecError("field '" + std::string(name) + "' must be a non-negative integer");
    return j.get<std::size_t>();
}

bool as_bool(const Json& j, std::string_view name)
{
    if (!j.is_boolean())
        throw SpecError("field '" + std::string(name) + "' must be a boolean");
    return j.get<bool>();
}

double number_field(const Json& j, std::string_view name, std::string_view where)
{
    return as_double(field(j, name, where), name);
}

int int_field(const Json& j, std::string_view name, std::string_view where)
{
    return as_int(field(j, name, where), name);
}

std::optional<double> optional_field(const Json& j, std::string_view name, std::string_view where)
{
    const Json& v = field(j, name, where);
    if (v.is_null())
        return std::nullopt;
    return as_double(v, name);
}

Json optional_value(const std::optional<double>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

bool is_placeholder(const Json& j)
{
    return j.is_string() && j.get<std::string>() == kPlaceholder;
}

// Parses a spec, replacing "$s" entries by 0.5 and reporting their location.
RationalMapSpec parse_spec(const Json& j, std::optional<ParamSlot>* slot)
{
    if (!j.is_object())
        throw SpecError("spec: expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        static const char* const known[] = {"name", "epsilon", "n", "real", "imag", "complex",
                                            "orientation"};
        bool ok = false;
        for (const char* k : known)
            ok = ok || key == k;
        if (!ok || (key == "name" && !slot))
            throw SpecError("spec: unknown field '" + key + "'");
        (void)value;
    }

    RationalMapSpec spec;
    if (j.contains("epsilon"))
        spec.epsilon = as_int(j["epsilon"], "epsilon");
    if (j.contains("n"))
        spec.n = as_int(j["n"], "n");

    auto claim = [&](ParamSlot::Kind kind, std::size_t index, std::string_view where) {
        if (!slot)
            throw SpecError(std::string(where) + ": placeholder \"$s\" is only allowed in family templates");
        if (*slot)
            throw SpecError(std::string(where) + ": a family template takes exactly one \"$s\"");
        *slot = ParamSlot{kind, index};
        return 0.5;
    };
    auto coordinate = [&](const Json& v, ParamSlot::Kind kind, std::size_t index,
                          const std::string& where) {
        return is_placeholder(v) ? claim(kind, index, where) : as_double(v, where);
    };

    auto axis_list = [&](const char* key, ParamSlot::Kind kind, std::vector<AxisFactor>& out) {
        if (!j.contains(key))
            return;
        const Json& list = j[key];
        if (!list.is_array())
            throw SpecError(std::string("field '") + key + "' must be an array of [position, sign]");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
            const Json& pair = list[i];
            if (!pair.is_array() || pair.size() != 2)
                throw SpecError("field '" + where + "' must be [position, sign]");
            out.push_back({coordinate(pair[0], kind, i, where), as_int(pair[1], where + ".sign")});
        }
    };
    axis_list("real", ParamSlot::Kind::real, spec.real_factors);
    axis_list("imag", ParamSlot::Kind::imag, spec.imag_factors);

    if (j.contains("complex")) {
        const Json& list = j["complex"];
        if (!list.is_array())
            throw SpecError("field 'complex' must be an array of [re, im, sign]");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string where = "complex[" + std::to_string(i) + "]";
            const Json& t = list[i];
            if (!t.is_array() || t.size() != 3)
                throw SpecError("field '" + where + "' must be [re, im, sign]");
            const double re = coordinate(t[0], ParamSlot::Kind::complex_re, i, where);
            const double im = coordinate(t[1], ParamSlot::Kind::complex_im, i, where);
            spec.complex_factors.push_back({{re, im}, as_int(t[2], where + ".sign")});
        }
    }

    if (j.contains("orientation")) {
        const Json& o = j["orientation"];
        const std::string name = o.is_string() ? o.get<std::string>() : "";
        if (name == "conformal")
            spec.orientation = Orientation::conformal;
        else if (name == "anticonformal")
            spec.orientation = Orientation::anticonformal;
        else
            throw SpecError("field 'orientation' must be \"conformal\" or \"anticonformal\"");
    }
    validate(spec);
    return spec;
}

Json spec_body(const RationalMapSpec& spec, const std::optional<ParamSlot>& slot)
{
    auto coord = [&](double v, ParamSlot::Kind kind, std::size_t index) {
        if (slot && slot->kind == kind && slot->index == index)
            return Json(kPlaceholder);
        return Json(v);
    };
    Json j;
    j["epsilon"] = spec.epsilon;
    j["n"] = spec.n;
    Json real = Json::array();
    for (std::size_t i = 0; i < spec.real_factors.size(); ++i)
        real.push_back({coord(spec.real_factors[i].position, ParamSlot::Kind::real, i),
                        spec.real_factors[i].sign});
    Json imag = Json::array();
    for (std::size_t i = 0; i < spec.imag_factors.size(); ++i)
        imag.push_back({coord(spec.imag_factors[i].position, ParamSlot::Kind::imag, i),
                        spec.imag_factors[i].sign});
    Json complex = Json::array();
    for (std::size_t i = 0; i < spec.complex_factors.size(); ++i) {
        const ComplexFactor& f = spec.complex_factors[i];
        complex.push_back({coord(f.position.real(), ParamSlot::Kind::complex_re, i),
                           coord(f.position.imag(), ParamSlot::Kind::complex_im, i), f.sign});
    }
    j["real"] = std::move(real);
    j["imag"] = std::move(imag);
    j["complex"] = std::move(complex);
    j["orientation"] = spec.orientation == Orientation::conformal ? "conformal" : "anticonformal";
    return j;
}

Json edges_json(const EdgeOrientations& e) { return {{"ex", e.ex}, {"ey", e.ey}, {"ez", e.ez}}; }

}  // namespace

Prism parse_prism(std::string_view text)
{
    const auto parts = split(text, ',');
    if (parts.size() != 3)
        throw InvalidInput("--prism: expected Lx,Ly,Lz, got '" + std::string(text) + "'");
    return make_prism(parse_number(parts[0], "--prism"), parse_number(parts[1], "--prism"),
                      parse_number(parts[2], "--prism"));
}

Interval parse_range(std::string_view text)
{
    const auto parts = split(text, ':');
    if (parts.size() != 2)
        throw InvalidInput("--range: expected a:b, got '" + std::string(text) + "'");
    const Interval r{parse_number(parts[0], "--range"), parse_number(parts[1], "--range")};
    if (!(r.lo <= r.hi))
        throw InvalidInput("--range: lower end exceeds upper end");
    return r;
}

Json spec_to_json(const RationalMapSpec& spec) { return spec_body(spec, std::nullopt); }

RationalMapSpec spec_from_json(const Json& j) { return parse_spec(j, nullptr); }

Json family_to_json(const ConfigFamily& family)
{
    Json j;
    j["name"] = family.name;
    const Json body = spec_body(family.base, family.slot);
    for (const auto& [key, value] : body.items())
        j[key] = value;
    return j;
}

ConfigFamily family_from_json(const Json& j)
{
    ConfigFamily family;
    std::optional<ParamSlot> slot;
    family.base = parse_spec(j, &slot);
    family.slot = slot;
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw SpecError("field 'name' must be a string");
        family.name = j["name"].get<std::string>();
    }
    return family;
}

Json invariants_to_json(const InvariantsReport& r)
{
    Json j;
    j["ex"] = r.closed.edges.ex;
    j["ey"] = r.closed.edges.ey;
    j["ez"] = r.closed.edges.ez;
    j["kx"] = r.closed.kinks.kx;
    j["ky"] = r.closed.kinks.ky;
    j["kz"] = r.closed.kinks.kz;
    j["omega0"] = r.closed.omega0;
    j["omega_min"] = r.closed.omega_min;
    j["degree"] = r.degree;
    j["omega0_numeric"] = r.omega0_numeric.value;
    j["omega0_numeric_err"] = r.omega0_numeric.error_estimate;
    j["omega0_numeric_evals"] = r.omega0_numeric.evaluations;
    j["kx_numeric"] = r.kinks_numeric.kx;
    j["ky_numeric"] = r.kinks_numeric.ky;
    j["kz_numeric"] = r.kinks_numeric.kz;
    j["edges_sampled"] = edges_json(r.edges_sampled);
    return j;
}

InvariantsReport invariants_from_json(const Json& j)
{
    constexpr std::string_view where = "invariants";
    InvariantsReport r;
    r.closed.edges = {int_field(j, "ex", where), int_field(j, "ey", where), int_field(j, "ez", where)};
    r.closed.kinks = {int_field(j, "kx", where), int_field(j, "ky", where), int_field(j, "kz", where)};
    r.closed.omega0 = number_field(j, "omega0", where);
    r.closed.omega_min = number_field(j, "omega_min", where);
    r.degree = int_field(j, "degree", where);
    r.omega0_numeric.value = number_field(j, "omega0_numeric", where);
    r.omega0_numeric.error_estimate = number_field(j, "omega0_numeric_err", where);
    r.omega0_numeric.evaluations = as_count(field(j, "omega0_numeric_evals", where), "omega0_numeric_evals");
    r.kinks_numeric = {int_field(j, "kx_numeric", where), int_field(j, "ky_numeric", where),
                       int_field(j, "kz_numeric", where)};
    const Json& e = field(j, "edges_sampled", where);
    r.edges_sampled = {int_field(e, "ex", "edges_sampled"), int_field(e, "ey", "edges_sampled"),
                       int_field(e, "ez", "edges_sampled")};
    return r;
}

Json energy_report_to_json(const EnergyReport& r)
{
    Json j;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["exact"] = optional_value(r.exact);
    j["exact_err"] = optional_value(r.exact_err);
    j["scaled"] = optional_value(r.scaled);
    j["ratio"] = r.ratio;
    j["lower_frank"] = optional_value(r.lower_frank);
    return j;
}

EnergyReport energy_report_from_json(const Json& j)
{
    constexpr std::string_view where = "energy report";
    EnergyReport r;
    r.lower = number_field(j, "lower", where);
    r.upper = number_field(j, "upper", where);
    r.exact = optional_field(j, "exact", where);
    r.exact_err = optional_field(j, "exact_err", where);
    r.scaled = optional_field(j, "scaled", where);
    r.ratio = number_field(j, "ratio", where);
    r.lower_frank = optional_field(j, "lower_frank", where);
    return r;
}

Json certificate_to_json(const LowerBoundCertificate& c)
{
    return {{"xi", c.xi}, {"objective", c.objective}, {"feasible", c.feasible}};
}

LowerBoundCertificate certificate_from_json(const Json& j)
{
    constexpr std::string_view where = "certificate";
    LowerBoundCertificate c;
    const Json& xi = field(j, "xi", where);
    if (!xi.is_array())
        throw SpecError("field 'xi' must be an array");
    for (const Json& v : xi)
        c.xi.push_back(as_double(v, "xi"));
    c.objective = number_field(j, "objective", where);
    c.feasible = as_bool(field(j, "feasible", where), "feasible");
    return c;
}

Json family_minimum_to_json(const FamilyMinimum& m)
{
    Json j;
    if (m.search) {
        j["argmin"] = m.search->argmin;
        j["min_value"] = m.search->min_value;
        j["at_boundary"] = m.search->at_boundary;
        j["bracket"] = {m.search->bracket.lo, m.search->bracket.hi};
        j["evaluations"] = m.search->evaluations;
    }
    else {
        j["argmin"] = nullptr;
    }
    j["min_scaled"] = m.min_scaled;
    j["classification"] = std::string(to_string(m.classification));
    return j;
}

FamilyMinimum family_minimum_from_json(const Json& j)
{
    constexpr std::string_view where = "minimize result";
    FamilyMinimum m;
    if (!field(j, "argmin", where).is_null()) {
        MinimizeResult r;
        r.argmin = number_field(j, "argmin", where);
        r.min_value = number_field(j, "min_value", where);
        r.at_boundary = as_bool(field(j, "at_boundary", where), "at_boundary");
        const Json& b = field(j, "bracket", where);
        if (!b.is_array() || b.size() != 2)
            throw SpecError("field 'bracket' must be [lo, hi]");
        r.bracket = {as_double(b[0], "bracket"), as_double(b[1], "bracket")};
        r.evaluations = as_count(field(j, "evaluations", where), "evaluations");
        m.search = r;
    }
    m.min_scaled = number_field(j, "min_scaled", where);
    const Json& c = field(j, "classification", where);
    if (!c.is_string())
        throw SpecError("field 'classification' must be a string");
    m.classification = classification_from_string(c.get<std::string>());
    return m;
}

Json field_check_to_json(const FieldCheck& c)
{
    return {{"points", c.points},
            {"conformality", c.conformality},
            {"divergence", c.divergence},
            {"divergence_abs", c.divergence_abs},
            {"definition", c.definition}};
}

FieldCheck field_check_from_json(const Json& j)
{
    constexpr std::string_view where = "field check";
    FieldCheck c;
    c.points = as_count(field(j, "points", where), "points");
    c.conformality = number_field(j, "conformality", where);
    c.divergence = number_field(j, "divergence", where);
    c.divergence_abs = number_field(j, "divergence_abs", where);
    c.definition = number_field(j, "definition", where);
    return c;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    }
    catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

std::string g12(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows)
{
    out << "s,E,E_err,eps_scaled,lower,upper\n";
    for (const SweepRow& r : rows) {
        out << (r.s ? g12(*r.s) : std::string()) << ',' << g12(r.energy) << ',' << g12(r.energy_err)
            << ',' << g12(r.scaled) << ',' << g12(r.lower) << ',' << g12(r.upper) << '\n';
    }
}

void write_field_csv(std::ostream& out, const RationalMapSpec& spec, const Prism& prism,
                     std::size_t grid)
{
    if (grid == 0)
        throw InvalidInput("--grid must be positive");
    const RationalMap map(spec);
    const Vec3 half = prism.octant().half;
    out << "x,y,z,nx,ny,nz\n";
    for (std::size_t i = 0; i <= grid; ++i) {
        for (std::size_t k = 0; k <= grid; ++k) {
            for (std::size_t l = 0; l <= grid; ++l) {
                if (i == 0 && k == 0 && l == 0)
                    continue;
                const double g = static_cast<double>(grid);
                const Vec3 r{half.x * i / g, half.y * k / g, half.z * l / g};
                const Vec3 n = map.director(r);
                out << g12(r.x) << ',' << g12(r.y) << ',' << g12(r.z) << ',' << g12(n.x) << ','
                    << g12(n.y) << ',' << g12(n.z) << '\n';
            }
        }
    }
}

}  // namespace lcpoly
