#pragma once

#include <radolab/bounds.hpp>
#include <radolab/closed_forms.hpp>
#include <radolab/coloring.hpp>
#include <radolab/exact.hpp>
#include <radolab/solutions.hpp>
#include <radolab/table.hpp>
#include <radolab/walk.hpp>

#include <json.hpp>

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

// JSON forms of the result types. Every to_json has a matching from_json so
// reports can be read back without loss.

namespace radolab {

using json = nlohmann::ordered_json;

inline constexpr int report_schema_version = 1;
inline constexpr const char * tool_version = "1.0.0";

namespace detail {

    template <typename E, std::size_t N>
    auto enum_from(const std::string & s, const E (&values)[N], const char * what) -> E
    {
        for (auto v : values)
            if (to_string(v) == s)
                return v;
        throw ParseError(std::string("unknown ") + what + " \"" + s + "\"");
    }

    inline auto real_to_json(double v) -> json { return std::isfinite(v) ? json(v) : json(nullptr); }
    inline auto real_from_json(const json & j) -> double
    {
        return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
    }

} // namespace detail

// ---- exact ----

inline void to_json(json & j, const RadoResult & r)
{
    j = json{{"status", to_string(r.status)}, {"value", r.value}, {"colors", r.certificate.colors().value()},
        {"certificate", to_certificate(r.certificate)}, {"nodes", r.stats.nodes}, {"seconds", r.stats.seconds}};
}

inline void from_json(const json & j, RadoResult & r)
{
    static constexpr RadoStatus all[] = {RadoStatus::exact, RadoStatus::lower_bound_only};
    r.status = detail::enum_from(j.at("status").get<std::string>(), all, "rado status");
    r.value = j.at("value").get<Int>();
    r.certificate = parse_certificate(j.at("certificate").get<std::string>(), ColorCount(j.at("colors").get<int>()));
    r.stats.nodes = j.at("nodes").get<std::uint64_t>();
    r.stats.seconds = j.at("seconds").get<double>();
}

inline auto operator==(const RadoResult & x, const RadoResult & y) -> bool
{
    return x.status == y.status && x.value == y.value && x.certificate == y.certificate
        && x.stats.nodes == y.stats.nodes && x.stats.seconds == y.stats.seconds;
}

// ---- stochastic ----

inline void to_json(json & j, const StochasticResult & r)
{
    j = json{{"status", to_string(r.status)}, {"estimate", r.estimate}, {"colors", r.certificate.colors().value()},
        {"certificate", to_certificate(r.certificate)}, {"steps_per_n", r.steps_per_n}};
}

inline void from_json(const json & j, StochasticResult & r)
{
    static constexpr WalkStatus all[] = {WalkStatus::probable_rado, WalkStatus::budget_capped};
    r.status = detail::enum_from(j.at("status").get<std::string>(), all, "walk status");
    r.estimate = j.at("estimate").get<Int>();
    r.certificate = parse_certificate(j.at("certificate").get<std::string>(), ColorCount(j.at("colors").get<int>()));
    r.steps_per_n = j.at("steps_per_n").get<std::vector<std::uint64_t>>();
}

inline auto operator==(const StochasticResult & x, const StochasticResult & y) -> bool
{
    return x.status == y.status && x.estimate == y.estimate && x.certificate == y.certificate
        && x.steps_per_n == y.steps_per_n;
}

// ---- bounds ----

inline void to_json(json & j, const BoundReport & r)
{
    j = json{{"kind", to_string(r.kind)}, {"value", detail::real_to_json(r.value)}, {"strict", r.strict},
        {"integer_bound", r.integer_bound ? json(*r.integer_bound) : json(nullptr)}, {"provenance", r.provenance},
        {"formula", r.formula}, {"conditions_met", r.conditions_met}, {"conditions", r.conditions},
        {"colors", r.colors}, {"parameters", r.parameters}, {"truncated", r.truncated},
        {"certificate", r.certificate ? json(*r.certificate) : json(nullptr)},
        {"auxiliary", r.auxiliary ? detail::real_to_json(*r.auxiliary) : json(nullptr)}};
}

inline void from_json(const json & j, BoundReport & r)
{
    static constexpr BoundKind all[] = {
        BoundKind::exact_value, BoundKind::lower_bound, BoundKind::upper_bound, BoundKind::not_regular};
    r.kind = detail::enum_from(j.at("kind").get<std::string>(), all, "bound kind");
    r.value = detail::real_from_json(j.at("value"));
    r.strict = j.at("strict").get<bool>();
    r.integer_bound = j.at("integer_bound").is_null() ? std::nullopt : std::optional<Int>(j.at("integer_bound").get<Int>());
    r.provenance = j.at("provenance").get<std::string>();
    r.formula = j.at("formula").get<std::string>();
    r.conditions_met = j.at("conditions_met").get<bool>();
    r.conditions = j.at("conditions").get<std::string>();
    r.colors = j.at("colors").get<int>();
    r.parameters = j.at("parameters").get<std::map<std::string, Int>>();
    r.truncated = j.at("truncated").get<bool>();
    r.certificate = j.at("certificate").is_null() ? std::nullopt
                                                  : std::optional<std::string>(j.at("certificate").get<std::string>());
    r.auxiliary = j.at("auxiliary").is_null() ? std::nullopt : std::optional<double>(j.at("auxiliary").get<double>());
}

// ---- counts ----

inline void to_json(json & j, const DistinctnessProfile & p)
{
    j = json{{"by_distinct", p.by_distinct}, {"total", p.total}};
}

inline void from_json(const json & j, DistinctnessProfile & p)
{
    p.by_distinct = j.at("by_distinct").get<std::vector<std::uint64_t>>();
    p.total = j.at("total").get<std::uint64_t>();
}

inline void to_json(json & j, const DependencyStats & s)
{
    json hist = json::object();
    for (auto [deg, count] : s.degree_histogram)
        hist[std::to_string(deg)] = count;
    j = json{{"vertices", s.vertices}, {"max_degree", s.max_degree}, {"degree_histogram", hist}};
}

inline void from_json(const json & j, DependencyStats & s)
{
    s.vertices = j.at("vertices").get<std::uint64_t>();
    s.max_degree = j.at("max_degree").get<std::uint64_t>();
    s.degree_histogram.clear();
    for (auto & [k, v] : j.at("degree_histogram").items())
        s.degree_histogram[std::stoull(k)] = v.get<std::uint64_t>();
}

inline void to_json(json & j, const ClosedFormValue & v)
{
    j = json{{"formula_id", v.formula_id}, {"quantity", v.quantity}, {"relation", to_string(v.relation)},
        {"value", v.value}, {"formula", v.formula}};
}

inline void from_json(const json & j, ClosedFormValue & v)
{
    static constexpr Relation all[] = {Relation::equal, Relation::upper_strict};
    v.formula_id = j.at("formula_id").get<std::string>();
    v.quantity = j.at("quantity").get<std::string>();
    v.relation = detail::enum_from(j.at("relation").get<std::string>(), all, "relation");
    v.value = j.at("value").get<Int>();
    v.formula = j.at("formula").get<std::string>();
}

inline auto operator==(const ClosedFormValue & x, const ClosedFormValue & y) -> bool
{
    return x.formula_id == y.formula_id && x.quantity == y.quantity && x.relation == y.relation && x.value == y.value
        && x.formula == y.formula;
}

// ---- table ----

inline void to_json(json & j, const TableCell & c)
{
    j = json{{"a", c.a}, {"b", c.b}, {"method", to_string(c.method)}, {"value", c.value}, {"display", c.display()},
        {"certificate", c.certificate ? json(*c.certificate) : json(nullptr)},
        {"golden", c.golden ? json(*c.golden) : json(nullptr)}, {"agreement", to_string(c.agreement)},
        {"nodes", c.nodes}, {"seconds", c.seconds}};
}

inline void from_json(const json & j, TableCell & c)
{
    static constexpr CellMethod methods[] = {
        CellMethod::exact, CellMethod::exact_bound, CellMethod::stochastic, CellMethod::skipped};
    static constexpr CellAgreement agreements[] = {CellAgreement::match, CellAgreement::mismatch,
        CellAgreement::confirmed_lower, CellAgreement::exceeds_lower, CellAgreement::unconfirmed,
        CellAgreement::no_golden, CellAgreement::skipped};
    c.a = j.at("a").get<Int>();
    c.b = j.at("b").get<Int>();
    c.method = detail::enum_from(j.at("method").get<std::string>(), methods, "cell method");
    c.value = j.at("value").get<Int>();
    c.certificate = j.at("certificate").is_null() ? std::nullopt
                                                  : std::optional<std::string>(j.at("certificate").get<std::string>());
    c.golden = j.at("golden").is_null() ? std::nullopt : std::optional<Int>(j.at("golden").get<Int>());
    c.agreement = detail::enum_from(j.at("agreement").get<std::string>(), agreements, "cell agreement");
    c.nodes = j.at("nodes").get<std::uint64_t>();
    c.seconds = j.at("seconds").get<double>();
}

inline auto operator==(const TableCell & x, const TableCell & y) -> bool
{
    return x.a == y.a && x.b == y.b && x.method == y.method && x.value == y.value && x.certificate == y.certificate
        && x.golden == y.golden && x.agreement == y.agreement && x.nodes == y.nodes && x.seconds == y.seconds;
}

// ---- envelope ----

/// Common envelope around every CLI result. `result` holds one of the
/// payloads above (or a list of them) as JSON.
struct RunReport {
    std::string command;
    std::optional<std::string> equation_text;
    std::vector<Int> coefficients;
    std::optional<int> colors;
    std::optional<std::uint64_t> seed;
    json budgets = json::object();
    double wall_time_seconds = 0.0;
    json result = json::object();

    friend auto operator==(const RunReport &, const RunReport &) -> bool = default;
};

inline void to_json(json & j, const RunReport & r)
{
    j = json::object();
    j["schema_version"] = report_schema_version;
    j["tool"] = "radolab";
    j["version"] = tool_version;
    j["command"] = r.command;
    if (r.equation_text || ! r.coefficients.empty())
        j["equation"] = json{{"text", r.equation_text ? json(*r.equation_text) : json(nullptr)},
            {"coefficients", r.coefficients}};
    j["colors"] = r.colors ? json(*r.colors) : json(nullptr);
    j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
    j["budgets"] = r.budgets;
    j["result"] = r.result;
    j["wall_time_seconds"] = r.wall_time_seconds;
}

inline void from_json(const json & j, RunReport & r)
{
    if (j.at("schema_version").get<int>() != report_schema_version)
        throw ParseError("unsupported report schema version");
    r.command = j.at("command").get<std::string>();
    r.equation_text.reset();
    r.coefficients.clear();
    if (j.contains("equation")) {
        const auto & e = j.at("equation");
        if (! e.at("text").is_null())
            r.equation_text = e.at("text").get<std::string>();
        r.coefficients = e.at("coefficients").get<std::vector<Int>>();
    }
    r.colors = j.at("colors").is_null() ? std::nullopt : std::optional<int>(j.at("colors").get<int>());
    r.seed = j.at("seed").is_null() ? std::nullopt : std::optional<std::uint64_t>(j.at("seed").get<std::uint64_t>());
    r.budgets = j.at("budgets");
    r.result = j.at("result");
    r.wall_time_seconds = j.at("wall_time_seconds").get<double>();
}

} // namespace radolab
