#pragma once

#include <radolab/coloring.hpp>
#include <radolab/errors.hpp>
#include <radolab/exact.hpp>
#include <radolab/families.hpp>
#include <radolab/walk.hpp>

#include <radolab/golden_data.hpp>

#include <chrono>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace radolab {

/// Named budget presets selected by RADOLAB_BUDGET_PROFILE.
enum class BudgetProfile { desk, ci, long_run };

inline auto to_string(BudgetProfile p) -> std::string
{
    switch (p) {
    case BudgetProfile::desk: return "desk";
    case BudgetProfile::ci: return "ci";
    case BudgetProfile::long_run: return "long";
    }
    return "?";
}

inline auto parse_budget_profile(std::string_view name) -> BudgetProfile
{
    if (name == "desk")
        return BudgetProfile::desk;
    if (name == "ci")
        return BudgetProfile::ci;
    if (name == "long")
        return BudgetProfile::long_run;
    throw InvalidArgument("unknown budget profile \"" + std::string(name) + "\" (expected desk, ci or long)");
}

/// Unset or empty means desk.
inline auto budget_profile_from_env() -> BudgetProfile
{
    const char * v = std::getenv("RADOLAB_BUDGET_PROFILE");
    if (! v || ! *v)
        return BudgetProfile::desk;
    return parse_budget_profile(v);
}

struct Budgets {
    SearchLimits exact;
    WalkConfig walk;
    // table cells whose published value exceeds this are skipped; nullopt = attempt all
    std::optional<Int> table_value_cap;
};

inline auto budgets_for(BudgetProfile p) -> Budgets
{
    Budgets b;
    switch (p) {
    case BudgetProfile::desk:
        b.exact.node_cap = 1'000'000'000;
        b.exact.time_cap_seconds = 300;
        b.walk.step_cap = 10'000'000;
        b.table_value_cap = 60;
        break;
    case BudgetProfile::ci:
        b.exact.node_cap = 50'000'000;
        b.exact.time_cap_seconds = 20;
        b.walk.step_cap = 2'000'000;
        b.table_value_cap = 40;
        break;
    case BudgetProfile::long_run:
        b.exact.node_cap = 100'000'000'000;
        b.exact.time_cap_seconds = 3600;
        b.walk.step_cap = 1'000'000'000;
        b.table_value_cap = std::nullopt;
        break;
    }
    return b;
}

/// One published table entry.
struct GoldenCell {
    int colors = 2;
    Family family = Family::two_two_ab;
    Int a = 0;
    Int b = 0;
    Int value = 0;
    std::string source;
};

/// Parses "source,colors,family,a,b,value" CSV with a header line.
inline auto parse_golden_csv(std::string_view text) -> std::vector<GoldenCell>
{
    std::vector<GoldenCell> cells;
    std::istringstream in{std::string(text)};
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ls(line);
        std::string part;
        while (std::getline(ls, part, ','))
            f.push_back(part);
        if (f.size() != 6)
            throw ParseError("golden row needs 6 fields: " + line);
        cells.push_back({std::stoi(f[1]), parse_family(f[2]), std::stoll(f[3]), std::stoll(f[4]), std::stoll(f[5]),
            f[0]});
    }
    return cells;
}

inline auto golden_cells() -> const std::vector<GoldenCell> &
{
    static const std::vector<GoldenCell> cells = [] {
        auto two = parse_golden_csv(golden::two_color_csv);
        auto three = parse_golden_csv(golden::three_color_csv);
        two.insert(two.end(), three.begin(), three.end());
        return two;
    }();
    return cells;
}

inline auto golden_value(int colors, Family family, Int a, Int b) -> std::optional<Int>
{
    for (const auto & g : golden_cells())
        if (g.colors == colors && g.family == family && g.a == a && g.b == b)
            return g.value;
    return std::nullopt;
}

enum class CellMethod { exact, exact_bound, stochastic, skipped };

inline auto to_string(CellMethod m) -> std::string
{
    switch (m) {
    case CellMethod::exact: return "exact";
    case CellMethod::exact_bound: return "lower_bound";
    case CellMethod::stochastic: return "stochastic";
    case CellMethod::skipped: return "skipped";
    }
    return "?";
}

/// Comparison of a computed cell with the published value.
enum class CellAgreement {
    match,           // computed value equals the published one
    mismatch,        // exact value differs from a published exact value
    confirmed_lower, // certificate reaches published - 1 (published read as a lower bound)
    exceeds_lower,   // exact value larger than the published lower bound
    unconfirmed,     // no certificate reaching published - 1
    no_golden,
    skipped
};

inline auto to_string(CellAgreement a) -> std::string
{
    switch (a) {
    case CellAgreement::match: return "match";
    case CellAgreement::mismatch: return "mismatch";
    case CellAgreement::confirmed_lower: return "confirmed_lower";
    case CellAgreement::exceeds_lower: return "exceeds_lower";
    case CellAgreement::unconfirmed: return "unconfirmed";
    case CellAgreement::no_golden: return "no_golden";
    case CellAgreement::skipped: return "skipped";
    }
    return "?";
}

struct TableCell {
    Int a = 0;
    Int b = 0;
    CellMethod method = CellMethod::skipped;
    Int value = 0;                           // meaningless when skipped
    std::optional<std::string> certificate;  // valid coloring of [1, value - 1]
    std::optional<Int> golden;
    CellAgreement agreement = CellAgreement::skipped;
    std::uint64_t nodes = 0;
    double seconds = 0.0;

    /// "29", "~29" for a stochastic estimate, ">=29" for a budget-limited exact run, "-" when skipped.
    auto display() const -> std::string
    {
        switch (method) {
        case CellMethod::exact: return std::to_string(value);
        case CellMethod::exact_bound: return ">=" + std::to_string(value);
        case CellMethod::stochastic: return "~" + std::to_string(value);
        case CellMethod::skipped: return "-";
        }
        return "?";
    }
};

struct TableRequest {
    Family family = Family::two_two_ab;
    Int a_min = 1, a_max = 0;
    Int b_min = 1, b_max = 0;
    ColorCount colors{2};
    Budgets budgets;
    bool attempt_all = false;  // ignore table_value_cap
};

namespace detail {

    inline auto agree(const TableCell & cell, int colors) -> CellAgreement
    {
        if (cell.method == CellMethod::skipped)
            return CellAgreement::skipped;
        if (! cell.golden)
            return CellAgreement::no_golden;
        const Int g = *cell.golden;
        if (colors == 2) {
            if (cell.method == CellMethod::exact)
                return cell.value == g ? CellAgreement::match : CellAgreement::mismatch;
            return cell.value == g ? CellAgreement::match
                : cell.value >= g  ? CellAgreement::confirmed_lower
                                   : CellAgreement::unconfirmed;
        }
        if (cell.method == CellMethod::exact && cell.value == g)
            return CellAgreement::match;
        if (cell.method == CellMethod::exact && cell.value > g)
            return CellAgreement::exceeds_lower;
        if (cell.value - 1 >= g - 1)
            return CellAgreement::confirmed_lower;
        return CellAgreement::unconfirmed;
    }

} // namespace detail

/// Computes one table cell: exact search within budget, then the random walk
/// when the exact search runs out of budget.
inline auto reproduce_cell(Family family, Int a, Int b, ColorCount c, const Budgets & budgets, bool attempt_all = false)
    -> TableCell
{
    TableCell cell;
    cell.a = a;
    cell.b = b;
    cell.golden = golden_value(c.value(), family, a, b);
    if (! attempt_all && budgets.table_value_cap && cell.golden && *cell.golden > *budgets.table_value_cap) {
        cell.agreement = CellAgreement::skipped;
        return cell;
    }
    auto eq = family_equation({family, a, b});
    auto r = compute_rado(eq, c, budgets.exact);
    cell.nodes = r.stats.nodes;
    cell.seconds = r.stats.seconds;
    cell.value = r.value;
    cell.certificate = to_certificate(r.certificate);
    cell.method = r.status == RadoStatus::exact ? CellMethod::exact : CellMethod::exact_bound;
    if (r.status != RadoStatus::exact) {
        auto start = std::chrono::steady_clock::now();
        auto s = estimate_rado(eq, c, budgets.walk);
        cell.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (s.estimate > cell.value) {
            cell.method = CellMethod::stochastic;
            cell.value = s.estimate;
            cell.certificate = to_certificate(s.certificate);
        }
    }
    cell.agreement = detail::agree(cell, c.value());
    return cell;
}

/// Cells in column-major order: a outer, b inner. An empty range gives no cells.
inline auto reproduce_table(const TableRequest & req) -> std::vector<TableCell>
{
    std::vector<TableCell> cells;
    for (Int a = req.a_min; a <= req.a_max; ++a)
        for (Int b = req.b_min; b <= req.b_max; ++b)
            cells.push_back(reproduce_cell(req.family, a, b, req.colors, req.budgets, req.attempt_all));
    return cells;
}

inline auto table_csv(const std::vector<TableCell> & cells, Family family, ColorCount c) -> std::string
{
    std::ostringstream out;
    out << "family,colors,a,b,value,method,golden,agreement\n";
    for (const auto & cell : cells) {
        out << family_id(family) << ',' << c.value() << ',' << cell.a << ',' << cell.b << ',' << cell.display() << ','
            << to_string(cell.method) << ',' << (cell.golden ? std::to_string(*cell.golden) : "") << ','
            << to_string(cell.agreement) << '\n';
    }
    return out.str();
}

} // namespace radolab
