#pragma once

#include <radolab/bounds.hpp>
#include <radolab/closed_forms.hpp>
#include <radolab/coloring.hpp>
#include <radolab/equation.hpp>
#include <radolab/errors.hpp>
#include <radolab/exact.hpp>
#include <radolab/families.hpp>
#include <radolab/report.hpp>
#include <radolab/sat.hpp>
#include <radolab/solutions.hpp>
#include <radolab/table.hpp>
#include <radolab/walk.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace radolab::cli {

enum ExitCode : int { ok = 0, usage = 1, budget = 2 };

namespace detail {

    struct EquationArgs {
        std::string text;
        std::string coeffs;

        auto given() const -> bool { return ! text.empty() || ! coeffs.empty(); }

        auto resolve() const -> LinearEquation
        {
            if (! text.empty() && ! coeffs.empty())
                throw InvalidArgument("give either --equation or --coeffs, not both");
            if (! text.empty())
                return parse_equation(text);
            if (! coeffs.empty())
                return parse_coefficients(coeffs);
            throw InvalidArgument("an equation is required (--equation or --coeffs)");
        }
    };

    struct BudgetArgs {
        std::optional<std::uint64_t> node_cap;
        std::optional<double> time_cap;
        std::optional<Int> n_cap;
        std::optional<double> k_factor;
        std::optional<std::uint64_t> step_cap;
        std::string seed;

        auto profile() const -> BudgetProfile { return budget_profile_from_env(); }

        auto budgets() const -> Budgets
        {
            Budgets b = budgets_for(profile());
            if (node_cap)
                b.exact.node_cap = *node_cap;
            if (time_cap)
                b.exact.time_cap_seconds = *time_cap;
            if (n_cap) {
                b.exact.n_cap = *n_cap;
                b.walk.n_cap = *n_cap;
            }
            if (k_factor) {
                if (! (*k_factor > 0))
                    throw InvalidArgument("--k-factor must be positive");
                b.walk.k_factor = *k_factor;
            }
            if (step_cap) {
                if (*step_cap < 1)
                    throw InvalidArgument("--step-cap must be at least 1");
                b.walk.step_cap = *step_cap;
            }
            b.walk.seed = resolve_seed();
            return b;
        }

        auto resolve_seed() const -> std::uint64_t
        {
            if (seed.empty())
                return default_seed;
            if (seed == "random")
                return (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}();
            try {
                std::size_t used = 0;
                auto v = std::stoull(seed, &used);
                if (used != seed.size())
                    throw std::invalid_argument(seed);
                return v;
            }
            catch (const std::logic_error &) {
                throw InvalidArgument("--seed must be a non-negative integer or \"random\"");
            }
        }
    };

    inline auto budgets_json(const Budgets & b, BudgetProfile p) -> json
    {
        return json{{"profile", to_string(p)}, {"node_cap", b.exact.node_cap},
            {"time_cap_seconds", b.exact.time_cap_seconds}, {"n_cap", b.exact.n_cap},
            {"k_factor", b.walk.k_factor}, {"step_cap", b.walk.step_cap},
            {"enumeration_cap", b.exact.enumeration_cap}};
    }

    inline auto envelope(const std::string & command, const LinearEquation & eq) -> RunReport
    {
        RunReport r;
        r.command = command;
        r.equation_text = eq.display_form().empty() ? render(eq) : eq.display_form();
        r.coefficients.assign(eq.coefficients().begin(), eq.coefficients().end());
        return r;
    }

    // Parses "3", "1..4" or "" (empty range).
    inline auto parse_range(const std::string & text) -> std::pair<Int, Int>
    {
        if (text.empty())
            return {1, 0};
        auto dots = text.find("..");
        try {
            if (dots == std::string::npos) {
                Int v = std::stoll(text);
                return {v, v};
            }
            return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
        }
        catch (const std::logic_error &) {
            throw InvalidArgument("invalid range \"" + text + "\" (expected N or LO..HI)");
        }
    }

    inline auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in(path);
        if (! in)
            throw InvalidArgument("cannot read " + path);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    // All bounds that apply to `eq` with c colors.
    inline auto collect_bounds(const LinearEquation & eq, ColorCount c, Int search_cap, std::uint64_t enum_cap)
        -> std::vector<BoundReport>
    {
        std::vector<BoundReport> out;
        auto families = recognize_families(eq);
        if (c.value() == 2) {
            for (const auto & f : families) {
                try {
                    out.push_back(family_value_2color(f));
                }
                catch (const UnsupportedFamily &) {
                }
            }
            if (auto m = multiples_lower_bound(eq))
                out.push_back(*m);
            if (auto q = quadratic_upper_bound(eq))
                out.push_back(*q);
        }
        out.push_back(prob_lower_bound_search(eq, c, search_cap, enum_cap));
        out.push_back(lll_lower_bound_search(eq, c, search_cap, LllExponent::arity, enum_cap));
        out.push_back(lll_lower_bound_search(eq, c, search_cap, LllExponent::arity_minus_one, enum_cap));
        for (const auto & f : families) {
            if (f.family == Family::difference)
                for (auto & r : prob_lower_bound_closed(f.b, c))
                    out.push_back(r);
            if (f.family == Family::scaled_difference) {
                try {
                    for (auto & r : lll_lower_bound_closed(f.a, f.b, c))
                        out.push_back(r);
                }
                catch (const UnsupportedFamily &) {
                }
            }
        }
        return out;
    }

    // Closed-form bounds known not to follow from the searches they summarise.
    inline auto known_discrepancy(const BoundReport & r) -> bool
    {
        return r.provenance == "probabilistic.difference.closed-form";
    }

    /// Whether a bound is consistent with the exact value; nullopt when the
    /// report carries no integer claim or is inapplicable.
    inline auto consistent_with(const BoundReport & r, Int exact) -> std::optional<bool>
    {
        if (! r.conditions_met || ! r.integer_bound)
            return std::nullopt;
        switch (r.kind) {
        case BoundKind::exact_value: return *r.integer_bound == exact;
        case BoundKind::lower_bound: return *r.integer_bound <= exact;
        case BoundKind::upper_bound: return *r.integer_bound >= exact;
        case BoundKind::not_regular: return false;
        }
        return std::nullopt;
    }

    inline void emit(const json & j, const std::string & path, std::ostream & out)
    {
        if (path.empty()) {
            out << j.dump(2) << '\n';
            return;
        }
        std::ofstream f(path);
        if (! f)
            throw InvalidArgument("cannot write " + path);
        f << j.dump(2) << '\n';
    }

    inline void emit_text(const std::string & text, const std::string & path, std::ostream & out)
    {
        if (path.empty()) {
            out << text;
            return;
        }
        std::ofstream f(path);
        if (! f)
            throw InvalidArgument("cannot write " + path);
        f << text;
    }

    inline auto elapsed_since(std::chrono::steady_clock::time_point t) -> double
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
    }

} // namespace detail

/// Runs one CLI invocation. Reports go to `out`, diagnostics to `err`.
inline auto run_command(int argc, const char * const * argv, std::ostream & out = std::cout,
    std::ostream & err = std::cerr) -> int
{
    using namespace detail;
    CLI::App app{"Compute, estimate and bound Rado numbers of linear equations", "radolab"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);

    EquationArgs eqa;
    BudgetArgs ba;
    int colors = 2;
    bool quiet = false;
    std::string output;

    auto add_equation = [&](CLI::App * sub) {
        sub->add_option("-e,--equation", eqa.text, "equation text, e.g. \"x - y = 2z\"");
        sub->add_option("--coeffs", eqa.coeffs, "coefficient list, e.g. 1,-1,-2");
    };
    auto add_common = [&](CLI::App * sub) {
        sub->add_option("-c,--colors", colors, "number of colors")->check(CLI::Range(2, 36));
        sub->add_flag("--quiet", quiet, "print only the value");
        sub->add_option("-o", output, "write the report to this file");
    };
    auto add_exact_budget = [&](CLI::App * sub) {
        sub->add_option("--node-cap", ba.node_cap, "search nodes per N");
        sub->add_option("--time-cap", ba.time_cap, "seconds per N");
        sub->add_option("--n-cap", ba.n_cap, "largest N to try");
    };
    auto add_walk_budget = [&](CLI::App * sub) {
        sub->add_option("--seed", ba.seed, "RNG seed, or \"random\"");
        sub->add_option("--k-factor", ba.k_factor, "multiplier on the per-N step budget");
        sub->add_option("--step-cap", ba.step_cap, "maximum steps per N");
    };

    auto * compute = app.add_subcommand("compute", "exact Rado number by exhaustive search");
    add_equation(compute);
    add_common(compute);
    add_exact_budget(compute);

    auto * search = app.add_subcommand("search", "Rado number estimate by random walk");
    add_equation(search);
    add_common(search);
    add_walk_budget(search);
    search->add_option("--n-cap", ba.n_cap, "largest N to try");

    Int bound_cap = 500;
    bool with_exact = false;
    auto * bound = app.add_subcommand("bound", "all applicable closed-form and search bounds");
    add_equation(bound);
    add_common(bound);
    bound->add_option("--search-cap", bound_cap, "largest N scanned by the bound searches");
    bound->add_flag("--with-exact", with_exact, "also run the exact solver and check every bound against it");
    add_exact_budget(bound);

    Int count_n = 0;
    bool dump_solutions = false;
    auto * count = app.add_subcommand("count", "solution counts and dependency degree over [1, N]");
    add_equation(count);
    count->add_option("-n,--interval", count_n, "interval bound N")->required();
    count->add_flag("--solutions", dump_solutions, "print the solution tuples instead");
    count->add_flag("--quiet", quiet, "print only the total");
    count->add_option("-o", output, "write the report to this file");

    Int export_n = 0;
    auto * export_cnf = app.add_subcommand("export-cnf", "DIMACS CNF for colorings of [1, N]");
    add_equation(export_cnf);
    export_cnf->add_option("-c,--colors", colors, "number of colors")->check(CLI::Range(2, 36));
    export_cnf->add_option("-n,--interval", export_n, "interval bound N")->required();
    export_cnf->add_option("-o", output, "write DIMACS to this file (a JSON summary goes to stdout)");
    export_cnf->add_flag("--quiet", quiet, "suppress the summary when writing to a file");

    std::string coloring_text, model_path, cnf_path;
    auto * verify = app.add_subcommand("verify", "check a coloring or a SAT model for monochromatic solutions");
    add_equation(verify);
    add_common(verify);
    verify->add_option("--coloring", coloring_text, "certificate string, e.g. 0110");
    verify->add_option("--model", model_path, "SAT solver model file");
    verify->add_option("--cnf", cnf_path, "DIMACS file the model belongs to (supplies the variable map)");

    std::string family_text, a_range, b_range;
    bool csv = false, attempt_all = false;
    auto * table = app.add_subcommand("table", "recompute a region of a published table");
    table->add_option("--family", family_text, "family id, e.g. \"2x+2y+az=bw\" or \"a(x-y)=bz\"")->required();
    table->add_option("--a", a_range, "a range, e.g. 1..4");
    table->add_option("--b", b_range, "b range, e.g. 1..10");
    add_common(table);
    add_exact_budget(table);
    add_walk_budget(table);
    table->add_flag("--csv", csv, "CSV instead of JSON");
    table->add_flag("--all", attempt_all, "attempt cells above the profile's value cap");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return ok;
    }
    catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    }
    catch (const CLI::CallForVersion &) {
        out << tool_version << '\n';
        return ok;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    const auto started = std::chrono::steady_clock::now();
    try {
        const ColorCount c(colors);
        const Budgets budgets = ba.budgets();
        const BudgetProfile profile = ba.profile();

        if (compute->parsed()) {
            auto eq = eqa.resolve();
            auto r = compute_rado(eq, c, budgets.exact);
            auto rep = envelope("compute", eq);
            rep.colors = colors;
            rep.budgets = budgets_json(budgets, profile);
            rep.result = r;
            rep.wall_time_seconds = elapsed_since(started);
            if (quiet)
                emit_text(std::to_string(r.value) + (r.status == RadoStatus::exact ? "" : "+") + "\n", output, out);
            else
                emit(rep, output, out);
            return r.status == RadoStatus::exact ? ok : budget;
        }

        if (search->parsed()) {
            auto eq = eqa.resolve();
            std::mt19937_64 rng(budgets.walk.seed);
            auto r = estimate_rado(eq, c, budgets.walk, rng);
            auto rep = envelope("search", eq);
            rep.colors = colors;
            rep.seed = budgets.walk.seed;
            rep.budgets = budgets_json(budgets, profile);
            rep.result = r;
            rep.wall_time_seconds = elapsed_since(started);
            if (quiet)
                emit_text(std::to_string(r.estimate) + "\n", output, out);
            else
                emit(rep, output, out);
            return r.status == WalkStatus::probable_rado ? ok : budget;
        }

        if (bound->parsed()) {
            auto eq = eqa.resolve();
            auto reports = collect_bounds(eq, c, bound_cap, budgets.exact.enumeration_cap);
            auto rep = envelope("bound", eq);
            rep.colors = colors;
            rep.budgets = budgets_json(budgets, profile);
            json result{{"regular", is_regular(eq).regular}, {"bounds", reports}};
            int code = ok;
            if (with_exact) {
                auto r = compute_rado(eq, c, budgets.exact);
                result["exact"] = r;
                json checks = json::array();
                bool all_ok = true;
                for (const auto & b : reports) {
                    std::optional<bool> verdict;
                    if (r.status == RadoStatus::exact)
                        verdict = consistent_with(b, r.value);
                    else if (b.conditions_met && b.integer_bound && b.kind == BoundKind::upper_bound)
                        verdict = *b.integer_bound >= r.value;  // r.value is only a lower bound here
                    std::string status = ! verdict ? "not_checked"
                        : *verdict                 ? "consistent"
                        : known_discrepancy(b)     ? "known_discrepancy"
                                                   : "contradiction";
                    if (status == "contradiction")
                        all_ok = false;
                    checks.push_back({{"provenance", b.provenance}, {"status", status}});
                }
                result["checks"] = checks;
                result["consistent"] = all_ok;
                if (r.status != RadoStatus::exact)
                    code = budget;
            }
            rep.result = result;
            rep.wall_time_seconds = elapsed_since(started);
            if (quiet) {
                std::ostringstream s;
                for (const auto & b : reports)
                    s << b.provenance << ' ' << to_string(b.kind) << ' '
                      << (b.integer_bound ? std::to_string(*b.integer_bound) : "inf")
                      << (b.conditions_met ? "" : " (conditions not met)") << '\n';
                emit_text(s.str(), output, out);
            }
            else
                emit(rep, output, out);
            return code;
        }

        if (count->parsed()) {
            auto eq = eqa.resolve();
            if (count_n < 1)
                throw InvalidArgument("interval bound must be at least 1");
            auto set = enumerate_solutions(eq, count_n, budgets.exact.enumeration_cap);
            if (dump_solutions) {
                std::ostringstream s;
                write_solutions(s, set);
                emit_text(s.str(), output, out);
                return ok;
            }
            auto profile_psi = psi_profile(set);
            auto stats = phi_max_degree(set);
            json closed = json::array();
            for (const auto & f : recognize_families(eq)) {
                json entry{{"family", family_id(f.family)}, {"a", f.a}, {"b", f.b}};
                json values = json::array();
                try {
                    for (const auto & v : psi_closed_form(f, count_n))
                        values.push_back(v);
                }
                catch (const UnsupportedFamily &) {
                }
                try {
                    values.push_back(phi_closed_form(f, count_n));
                }
                catch (const UnsupportedFamily &) {
                }
                if (! values.empty()) {
                    entry["closed_forms"] = values;
                    closed.push_back(entry);
                }
            }
            auto rep = envelope("count", eq);
            rep.budgets = budgets_json(budgets, profile);
            rep.result = json{{"n", count_n}, {"psi", profile_psi}, {"phi", stats}, {"closed_forms", closed}};
            rep.wall_time_seconds = elapsed_since(started);
            if (quiet)
                emit_text(std::to_string(profile_psi.total) + "\n", output, out);
            else
                emit(rep, output, out);
            return ok;
        }

        if (export_cnf->parsed()) {
            auto eq = eqa.resolve();
            auto f = c.value() == 2 ? encode_2color(eq, export_n, budgets.exact.enumeration_cap)
                                    : encode_ccolor(eq, c, export_n, budgets.exact.enumeration_cap);
            auto text = to_dimacs(f);
            if (output.empty()) {
                out << text;
                return ok;
            }
            emit_text(text, output, out);
            if (! quiet) {
                auto rep = envelope("export-cnf", eq);
                rep.colors = colors;
                rep.result = json{{"n", export_n}, {"num_vars", f.num_vars}, {"num_clauses", f.clauses.size()},
                    {"file", output}};
                rep.wall_time_seconds = elapsed_since(started);
                emit(rep, "", out);
            }
            return ok;
        }

        if (verify->parsed()) {
            auto eq = eqa.resolve();
            std::optional<Coloring> coloring;
            if (! coloring_text.empty() && ! model_path.empty())
                throw InvalidArgument("give either --coloring or --model, not both");
            if (! coloring_text.empty()) {
                auto probe = parse_certificate(coloring_text);
                coloring = parse_certificate(coloring_text, ColorCount(std::max(colors, probe.colors().value())));
            }
            else if (! model_path.empty()) {
                if (cnf_path.empty())
                    throw InvalidArgument("--model needs --cnf for the variable map");
                auto f = parse_dimacs(read_file(cnf_path));
                Int n = 0;
                for (const auto & k : f.var_map)
                    n = std::max(n, k.integer);
                coloring = decode_model(parse_model(read_file(model_path)), c, n, f.var_map);
            }
            else
                throw InvalidArgument("verify needs --coloring or --model");
            auto mono = verify_coloring(eq, *coloring, budgets.exact.enumeration_cap);
            std::string message = "no monochromatic solution";
            if (mono) {
                message = "monochromatic solution:";
                for (auto v : *mono)
                    message += " " + std::to_string(v);
            }
            auto rep = envelope("verify", eq);
            rep.colors = coloring->colors().value();
            rep.result = json{{"coloring", to_certificate(*coloring)}, {"n", coloring->interval()},
                {"valid", ! mono.has_value()},
                {"monochromatic_solution", mono ? json(*mono) : json(nullptr)}, {"message", message}};
            rep.wall_time_seconds = elapsed_since(started);
            if (quiet)
                emit_text(message + "\n", output, out);
            else
                emit(rep, output, out);
            return ok;
        }

        if (table->parsed()) {
            TableRequest req;
            req.family = parse_family(family_text);
            std::tie(req.a_min, req.a_max) = parse_range(a_range);
            std::tie(req.b_min, req.b_max) = parse_range(b_range);
            req.colors = c;
            req.budgets = budgets;
            req.attempt_all = attempt_all;
            auto cells = reproduce_table(req);
            if (csv) {
                emit_text(table_csv(cells, req.family, c), output, out);
                return ok;
            }
            if (quiet) {
                std::ostringstream s;
                for (const auto & cell : cells)
                    s << cell.display() << '\n';
                emit_text(s.str(), output, out);
                return ok;
            }
            RunReport rep;
            rep.command = "table";
            rep.colors = colors;
            rep.seed = budgets.walk.seed;
            rep.budgets = budgets_json(budgets, profile);
            std::map<std::string, int> summary;
            for (const auto & cell : cells)
                ++summary[to_string(cell.agreement)];
            rep.result = json{{"family", family_id(req.family)}, {"cells", cells}, {"summary", summary}};
            rep.wall_time_seconds = elapsed_since(started);
            emit(rep, output, out);
            return ok;
        }
    }
    catch (const BudgetExceeded & e) {
        err << "budget exceeded: " << e.what() << '\n';
        return budget;
    }
    catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

} // namespace radolab::cli
