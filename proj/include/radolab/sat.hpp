#pragma once

#include <radolab/arith.hpp>
#include <radolab/coloring.hpp>
#include <radolab/equation.hpp>
#include <radolab/errors.hpp>
#include <radolab/solutions.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace radolab {

using Literal = std::int64_t;
using Clause = std::vector<Literal>;

/// What a CNF variable stands for. color = -1 marks the 2-color encoding,
/// where the variable is true iff the integer gets color 1.
struct VarKey {
    Int integer = 0;
    int color = -1;

    friend auto operator==(const VarKey &, const VarKey &) -> bool = default;
};

struct CnfFormula {
    std::int64_t num_vars = 0;
    std::vector<Clause> clauses;
    std::vector<VarKey> var_map;  // entry v-1 describes variable v; may be empty

    friend auto operator==(const CnfFormula &, const CnfFormula &) -> bool = default;
};

/// Variable for integer i, color l (1-based) in the c-color one-hot encoding.
inline auto ccolor_var(Int i, int l, ColorCount c) -> Literal { return (i - 1) * c.value() + l; }

/// var(i) = i; per solution one all-positive and one all-negative clause over
/// its distinct integers. A constant solution yields the unit pair (v)(-v).
inline auto encode_2color(const LinearEquation & eq, Int n, std::uint64_t cap = default_enumeration_cap) -> CnfFormula
{
    if (n < 1)
        throw InvalidArgument("interval bound must be at least 1");
    auto set = enumerate_solutions(eq, n, cap);
    CnfFormula f;
    f.num_vars = n;
    for (Int i = 1; i <= n; ++i)
        f.var_map.push_back({i, -1});
    for (std::size_t s = 0; s < set.size(); ++s) {
        auto d = distinct_values(set[s]);
        Clause pos(d.begin(), d.end());
        Clause neg;
        for (auto v : d)
            neg.push_back(-v);
        f.clauses.push_back(std::move(pos));
        f.clauses.push_back(std::move(neg));
    }
    return f;
}

/// One-hot encoding: exactly one color per integer, and for each solution and
/// each color an all-negative clause over the solution's distinct integers.
inline auto encode_ccolor(const LinearEquation & eq, ColorCount c, Int n, std::uint64_t cap = default_enumeration_cap)
    -> CnfFormula
{
    if (n < 1)
        throw InvalidArgument("interval bound must be at least 1");
    auto set = enumerate_solutions(eq, n, cap);
    const int k = c.value();
    CnfFormula f;
    f.num_vars = n * k;
    for (Int i = 1; i <= n; ++i)
        for (int l = 1; l <= k; ++l)
            f.var_map.push_back({i, l});
    for (Int i = 1; i <= n; ++i) {
        Clause at_least;
        for (int l = 1; l <= k; ++l)
            at_least.push_back(ccolor_var(i, l, c));
        f.clauses.push_back(std::move(at_least));
        for (int l = 1; l <= k; ++l)
            for (int m = l + 1; m <= k; ++m)
                f.clauses.push_back({-ccolor_var(i, l, c), -ccolor_var(i, m, c)});
    }
    for (std::size_t s = 0; s < set.size(); ++s) {
        auto d = distinct_values(set[s]);
        for (int l = 1; l <= k; ++l) {
            Clause cl;
            for (auto v : d)
                cl.push_back(-ccolor_var(v, l, c));
            f.clauses.push_back(std::move(cl));
        }
    }
    return f;
}

/// DIMACS text. The var_map goes into comment lines "c var <id> <integer> [<color>]"
/// ahead of the header.
inline void write_dimacs(std::ostream & out, const CnfFormula & f)
{
    for (std::size_t v = 0; v < f.var_map.size(); ++v) {
        out << "c var " << v + 1 << ' ' << f.var_map[v].integer;
        if (f.var_map[v].color >= 0)
            out << ' ' << f.var_map[v].color;
        out << '\n';
    }
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto & cl : f.clauses) {
        for (auto lit : cl)
            out << lit << ' ';
        out << "0\n";
    }
}

inline auto to_dimacs(const CnfFormula & f) -> std::string
{
    std::ostringstream out;
    write_dimacs(out, f);
    return out.str();
}

namespace detail {

    inline auto split_ws(std::string_view line) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            std::size_t j = i;
            while (j < line.size() && ! std::isspace(static_cast<unsigned char>(line[j])))
                ++j;
            if (j > i)
                out.push_back(line.substr(i, j - i));
            i = j;
        }
        return out;
    }

    inline auto to_int(std::string_view tok, const char * what) -> std::int64_t
    {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || p != tok.data() + tok.size())
            throw ParseError(std::string("invalid integer \"") + std::string(tok) + "\" in " + what);
        return v;
    }

} // namespace detail

/// Parses DIMACS produced by write_dimacs or any standard writer.
/// Unrecognised comment lines are ignored.
inline auto parse_dimacs(std::string_view text) -> CnfFormula
{
    CnfFormula f;
    bool header = false;
    std::size_t expected_clauses = 0;
    Clause current;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto tokens = detail::split_ws(text.substr(pos, end - pos));
        pos = end + 1;
        if (tokens.empty())
            continue;
        if (tokens[0] == "c") {
            if (tokens.size() >= 4 && tokens[1] == "var") {
                auto id = detail::to_int(tokens[2], "variable comment");
                VarKey key{detail::to_int(tokens[3], "variable comment"),
                    tokens.size() >= 5 ? static_cast<int>(detail::to_int(tokens[4], "variable comment")) : -1};
                if (id != static_cast<std::int64_t>(f.var_map.size()) + 1)
                    throw ParseError("variable comments out of order");
                f.var_map.push_back(key);
            }
            continue;
        }
        if (tokens[0] == "p") {
            if (header || tokens.size() != 4 || tokens[1] != "cnf")
                throw ParseError("malformed DIMACS header");
            f.num_vars = detail::to_int(tokens[2], "header");
            expected_clauses = static_cast<std::size_t>(detail::to_int(tokens[3], "header"));
            header = true;
            continue;
        }
        if (! header)
            throw ParseError("clause before DIMACS header");
        for (auto tok : tokens) {
            auto lit = detail::to_int(tok, "clause");
            if (lit == 0) {
                f.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (lit > f.num_vars || -lit > f.num_vars)
                throw ParseError("literal " + std::to_string(lit) + " out of range");
            current.push_back(lit);
        }
    }
    if (! header)
        throw ParseError("missing DIMACS header");
    if (! current.empty())
        throw ParseError("unterminated clause");
    if (f.clauses.size() != expected_clauses)
        throw ParseError("header declares " + std::to_string(expected_clauses) + " clauses, found "
            + std::to_string(f.clauses.size()));
    return f;
}

/// Solver output: whitespace-separated signed integers, "v " prefixes and a
/// trailing 0 allowed, "s ..." status and "c ..." comment lines skipped.
inline auto parse_model(std::string_view text) -> std::vector<Literal>
{
    std::vector<Literal> model;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto tokens = detail::split_ws(text.substr(pos, end - pos));
        pos = end + 1;
        if (tokens.empty() || tokens[0] == "c" || tokens[0] == "s")
            continue;
        for (auto tok : tokens) {
            if (tok == "v")
                continue;
            auto lit = detail::to_int(tok, "model");
            if (lit != 0)
                model.push_back(lit);
        }
    }
    return model;
}

/// Turns a model into a coloring of [1, n] through the formula's var_map.
/// Throws ModelError when a variable is unassigned or an integer has no or
/// several colors.
inline auto decode_model(std::span<const Literal> assignment, ColorCount c, Int n, const std::vector<VarKey> & var_map)
    -> Coloring
{
    const auto num_vars = static_cast<std::int64_t>(var_map.size());
    std::vector<signed char> value(var_map.size(), 0);
    for (auto lit : assignment) {
        auto v = lit < 0 ? -lit : lit;
        if (v < 1 || v > num_vars)
            throw ModelError("model literal " + std::to_string(lit) + " out of range");
        signed char s = lit > 0 ? 1 : -1;
        auto & slot = value[static_cast<std::size_t>(v - 1)];
        if (slot != 0 && slot != s)
            throw ModelError("model assigns variable " + std::to_string(v) + " both ways");
        slot = s;
    }
    for (std::size_t v = 0; v < value.size(); ++v)
        if (value[v] == 0)
            throw ModelError("model leaves variable " + std::to_string(v + 1) + " unassigned");

    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (std::size_t v = 0; v < var_map.size(); ++v) {
        const auto & key = var_map[v];
        if (key.integer < 1 || key.integer > n)
            continue;
        auto & slot = color[static_cast<std::size_t>(key.integer - 1)];
        if (key.color < 0) {
            if (c.value() != 2)
                throw ModelError("direct variables only encode 2-colorings");
            slot = value[v] > 0 ? 1 : 0;
            continue;
        }
        if (value[v] < 0)
            continue;
        if (slot >= 0)
            throw ModelError("integer " + std::to_string(key.integer) + " has more than one color");
        if (key.color > c.value())
            throw ModelError("color index " + std::to_string(key.color) + " exceeds color count");
        slot = key.color - 1;
    }
    std::vector<std::uint8_t> colors;
    for (Int i = 1; i <= n; ++i) {
        int k = color[static_cast<std::size_t>(i - 1)];
        if (k < 0)
            throw ModelError("integer " + std::to_string(i) + " has no color");
        colors.push_back(static_cast<std::uint8_t>(k));
    }
    return Coloring(c, std::move(colors));
}

} // namespace radolab
