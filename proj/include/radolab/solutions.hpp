#pragma once

#include <radolab/arith.hpp>
#include <radolab/equation.hpp>
#include <radolab/errors.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace radolab {

/// Default cap on candidate tuples examined by enumerate_solutions.
inline constexpr std::uint64_t default_enumeration_cap = 100'000'000;

/// All solutions of an equation in [1, N]^arity, lexicographically sorted.
class SolutionSet {
public:
    SolutionSet(LinearEquation equation, Int n) : _equation(std::move(equation)), _n(n) {}

    auto equation() const -> const LinearEquation & { return _equation; }
    auto interval() const -> Int { return _n; }
    auto arity() const -> std::size_t { return _equation.arity(); }
    auto size() const -> std::size_t { return _values.size() / arity(); }
    auto empty() const -> bool { return _values.empty(); }

    auto operator[](std::size_t i) const -> std::span<const Int>
    {
        return std::span<const Int>(_values).subspan(i * arity(), arity());
    }

    /// The solutions whose entries are all at most `n` (n <= interval()).
    auto restrict(Int n) const -> SolutionSet
    {
        SolutionSet r(_equation, std::min(n, _n));
        for (std::size_t i = 0; i < size(); ++i) {
            auto t = (*this)[i];
            if (*std::max_element(t.begin(), t.end()) <= n)
                r._values.insert(r._values.end(), t.begin(), t.end());
        }
        return r;
    }

    friend auto operator==(const SolutionSet & a, const SolutionSet & b) -> bool
    {
        return a._equation == b._equation && a._n == b._n && a._values == b._values;
    }

private:
    friend auto enumerate_solutions(const LinearEquation &, Int, std::uint64_t) -> SolutionSet;

    LinearEquation _equation;
    Int _n;
    std::vector<Int> _values;
};

/// Number of distinct entries in a tuple.
inline auto distinct_count(std::span<const Int> t) -> std::size_t
{
    std::vector<Int> v(t.begin(), t.end());
    std::sort(v.begin(), v.end());
    return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

/// Sorted distinct entries of a tuple.
inline auto distinct_values(std::span<const Int> t) -> std::vector<Int>
{
    std::vector<Int> v(t.begin(), t.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

/// Enumerates every solution in [1, n]. Iterates the arity-1 variables other
/// than the one with the largest |coefficient| and solves for that one by a
/// divisibility and range check. Throws BudgetExceeded when n^(arity-1)
/// exceeds `cap`.
inline auto enumerate_solutions(const LinearEquation & eq, Int n, std::uint64_t cap = default_enumeration_cap)
    -> SolutionSet
{
    if (n < 1)
        throw InvalidArgument("interval bound must be at least 1");
    const std::size_t arity = eq.arity();
    const auto coeffs = eq.coefficients();

    double candidates = std::pow(static_cast<double>(n), static_cast<double>(arity - 1));
    if (candidates > static_cast<double>(cap))
        throw BudgetExceeded("enumeration of " + std::to_string(n) + "^" + std::to_string(arity - 1)
            + " candidate tuples exceeds the cap of " + std::to_string(cap));

    std::size_t solved = 0;
    for (std::size_t i = 1; i < arity; ++i)
        if (abs_value(coeffs[i]) > abs_value(coeffs[solved]))
            solved = i;
    std::vector<std::size_t> free_positions;
    for (std::size_t i = 0; i < arity; ++i)
        if (i != solved)
            free_positions.push_back(i);

    // every partial sum is bounded by sum |a_i| * n; this throws if that bound overflows
    [[maybe_unused]] Int bound = 0;
    for (auto a : coeffs)
        bound = checked_add(bound, checked_mul(abs_value(a), n));

    const Int pivot = coeffs[solved];
    SolutionSet result(eq, n);
    std::vector<Int> tuple(arity, 1);
    const std::size_t inner = free_positions.back();

    Int partial = 0;
    for (auto p : free_positions)
        partial += coeffs[p];

    std::vector<std::vector<Int>> found;
    while (true) {
        // innermost variable sweeps 1..n with an incremental partial sum
        Int s = partial;
        for (Int x = 1; x <= n; ++x) {
            if (s % pivot == 0) {
                Int v = -s / pivot;
                if (v >= 1 && v <= n) {
                    tuple[inner] = x;
                    tuple[solved] = v;
                    found.push_back(tuple);
                }
            }
            s += coeffs[inner];
        }
        // advance the odometer over the remaining free positions
        std::size_t k = free_positions.size() - 1;
        bool done = true;
        while (k > 0) {
            std::size_t pos = free_positions[k - 1];
            if (tuple[pos] < n) {
                ++tuple[pos];
                partial += coeffs[pos];
                done = false;
                break;
            }
            partial -= coeffs[pos] * (tuple[pos] - 1);
            tuple[pos] = 1;
            --k;
        }
        if (done)
            break;
    }

    std::sort(found.begin(), found.end());
    result._values.reserve(found.size() * arity);
    for (auto & t : found)
        result._values.insert(result._values.end(), t.begin(), t.end());
    return result;
}

/// Writes one tuple per line, entries separated by single spaces.
inline auto write_solutions(std::ostream & out, const SolutionSet & set) -> std::ostream &
{
    for (std::size_t i = 0; i < set.size(); ++i) {
        auto t = set[i];
        for (std::size_t j = 0; j < t.size(); ++j)
            out << (j ? " " : "") << t[j];
        out << '\n';
    }
    return out;
}

/// Counts of solutions by number of distinct entries: by_distinct[i] is the
/// number with exactly i distinct values (index 0 unused), total is their sum.
struct DistinctnessProfile {
    std::vector<std::uint64_t> by_distinct;
    std::uint64_t total = 0;

    auto count(std::size_t distinct) const -> std::uint64_t
    {
        return distinct < by_distinct.size() ? by_distinct[distinct] : 0;
    }

    friend auto operator==(const DistinctnessProfile &, const DistinctnessProfile &) -> bool = default;
};

inline auto psi_profile(const SolutionSet & set) -> DistinctnessProfile
{
    DistinctnessProfile p;
    p.by_distinct.assign(set.arity() + 1, 0);
    for (std::size_t i = 0; i < set.size(); ++i)
        ++p.by_distinct[distinct_count(set[i])];
    for (auto c : p.by_distinct)
        p.total += c;
    return p;
}

inline auto psi_profile(const LinearEquation & eq, Int n, std::uint64_t cap = default_enumeration_cap)
    -> DistinctnessProfile
{
    return psi_profile(enumerate_solutions(eq, n, cap));
}

/// Degree statistics of the dependency graph: vertices are the non-constant
/// solutions, two are adjacent when their value sets intersect.
struct DependencyStats {
    std::uint64_t vertices = 0;
    std::uint64_t max_degree = 0;
    std::map<std::uint64_t, std::uint64_t> degree_histogram;

    friend auto operator==(const DependencyStats &, const DependencyStats &) -> bool = default;
};

/// Per-vertex degrees via a value -> solution inverted index.
inline auto dependency_degrees(const SolutionSet & set) -> std::vector<std::uint64_t>
{
    std::vector<std::vector<Int>> value_sets;
    for (std::size_t i = 0; i < set.size(); ++i) {
        auto d = distinct_values(set[i]);
        if (d.size() > 1)
            value_sets.push_back(std::move(d));
    }
    const auto n = static_cast<std::size_t>(set.interval());
    std::vector<std::vector<std::uint32_t>> containing(n + 1);
    for (std::size_t s = 0; s < value_sets.size(); ++s)
        for (auto v : value_sets[s])
            containing[static_cast<std::size_t>(v)].push_back(static_cast<std::uint32_t>(s));

    std::vector<std::uint64_t> degrees(value_sets.size(), 0);
    std::vector<std::uint32_t> stamp(value_sets.size(), UINT32_MAX);
    for (std::size_t s = 0; s < value_sets.size(); ++s) {
        std::uint64_t d = 0;
        for (auto v : value_sets[s])
            for (auto other : containing[static_cast<std::size_t>(v)])
                if (other != s && stamp[other] != s) {
                    stamp[other] = static_cast<std::uint32_t>(s);
                    ++d;
                }
        degrees[s] = d;
    }
    return degrees;
}

inline auto phi_max_degree(const SolutionSet & set) -> DependencyStats
{
    DependencyStats stats;
    for (auto d : dependency_degrees(set)) {
        ++stats.vertices;
        ++stats.degree_histogram[d];
        stats.max_degree = std::max(stats.max_degree, d);
    }
    return stats;
}

inline auto phi_max_degree(const LinearEquation & eq, Int n, std::uint64_t cap = default_enumeration_cap)
    -> DependencyStats
{
    return phi_max_degree(enumerate_solutions(eq, n, cap));
}

} // namespace radolab
