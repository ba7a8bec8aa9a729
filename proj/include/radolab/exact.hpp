#pragma once

#include <radolab/arith.hpp>
#include <radolab/coloring.hpp>
#include <radolab/equation.hpp>
#include <radolab/errors.hpp>
#include <radolab/solutions.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace radolab {

/// Caps for the exhaustive search. Node and time caps apply to a single N.
struct SearchLimits {
    std::uint64_t node_cap = 1'000'000'000;
    double time_cap_seconds = 300.0;
    Int n_cap = 1000;  // compute_rado gives up (lower_bound_only) beyond this N
    std::uint64_t enumeration_cap = default_enumeration_cap;
};

/// Solutions bucketed by their largest entry, as sorted distinct value sets
/// with the largest entry removed. Grows on demand: the constraints whose
/// maximum is v do not depend on the interval bound.
class ConstraintIndex {
public:
    explicit ConstraintIndex(LinearEquation eq, std::uint64_t enumeration_cap = default_enumeration_cap) :
        _eq(std::move(eq)), _cap(enumeration_cap)
    {
    }

    auto equation() const -> const LinearEquation & { return _eq; }
    auto covered() const -> Int { return _covered; }

    void ensure(Int n)
    {
        if (n <= _covered)
            return;
        Int target = std::max({n, _covered + _covered / 2, Int{16}});
        SolutionSet set = [&] {
            try {
                return enumerate_solutions(_eq, target, _cap);
            }
            catch (const BudgetExceeded &) {
                if (target == n)
                    throw;
                target = n;
                return enumerate_solutions(_eq, target, _cap);
            }
        }();
        _buckets.assign(static_cast<std::size_t>(target) + 1, {});
        _constant.assign(static_cast<std::size_t>(target) + 1, false);
        std::vector<std::vector<std::vector<std::uint32_t>>> sets(static_cast<std::size_t>(target) + 1);
        for (std::size_t i = 0; i < set.size(); ++i) {
            auto d = distinct_values(set[i]);
            auto top = static_cast<std::size_t>(d.back());
            if (d.size() == 1) {
                _constant[top] = true;
                continue;
            }
            sets[top].emplace_back(d.begin(), d.end() - 1);
        }
        for (std::size_t v = 0; v < sets.size(); ++v) {
            auto & s = sets[v];
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            for (auto & others : s) {
                _buckets[v].push_back(static_cast<std::uint32_t>(others.size()));
                _buckets[v].insert(_buckets[v].end(), others.begin(), others.end());
            }
        }
        _covered = target;
    }

    /// Flattened [len, values...] records of the constraints whose maximum is v.
    auto bucket(Int v) const -> const std::vector<std::uint32_t> & { return _buckets.at(static_cast<std::size_t>(v)); }

    /// True when (v, ..., v) is a solution, so v can never be colored.
    auto constant_at(Int v) const -> bool { return _constant.at(static_cast<std::size_t>(v)); }

private:
    LinearEquation _eq;
    std::uint64_t _cap;
    Int _covered = 0;
    std::vector<std::vector<std::uint32_t>> _buckets;
    std::vector<bool> _constant;
};

enum class SearchStatus { found, none, budget_exhausted };

inline auto to_string(SearchStatus s) -> std::string
{
    switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::budget_exhausted: return "budget_exhausted";
    }
    return "?";
}

struct FindResult {
    SearchStatus status = SearchStatus::none;
    std::optional<Coloring> coloring;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

namespace detail {

    // Relabels colors in order of first appearance so the hint respects the
    // ordered-introduction symmetry breaking.
    inline auto canonical_hint(const Coloring & hint) -> std::vector<int>
    {
        std::vector<int> relabel(static_cast<std::size_t>(hint.colors().value()), -1);
        std::vector<int> out;
        int next = 0;
        for (auto x : hint.raw()) {
            if (relabel[x] < 0)
                relabel[x] = next++;
            out.push_back(relabel[x]);
        }
        return out;
    }

    class Backtracker {
    public:
        Backtracker(const ConstraintIndex & index, int colors, Int n, const SearchLimits & limits, std::vector<int> hint) :
            _index(index), _c(colors), _n(n), _limits(limits), _hint(std::move(hint)),
            _color(static_cast<std::size_t>(n) + 1, -1), _start(std::chrono::steady_clock::now())
        {
        }

        auto run() -> SearchStatus
        {
            bool ok = dfs(1, 0);
            if (_out_of_budget)
                return SearchStatus::budget_exhausted;
            return ok ? SearchStatus::found : SearchStatus::none;
        }

        auto nodes() const -> std::uint64_t { return _nodes; }
        auto elapsed() const -> double
        {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - _start).count();
        }
        auto colors() const -> std::vector<std::uint8_t>
        {
            std::vector<std::uint8_t> out;
            for (Int v = 1; v <= _n; ++v)
                out.push_back(static_cast<std::uint8_t>(_color[static_cast<std::size_t>(v)]));
            return out;
        }

    private:
        const ConstraintIndex & _index;
        int _c;
        Int _n;
        const SearchLimits & _limits;
        std::vector<int> _hint;
        std::vector<int> _color;
        std::chrono::steady_clock::time_point _start;
        std::uint64_t _nodes = 0;
        bool _out_of_budget = false;

        auto budget_left() -> bool
        {
            if (_nodes >= _limits.node_cap) {
                _out_of_budget = true;
                return false;
            }
            if ((_nodes & 1023) == 0 && elapsed() > _limits.time_cap_seconds) {
                _out_of_budget = true;
                return false;
            }
            return true;
        }

        // blocked[k] is set when some constraint at v has all other entries colored k
        void blocked_colors(Int v, std::vector<char> & blocked) const
        {
            std::fill(blocked.begin(), blocked.end(), 0);
            const auto & b = _index.bucket(v);
            for (std::size_t p = 0; p < b.size();) {
                std::uint32_t len = b[p++];
                int common = _color[b[p]];
                for (std::uint32_t j = 1; j < len && common >= 0; ++j)
                    if (_color[b[p + j]] != common)
                        common = -1;
                if (common >= 0)
                    blocked[static_cast<std::size_t>(common)] = 1;
                p += len;
            }
        }

        auto dfs(Int v, int used) -> bool
        {
            if (v > _n)
                return true;
            if (_index.constant_at(v))
                return false;

            std::vector<char> blocked(static_cast<std::size_t>(_c));
            blocked_colors(v, blocked);

            int limit = std::min(_c - 1, used);  // colors 0..used-1 seen, `used` is the next new one
            int preferred = -1;
            if (static_cast<std::size_t>(v - 1) < _hint.size() && _hint[static_cast<std::size_t>(v - 1)] <= limit)
                preferred = _hint[static_cast<std::size_t>(v - 1)];

            auto attempt = [&](int k) -> bool {
                if (blocked[static_cast<std::size_t>(k)])
                    return false;
                if (! budget_left())
                    return false;
                ++_nodes;
                _color[static_cast<std::size_t>(v)] = k;
                if (dfs(v + 1, std::max(used, k + 1)))
                    return true;
                _color[static_cast<std::size_t>(v)] = -1;
                return false;
            };

            if (preferred >= 0 && attempt(preferred))
                return true;
            for (int k = 0; k <= limit && ! _out_of_budget; ++k)
                if (k != preferred && attempt(k))
                    return true;
            return false;
        }
    };

} // namespace detail

/// Exhaustive search for a coloring of [1, n] with no monochromatic solution,
/// using an existing constraint index. The integer 1 gets color 0 and a new
/// color is introduced only after all smaller ones; `hint` orders the values
/// tried at each integer.
inline auto find_coloring(ConstraintIndex & index, ColorCount c, Int n, const SearchLimits & limits = {},
    const std::optional<Coloring> & hint = std::nullopt) -> FindResult
{
    if (n < 1)
        throw InvalidArgument("interval bound must be at least 1");
    index.ensure(n);
    detail::Backtracker search(index, c.value(), n, limits, hint ? detail::canonical_hint(*hint) : std::vector<int>{});
    FindResult r;
    r.status = search.run();
    r.nodes = search.nodes();
    r.seconds = search.elapsed();
    if (r.status == SearchStatus::found)
        r.coloring = Coloring(c, search.colors());
    return r;
}

inline auto find_coloring(const LinearEquation & eq, ColorCount c, Int n, const SearchLimits & limits = {},
    const std::optional<Coloring> & hint = std::nullopt) -> FindResult
{
    ConstraintIndex index(eq, limits.enumeration_cap);
    return find_coloring(index, c, n, limits, hint);
}

enum class RadoStatus { exact, lower_bound_only };

inline auto to_string(RadoStatus s) -> std::string
{
    return s == RadoStatus::exact ? "exact" : "lower_bound_only";
}

struct SearchStats {
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

/// Outcome of compute_rado. `certificate` is a valid coloring of
/// [1, value - 1]; when status is exact no valid coloring of [1, value] exists.
struct RadoResult {
    RadoStatus status = RadoStatus::lower_bound_only;
    Int value = 0;
    Coloring certificate{ColorCount(2), Int{0}};
    SearchStats stats;
};

/// Determines R_c(eq) by running find_coloring for N = 1, 2, ... and
/// stopping at the first N without a valid coloring. Each search is seeded
/// with the previous certificate.
inline auto compute_rado(const LinearEquation & eq, ColorCount c, const SearchLimits & limits = {}) -> RadoResult
{
    RadoResult result;
    result.certificate = Coloring(c, Int{0});
    if (eq.has_constant_solutions()) {
        result.status = RadoStatus::exact;
        result.value = 1;
        return result;
    }

    ConstraintIndex index(eq, limits.enumeration_cap);
    std::optional<Coloring> previous;
    for (Int n = 1; n <= limits.n_cap; ++n) {
        auto r = find_coloring(index, c, n, limits, previous);
        result.stats.nodes += r.nodes;
        result.stats.seconds += r.seconds;
        if (r.status == SearchStatus::found) {
            previous = r.coloring;
            result.certificate = *r.coloring;
            continue;
        }
        result.status = r.status == SearchStatus::none ? RadoStatus::exact : RadoStatus::lower_bound_only;
        result.value = n;
        return result;
    }
    result.status = RadoStatus::lower_bound_only;
    result.value = limits.n_cap + 1;
    return result;
}

} // namespace radolab
