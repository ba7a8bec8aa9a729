#pragma once

#include <radolab/arith.hpp>
#include <radolab/coloring.hpp>
#include <radolab/equation.hpp>
#include <radolab/solutions.hpp>

#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace radolab {

inline constexpr std::uint64_t default_seed = 20100101;

struct WalkConfig {
    double k_factor = 1.0;                 // multiplier on the per-N step formula
    std::uint64_t step_cap = 10'000'000;   // hard maximum steps per N
    std::uint64_t seed = default_seed;
    bool carry_over = true;                // reuse the last valid coloring when N grows
    Int n_cap = 5000;                      // estimate_rado stops (budget_capped) beyond this N
    std::uint64_t enumeration_cap = default_enumeration_cap;
};

/// k * 3 N^(3/2) (4/3)^N as a real number.
inline auto walk_formula_steps(Int n, double k_factor) -> double
{
    double x = static_cast<double>(n);
    return k_factor * 3.0 * x * std::sqrt(x) * std::pow(4.0 / 3.0, x);
}

/// Steps granted for one N: the formula, truncated by step_cap. Never below 1.
inline auto walk_step_budget(Int n, const WalkConfig & cfg) -> std::uint64_t
{
    double f = std::floor(walk_formula_steps(n, cfg.k_factor));
    if (! (f < static_cast<double>(cfg.step_cap)))
        return cfg.step_cap;
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(f));
}

inline auto walk_budget_capped(Int n, const WalkConfig & cfg) -> bool
{
    return ! (std::floor(walk_formula_steps(n, cfg.k_factor)) <= static_cast<double>(cfg.step_cap));
}

namespace detail {

    // Bitset with a summary level, answering "lowest set index" quickly.
    class FirstSetTracker {
    public:
        explicit FirstSetTracker(std::size_t n) : _low((n + 63) / 64, 0), _high((_low.size() + 63) / 64, 0) {}

        void set(std::size_t i)
        {
            _low[i / 64] |= std::uint64_t{1} << (i % 64);
            _high[i / 4096] |= std::uint64_t{1} << ((i / 64) % 64);
        }

        void reset(std::size_t i)
        {
            auto & w = _low[i / 64];
            w &= ~(std::uint64_t{1} << (i % 64));
            if (w == 0)
                _high[i / 4096] &= ~(std::uint64_t{1} << ((i / 64) % 64));
        }

        auto first() const -> std::optional<std::size_t>
        {
            for (std::size_t h = 0; h < _high.size(); ++h)
                if (_high[h]) {
                    std::size_t word = h * 64 + static_cast<std::size_t>(std::countr_zero(_high[h]));
                    return word * 64 + static_cast<std::size_t>(std::countr_zero(_low[word]));
                }
            return std::nullopt;
        }

    private:
        std::vector<std::uint64_t> _low;
        std::vector<std::uint64_t> _high;
    };

} // namespace detail

/// One recolouring step: `integer` moved from `old_color` to `new_color` to
/// repair `solution`, the first monochromatic solution at that moment.
struct FlipEvent {
    std::size_t solution_index = 0;
    std::size_t position = 0;
    Int integer = 0;
    int old_color = 0;
    int new_color = 0;
};

struct WalkOutcome {
    std::optional<Coloring> coloring;
    std::uint64_t steps = 0;
    std::uint64_t budget = 0;
};

/// Schoening-style random walk over colorings of [1, n] against a fixed,
/// lexicographically ordered solution list (all entries <= n).
///
/// Each step takes the first monochromatic solution, picks one of its
/// positions uniformly and gives that integer a uniformly random different
/// color. The walk stops at the first valid coloring or after `budget` steps.
class ColoringWalk {
public:
    ColoringWalk(const SolutionSet & solutions, ColorCount c) : _solutions(solutions), _c(c.value()),
        _containing(static_cast<std::size_t>(solutions.interval()) + 1), _mono(solutions.size())
    {
        for (std::size_t s = 0; s < solutions.size(); ++s) {
            auto d = distinct_values(solutions[s]);
            for (auto v : d)
                _containing[static_cast<std::size_t>(v)].push_back(static_cast<std::uint32_t>(s));
            _distinct.push_back(std::move(d));
        }
    }

    template <typename Rng>
    auto run(Coloring start, std::uint64_t budget, Rng & rng, const std::function<void(const FlipEvent &)> & observer = {})
        -> WalkOutcome
    {
        _colors = start.raw();
        for (std::size_t s = 0; s < _distinct.size(); ++s)
            refresh(s);

        WalkOutcome out;
        out.budget = budget;
        const std::size_t arity = _solutions.arity();
        std::uniform_int_distribution<std::size_t> pick_position(0, arity - 1);
        std::uniform_int_distribution<int> pick_shift(1, _c - 1);
        while (true) {
            auto first = _mono.first();
            if (! first) {
                out.coloring = Coloring(start.colors(), _colors);
                return out;
            }
            if (out.steps >= budget)
                return out;
            ++out.steps;
            std::size_t position = pick_position(rng);
            Int v = _solutions[*first][position];
            auto & slot = _colors[static_cast<std::size_t>(v - 1)];
            int old_color = slot;
            int new_color = (old_color + pick_shift(rng)) % _c;
            slot = static_cast<std::uint8_t>(new_color);
            if (observer)
                observer(FlipEvent{*first, position, v, old_color, new_color});
            for (auto s : _containing[static_cast<std::size_t>(v)])
                refresh(s);
        }
    }

private:
    const SolutionSet & _solutions;
    int _c;
    std::vector<std::vector<Int>> _distinct;
    std::vector<std::vector<std::uint32_t>> _containing;
    detail::FirstSetTracker _mono;
    std::vector<std::uint8_t> _colors;

    void refresh(std::size_t s)
    {
        const auto & d = _distinct[s];
        auto first = _colors[static_cast<std::size_t>(d[0] - 1)];
        for (std::size_t j = 1; j < d.size(); ++j)
            if (_colors[static_cast<std::size_t>(d[j] - 1)] != first) {
                _mono.reset(s);
                return;
            }
        _mono.set(s);
    }
};

template <typename Rng>
auto random_coloring(ColorCount c, Int n, Rng & rng) -> Coloring
{
    std::uniform_int_distribution<int> pick(0, c.value() - 1);
    std::vector<std::uint8_t> colors(static_cast<std::size_t>(n));
    for (auto & x : colors)
        x = static_cast<std::uint8_t>(pick(rng));
    return Coloring(c, std::move(colors));
}

/// Random walk for one interval [1, n]. Starts from `start` when given
/// (it must color exactly [1, n]) and from a uniform random coloring otherwise.
template <typename Rng>
auto random_walk(const LinearEquation & eq, ColorCount c, Int n, const std::optional<Coloring> & start,
    const WalkConfig & cfg, Rng & rng, const std::function<void(const FlipEvent &)> & observer = {}) -> WalkOutcome
{
    if (n < 1)
        throw InvalidArgument("interval bound must be at least 1");
    if (start && (start->interval() != n || start->colors() != c))
        throw InvalidArgument("start coloring does not match the interval and color count");
    auto solutions = enumerate_solutions(eq, n, cfg.enumeration_cap);
    ColoringWalk walk(solutions, c);
    Coloring initial = start ? *start : random_coloring(c, n, rng);
    return walk.run(std::move(initial), walk_step_budget(n, cfg), rng, observer);
}

enum class WalkStatus { probable_rado, budget_capped };

inline auto to_string(WalkStatus s) -> std::string
{
    return s == WalkStatus::probable_rado ? "probable_rado" : "budget_capped";
}

struct StochasticResult {
    Int estimate = 0;
    Coloring certificate{ColorCount(2), Int{0}};
    WalkStatus status = WalkStatus::probable_rado;
    std::vector<std::uint64_t> steps_per_n;  // entry n-1 is the steps spent at N = n
};

/// Increments N from 1, walking at each N from the previous valid coloring
/// extended by one randomly colored integer. The estimate is the first N at
/// which the walk fails; it never exceeds the true Rado number.
template <typename Rng>
auto estimate_rado(const LinearEquation & eq, ColorCount c, const WalkConfig & cfg, Rng & rng) -> StochasticResult
{
    StochasticResult result;
    result.certificate = Coloring(c, Int{0});
    std::uniform_int_distribution<int> pick(0, c.value() - 1);

    Int enumerated = 0;
    std::optional<SolutionSet> master;
    std::optional<Coloring> previous;
    for (Int n = 1; n <= cfg.n_cap; ++n) {
        if (n > enumerated) {
            enumerated = std::max({n, enumerated + enumerated / 2, Int{16}});
            try {
                master = enumerate_solutions(eq, enumerated, cfg.enumeration_cap);
            }
            catch (const BudgetExceeded &) {
                enumerated = n;
                master = enumerate_solutions(eq, enumerated, cfg.enumeration_cap);
            }
        }
        SolutionSet solutions = master->restrict(n);

        Coloring start = [&] {
            if (cfg.carry_over && previous) {
                auto colors = previous->raw();
                colors.push_back(static_cast<std::uint8_t>(pick(rng)));
                return Coloring(c, std::move(colors));
            }
            return random_coloring(c, n, rng);
        }();

        ColoringWalk walk(solutions, c);
        auto outcome = walk.run(std::move(start), walk_step_budget(n, cfg), rng);
        result.steps_per_n.push_back(outcome.steps);
        if (outcome.coloring) {
            previous = outcome.coloring;
            result.certificate = *outcome.coloring;
            continue;
        }
        result.estimate = n;
        result.status = walk_budget_capped(n, cfg) ? WalkStatus::budget_capped : WalkStatus::probable_rado;
        return result;
    }
    result.estimate = cfg.n_cap + 1;
    result.status = WalkStatus::budget_capped;
    return result;
}

inline auto estimate_rado(const LinearEquation & eq, ColorCount c, const WalkConfig & cfg = {}) -> StochasticResult
{
    std::mt19937_64 rng(cfg.seed);
    return estimate_rado(eq, c, cfg, rng);
}

} // namespace radolab
