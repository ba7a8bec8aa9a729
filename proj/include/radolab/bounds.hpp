#pragma once

#include <radolab/arith.hpp>
#include <radolab/coloring.hpp>
#include <radolab/equation.hpp>
#include <radolab/errors.hpp>
#include <radolab/families.hpp>
#include <radolab/solutions.hpp>
#include <radolab/witnesses.hpp>

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace radolab {

enum class BoundKind { exact_value, lower_bound, upper_bound, not_regular };

inline auto to_string(BoundKind k) -> std::string
{
    switch (k) {
    case BoundKind::exact_value: return "exact_value";
    case BoundKind::lower_bound: return "lower_bound";
    case BoundKind::upper_bound: return "upper_bound";
    case BoundKind::not_regular: return "not_regular";
    }
    return "?";
}

/// A value or bound on R_c(E) together with where it came from.
///
/// `value` is the unrounded number. For lower bounds `strict` distinguishes
/// R > value from R >= value; `integer_bound` is the integer consequence used
/// for comparisons (R >= integer_bound, R <= integer_bound or R = integer_bound).
/// Reports with conditions_met = false are informational only.
struct BoundReport {
    BoundKind kind = BoundKind::lower_bound;
    double value = 0.0;
    bool strict = false;
    std::optional<Int> integer_bound;
    std::string provenance;
    std::string formula;
    bool conditions_met = true;
    std::string conditions;
    int colors = 2;
    std::map<std::string, Int> parameters;
    bool truncated = false;
    std::optional<std::string> certificate;
    std::optional<double> auxiliary;  // e.g. the real root behind an integer search result

    friend auto operator==(const BoundReport &, const BoundReport &) -> bool = default;
};

namespace detail {

    inline auto integer_from(BoundKind kind, double value, bool strict) -> std::optional<Int>
    {
        if (! std::isfinite(value))
            return std::nullopt;
        switch (kind) {
        case BoundKind::exact_value: return static_cast<Int>(std::llround(value));
        case BoundKind::lower_bound:
            return strict ? static_cast<Int>(std::floor(value)) + 1 : static_cast<Int>(std::ceil(value));
        case BoundKind::upper_bound: return static_cast<Int>(std::floor(value));
        case BoundKind::not_regular: return std::nullopt;
        }
        return std::nullopt;
    }

    inline auto make_report(BoundKind kind, double value, bool strict, std::string provenance, std::string formula,
        bool conditions_met, std::string conditions, int colors, std::map<std::string, Int> parameters) -> BoundReport
    {
        BoundReport r;
        r.kind = kind;
        r.value = value;
        r.strict = strict;
        r.integer_bound = integer_from(kind, value, strict);
        r.provenance = std::move(provenance);
        r.formula = std::move(formula);
        r.conditions_met = conditions_met;
        r.conditions = std::move(conditions);
        r.colors = colors;
        r.parameters = std::move(parameters);
        return r;
    }

} // namespace detail

/// The closed-form 2-color value or bound for a family instance. Parameters
/// of a(x-y)=bz and ax=by are reduced by their gcd first.
inline auto family_value_2color(const FamilyInstance & f) -> BoundReport
{
    using detail::make_report;
    const Int a = f.a, b = f.b;
    if (a < 1 || b < 1)
        throw InvalidArgument("family parameters must be positive integers");
    switch (f.family) {
    case Family::difference: {
        auto r = make_report(BoundKind::exact_value, static_cast<double>(b * b + 3 * b + 1), false,
            "two-color.difference", "b^2 + 3b + 1", true, "b >= 1", 2, {{"b", b}});
        r.certificate = to_certificate(difference_witness(b));
        return r;
    }
    case Family::scaled_difference: {
        Int g = std::gcd(a, b);
        Int ra = a / g, rb = b / g;
        if (ra > rb) {
            auto r = make_report(BoundKind::exact_value, static_cast<double>(ra * ra), false,
                "two-color.scaled-difference.a>b", "a^2", true, "a > b after dividing by gcd(a,b)", 2,
                {{"a", ra}, {"b", rb}});
            r.certificate = to_certificate(scaled_difference_witness(ra, rb));
            return r;
        }
        auto r = make_report(BoundKind::lower_bound, static_cast<double>(rb * rb + rb + 1), false,
            "two-color.scaled-difference.a<=b", "b^2 + b + 1", true, "a <= b after dividing by gcd(a,b)", 2,
            {{"a", ra}, {"b", rb}});
        r.certificate = to_certificate(small_multiples_witness(ra, rb));
        return r;
    }
    case Family::x_ay_abz: {
        auto r = make_report(BoundKind::lower_bound, static_cast<double>(a * a), false, "two-color.multiples-of-a",
            "a^2", true, "x coefficient 1 is coprime to a; other coefficients divisible by a", 2, {{"a", a}, {"b", b}});
        r.certificate = to_certificate(multiples_witness(a, a * a - 1));
        return r;
    }
    case Family::x_ay_2az: {
        auto r = make_report(BoundKind::exact_value, static_cast<double>(a * a), false, "two-color.x+ay=2az", "a^2",
            true, "a >= 1", 2, {{"a", a}});
        r.certificate = to_certificate(multiples_witness(a, a * a - 1));
        return r;
    }
    case Family::x_y_az_a1w: {
        auto r = make_report(BoundKind::exact_value, 5.0, false, "two-color.x+y+az=(a+1)w", "5", a > 3, "a > 3", 2,
            {{"a", a}});
        r.certificate = to_certificate(x_y_az_a1w_witness());
        return r;
    }
    case Family::two_two_a3: {
        auto r = make_report(BoundKind::exact_value, 10.0, false, "two-color.2x+2y+az=(a+3)w", "10", a > 24,
            "a > 24", 2, {{"a", a}});
        r.certificate = to_certificate(two_two_a3_witness());
        return r;
    }
    case Family::three_three_a5: {
        auto r = make_report(BoundKind::exact_value, 15.0, false, "two-color.3x+3y+az=(a+5)w", "15", a >= 30,
            "a >= 30", 2, {{"a", a}});
        r.certificate = to_certificate(three_three_a5_witness());
        return r;
    }
    case Family::two_variable: {
        Int g = std::gcd(a, b);
        if (a == b)
            return make_report(BoundKind::exact_value, 1.0, false, "two-color.ax=by", "1 (constant solutions)", true,
                "a = b", 2, {{"a", 1}, {"b", 1}});
        auto r = make_report(BoundKind::not_regular, std::numeric_limits<double>::infinity(), false,
            "two-color.ax=by", "infinity", true, "a != b", 2, {{"a", a / g}, {"b", b / g}});
        return r;
    }
    case Family::two_two_ab:
    case Family::balanced_sum: break;
    }
    throw UnsupportedFamily("no closed-form 2-color value for family " + family_id(f.family));
}

/// R_2 >= a^2 for any equation with a coefficient p and an integer a >= 2
/// such that gcd(p, a) = 1 and every other coefficient is divisible by a.
/// Picks the largest such a over all choices of p.
inline auto multiples_lower_bound(const LinearEquation & eq) -> std::optional<BoundReport>
{
    Int best = 1;
    std::size_t best_pos = 0;
    for (std::size_t q = 0; q < eq.arity(); ++q) {
        Int g = 0;
        for (std::size_t i = 0; i < eq.arity(); ++i)
            if (i != q)
                g = std::gcd(g, abs_value(eq.coefficient(i)));
        // largest divisor of g coprime to a_q: strip the primes shared with a_q
        Int p = abs_value(eq.coefficient(q));
        Int a = g;
        for (Int d = std::gcd(a, p); d > 1; d = std::gcd(a, p))
            a /= d;
        if (a > best) {
            best = a;
            best_pos = q;
        }
    }
    if (best < 2)
        return std::nullopt;
    auto r = detail::make_report(BoundKind::lower_bound, static_cast<double>(best * best), false,
        "two-color.multiples-of-a", "a^2", true, "one coefficient coprime to a, all others divisible by a", 2,
        {{"a", best}, {"position", static_cast<Int>(best_pos)}});
    r.certificate = to_certificate(multiples_witness(best, best * best - 1));
    return r;
}

/// R_2 <= m^2 + 3m + 1 with m = |s / a_q| from quadratic_case (two colors only).
inline auto quadratic_upper_bound(const LinearEquation & eq) -> std::optional<BoundReport>
{
    auto d = quadratic_case(eq);
    if (! d)
        return std::nullopt;
    Int m = d->m_abs;
    Int v = checked_add(checked_add(checked_mul(m, m), checked_mul(3, m)), 1);
    return detail::make_report(BoundKind::upper_bound, static_cast<double>(v), false, "two-color.quadratic-case",
        "m^2 + 3m + 1", true, "zero-sum index set I with a pivot coefficient dividing the sum outside I", 2,
        {{"m", m}, {"pivot", static_cast<Int>(d->pivot)}, {"s", d->s}});
}

namespace detail {

    // For every N in [1, n_max]: counts of solutions with entries <= N by distinct count.
    inline auto psi_by_interval(const LinearEquation & eq, Int n_max, std::uint64_t cap)
        -> std::vector<std::vector<std::uint64_t>>
    {
        auto set = enumerate_solutions(eq, n_max, cap);
        std::vector<std::vector<std::uint64_t>> per_max(static_cast<std::size_t>(n_max) + 1,
            std::vector<std::uint64_t>(eq.arity() + 1, 0));
        for (std::size_t i = 0; i < set.size(); ++i) {
            auto t = set[i];
            auto m = *std::max_element(t.begin(), t.end());
            ++per_max[static_cast<std::size_t>(m)][distinct_count(t)];
        }
        for (std::size_t n = 1; n < per_max.size(); ++n)
            for (std::size_t i = 0; i < per_max[n].size(); ++i)
                per_max[n][i] += per_max[n - 1][i];
        return per_max;
    }

    // sum_i psi_i * c^(arity - i) < c^(arity - 1), the union bound scaled to integers
    inline auto union_bound_holds(const std::vector<std::uint64_t> & psi, Int c) -> bool
    {
        const auto j = static_cast<unsigned>(psi.size() - 1);
        __int128 lhs = 0;
        __int128 rhs = 1;
        for (unsigned k = 0; k + 1 < j; ++k)
            rhs *= c;
        for (unsigned i = 1; i <= j; ++i) {
            __int128 w = 1;
            for (unsigned k = 0; k < j - i; ++k)
                w *= c;
            lhs += static_cast<__int128>(psi[i]) * w;
            if (lhs >= rhs)
                return false;
        }
        return lhs < rhs;
    }

} // namespace detail

/// Largest N <= n_cap for which a uniformly random c-coloring of [1, N] has
/// expected number of monochromatic solutions below one:
/// sum_i psi_i(N) c^(1-i) < 1. Then R_c > N. Solutions with one distinct
/// value count with weight 1, so equations with constant solutions give 0.
inline auto prob_lower_bound_search(const LinearEquation & eq, ColorCount c, Int n_cap,
    std::uint64_t cap = default_enumeration_cap) -> BoundReport
{
    if (n_cap < 1)
        throw InvalidArgument("n_cap must be at least 1");
    Int best = 0;
    bool truncated = true;
    Int window = std::min<Int>(n_cap, 32);
    Int scanned = 0;
    while (true) {
        auto psi = detail::psi_by_interval(eq, window, cap);
        for (Int n = scanned + 1; n <= window; ++n) {
            if (! detail::union_bound_holds(psi[static_cast<std::size_t>(n)], c.value())) {
                truncated = false;
                break;
            }
            best = n;
        }
        if (! truncated || window == n_cap)
            break;
        scanned = window;
        window = std::min(n_cap, window * 2);
    }
    auto r = detail::make_report(BoundKind::lower_bound, static_cast<double>(best), true,
        "probabilistic.union-bound-search", "sum_i psi_i(N) c^(N-i+1) < c^N", true, "none", c.value(),
        {{"c", c.value()}, {"n_cap", n_cap}});
    r.truncated = truncated;
    return r;
}

/// Both published forms for x - y = bz: the largest integer N satisfying
/// N(c-1)/(b+1) + N(N+b)/(2b) < c^2 (with R_c > N), and the closed form
/// (sqrt((b+c-1)^2 + 8c^2(b^2+b)) - b - c + 1) / 2 as printed (R_c > value).
inline auto prob_lower_bound_closed(Int b, ColorCount c) -> std::vector<BoundReport>
{
    if (b < 1)
        throw InvalidArgument("b must be a positive integer");
    const Int cc = c.value();
    // multiply through by 2b(b+1): 2bN(c-1) + (b+1)N(N+b) < 2b(b+1)c^2
    auto holds = [&](Int n) {
        return 2 * b * n * (cc - 1) + (b + 1) * n * (n + b) < 2 * b * (b + 1) * cc * cc;
    };
    Int n = 0;
    while (holds(n + 1))
        ++n;
    // positive root of (b+1)N^2 + (2b(c-1) + b(b+1))N - 2b(b+1)c^2 = 0
    double A = static_cast<double>(b + 1);
    double B = static_cast<double>(2 * b * (cc - 1) + b * (b + 1));
    double C = -static_cast<double>(2 * b * (b + 1) * cc * cc);
    double root = (-B + std::sqrt(B * B - 4 * A * C)) / (2 * A);

    auto inequality = detail::make_report(BoundKind::lower_bound, static_cast<double>(n), true,
        "probabilistic.difference.inequality", "N(c-1)/(b+1) + N(N+b)/(2b) < c^2", true, "b >= 1, c >= 2", c.value(),
        {{"b", b}, {"c", cc}});
    inequality.auxiliary = root;

    double bd = static_cast<double>(b), cd = static_cast<double>(cc);
    double closed = (std::sqrt((bd + cd - 1) * (bd + cd - 1) + 8 * cd * cd * (bd * bd + bd)) - bd - cd + 1) / 2;
    auto corollary = detail::make_report(BoundKind::lower_bound, closed, true, "probabilistic.difference.closed-form",
        "(sqrt((b+c-1)^2 + 8c^2(b^2+b)) - b - c + 1)/2", true, "b >= 1, c >= 2", c.value(), {{"b", b}, {"c", cc}});
    return {inequality, corollary};
}

/// Which event probability to use in the local-lemma condition.
enum class LllExponent {
    arity,           // p = c^-arity
    arity_minus_one  // p = c^-(arity - 1), the largest probability of a non-constant solution
};

/// Largest N <= n_cap with e * p * (phi_N + 1) < 1, phi_N the maximum degree
/// of the dependency graph over [1, N]. Then R_c > N.
inline auto lll_lower_bound_search(const LinearEquation & eq, ColorCount c, Int n_cap,
    LllExponent exponent = LllExponent::arity, std::uint64_t cap = default_enumeration_cap) -> BoundReport
{
    if (n_cap < 1)
        throw InvalidArgument("n_cap must be at least 1");
    auto i = static_cast<double>(exponent == LllExponent::arity ? eq.arity() : eq.arity() - 1);
    const double threshold = std::pow(static_cast<double>(c.value()), i) / std::numbers::e;

    Int best = 0;
    bool truncated = true;
    Int window = std::min<Int>(n_cap, 32);
    Int n = 1;
    std::uint64_t last_phi = 0;
    while (truncated) {
        auto set = enumerate_solutions(eq, window, cap);
        for (; n <= window; ++n) {
            auto phi = phi_max_degree(set.restrict(n)).max_degree;
            if (! (static_cast<double>(phi) + 1.0 < threshold)) {
                truncated = false;
                break;
            }
            best = n;
            last_phi = phi;
        }
        if (window == n_cap)
            break;
        window = std::min(n_cap, window * 2);
    }
    auto r = detail::make_report(BoundKind::lower_bound, static_cast<double>(best), true,
        exponent == LllExponent::arity ? "local-lemma.search" : "local-lemma.search.distinct-exponent",
        exponent == LllExponent::arity ? "phi_N + 1 < c^i / e, i = number of variables"
                                       : "phi_N + 1 < c^(i-1) / e, i = number of variables",
        true, "none", c.value(), {{"c", c.value()}, {"n_cap", n_cap}, {"phi", static_cast<Int>(last_phi)}});
    r.truncated = truncated;
    r.auxiliary = threshold;
    return r;
}

/// Closed-form local-lemma bounds (R_c >= value) for the a(x-y)=bz family:
/// x-y=2z, a(x-y)=2z with a>2, and a(x-y)=bz with a<b. Returns every form
/// whose regime contains (a, b); throws UnsupportedFamily if none does.
inline auto lll_lower_bound_closed(Int a, Int b, ColorCount c) -> std::vector<BoundReport>
{
    if (a < 1 || b < 1)
        throw InvalidArgument("family parameters must be positive integers");
    const double cd = static_cast<double>(c.value());
    const double c3 = cd * cd * cd;
    const double e = std::numbers::e;
    const double ad = static_cast<double>(a), bd = static_cast<double>(b);
    std::vector<BoundReport> out;
    if (a == 1 && b == 2)
        out.push_back(detail::make_report(BoundKind::lower_bound, 2 * c3 / (5 * e) + 7.0 / 5.0, false,
            "local-lemma.difference-2", "2c^3/(5e) + 7/5", true, "a = 1, b = 2", c.value(),
            {{"a", a}, {"b", b}, {"c", c.value()}}));
    if (b == 2 && a > 2)
        out.push_back(detail::make_report(BoundKind::lower_bound, ad * c3 / ((ad + 2) * e), false,
            "local-lemma.scaled-difference-2", "ac^3/((a+2)e)", true, "b = 2, a > 2", c.value(),
            {{"a", a}, {"b", b}, {"c", c.value()}}));
    if (a < b)
        out.push_back(detail::make_report(BoundKind::lower_bound, bd * c3 / (e * (bd + 3)) + (2 * bd + 3) / (bd + 3),
            false, "local-lemma.scaled-difference.a<b", "bc^3/(e(b+3)) + (2b+3)/(b+3)", true, "a < b", c.value(),
            {{"a", a}, {"b", b}, {"c", c.value()}}));
    if (out.empty())
        throw UnsupportedFamily("no closed-form local-lemma bound for a(x-y)=bz with a=" + std::to_string(a)
            + ", b=" + std::to_string(b));
    return out;
}

/// Conjectured R_2(x + qy = q^2 z): q^3/2 for even q, (q^3+q)/2 for odd q.
inline auto conjectured_x_qy_q2z(Int q) -> Int
{
    Int q3 = checked_pow(q, 3);
    return q % 2 == 0 ? q3 / 2 : (q3 + q) / 2;
}

/// Conjectured R_2(x + a(x+y) = 2aw) = a^2.
inline auto conjectured_x_axy_2aw(Int a) -> Int { return checked_mul(a, a); }

} // namespace radolab
