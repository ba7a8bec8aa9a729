#pragma once

#include <radolab/arith.hpp>
#include <radolab/errors.hpp>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace radolab {

/// A homogeneous linear equation sum(a_i * x_i) = 0 over positive integers.
///
/// Coefficients are nonzero and there are at least two of them. Variable
/// positions are zero-based throughout the library.
class LinearEquation {
public:
    explicit LinearEquation(std::vector<Int> coefficients, std::string display_form = {}) :
        _coefficients(std::move(coefficients)),
        _display_form(std::move(display_form))
    {
        if (_coefficients.size() < 2)
            throw DegenerateEquation("an equation needs at least two variables");
        for (auto a : _coefficients)
            if (a == 0)
                throw DegenerateEquation("coefficients must be nonzero");
    }

    auto coefficients() const -> std::span<const Int> { return _coefficients; }
    auto coefficient(std::size_t i) const -> Int { return _coefficients.at(i); }
    auto arity() const -> std::size_t { return _coefficients.size(); }
    auto display_form() const -> const std::string & { return _display_form; }

    auto coefficient_sum() const -> Int
    {
        Int s = 0;
        for (auto a : _coefficients)
            s = checked_add(s, a);
        return s;
    }

    /// Every constant tuple (k, ..., k) is a solution.
    auto has_constant_solutions() const -> bool { return coefficient_sum() == 0; }

    /// sum(a_i * x_i), throwing ArithmeticOverflow rather than wrapping.
    auto evaluate(std::span<const Int> values) const -> Int
    {
        if (values.size() != _coefficients.size())
            throw ArityMismatch("tuple has " + std::to_string(values.size()) + " entries, equation has "
                + std::to_string(_coefficients.size()) + " variables");
        Int s = 0;
        for (std::size_t i = 0; i < values.size(); ++i)
            s = checked_add(s, checked_mul(_coefficients[i], values[i]));
        return s;
    }

    friend auto operator==(const LinearEquation & a, const LinearEquation & b) -> bool
    {
        return a._coefficients == b._coefficients;
    }

private:
    std::vector<Int> _coefficients;
    std::string _display_form;
};

/// True iff `values` is a solution. Values must be positive.
inline auto check_solution(const LinearEquation & eq, std::span<const Int> values) -> bool
{
    if (values.size() != eq.arity())
        throw ArityMismatch("tuple length does not match equation arity");
    for (auto v : values)
        if (v < 1)
            throw InvalidArgument("solution values must be positive integers");
    return eq.evaluate(values) == 0;
}

namespace detail {

    // A linear form in named variables plus a constant term.
    struct LinearForm {
        std::vector<std::pair<std::string, Int>> terms;  // first-appearance order
        Int constant = 0;

        auto is_constant() const -> bool
        {
            return std::all_of(terms.begin(), terms.end(), [](const auto & t) { return t.second == 0; });
        }

        void add_term(const std::string & name, Int coefficient)
        {
            for (auto & [n, c] : terms)
                if (n == name) {
                    c = checked_add(c, coefficient);
                    return;
                }
            terms.emplace_back(name, coefficient);
        }

        void add(const LinearForm & other, Int sign)
        {
            for (auto & [n, c] : other.terms)
                add_term(n, checked_mul(sign, c));
            constant = checked_add(constant, checked_mul(sign, other.constant));
        }

        void scale(Int k)
        {
            for (auto & t : terms)
                t.second = checked_mul(t.second, k);
            constant = checked_mul(constant, k);
        }
    };

    class EquationParser {
    public:
        explicit EquationParser(std::string_view text) : _text(text) {}

        auto parse() -> std::pair<LinearForm, LinearForm>
        {
            auto lhs = parse_sum();
            skip_space();
            if (! consume('='))
                fail(at_end() ? "expected '='" : "unexpected character");
            auto rhs = parse_sum();
            skip_space();
            if (! at_end())
                fail(peek() == '=' ? "more than one '='" : "unexpected character");
            return {std::move(lhs), std::move(rhs)};
        }

    private:
        std::string_view _text;
        std::size_t _pos = 0;

        [[noreturn]] void fail(const std::string & what) const
        {
            throw ParseError(what + " at offset " + std::to_string(_pos) + " in \"" + std::string(_text) + "\"");
        }

        auto at_end() const -> bool { return _pos >= _text.size(); }
        auto peek() const -> char { return at_end() ? '\0' : _text[_pos]; }

        void skip_space()
        {
            while (! at_end() && std::isspace(static_cast<unsigned char>(_text[_pos])))
                ++_pos;
        }

        auto consume(char c) -> bool
        {
            skip_space();
            if (peek() == c) {
                ++_pos;
                return true;
            }
            return false;
        }

        // sum := ['+'|'-'] product (('+'|'-') product)*
        auto parse_sum() -> LinearForm
        {
            LinearForm result;
            Int sign = 1;
            if (consume('-'))
                sign = -1;
            else
                consume('+');
            result.add(parse_product(), sign);
            while (true) {
                if (consume('+'))
                    result.add(parse_product(), 1);
                else if (consume('-'))
                    result.add(parse_product(), -1);
                else
                    break;
            }
            return result;
        }

        // product := factor (['*'] factor)*   -- implicit multiplication allowed
        auto parse_product() -> LinearForm
        {
            auto result = parse_factor();
            while (true) {
                skip_space();
                bool explicit_star = consume('*');
                skip_space();
                char c = peek();
                bool starts_factor = std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c))
                    || c == '_' || c == '(';
                if (! starts_factor) {
                    if (explicit_star)
                        fail("expected a factor after '*'");
                    break;
                }
                auto rhs = parse_factor();
                result = multiply(result, rhs);
            }
            return result;
        }

        auto multiply(const LinearForm & a, const LinearForm & b) -> LinearForm
        {
            if (a.is_constant()) {
                LinearForm r = b;
                r.scale(a.constant);
                return r;
            }
            if (b.is_constant()) {
                LinearForm r = a;
                r.scale(b.constant);
                return r;
            }
            fail("nonlinear term");
        }

        auto parse_factor() -> LinearForm
        {
            skip_space();
            char c = peek();
            if (c == '(') {
                ++_pos;
                auto inner = parse_sum();
                if (! consume(')'))
                    fail("expected ')'");
                return inner;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                Int value = 0;
                while (! at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                    value = checked_add(checked_mul(value, 10), peek() - '0');
                    ++_pos;
                }
                LinearForm f;
                f.constant = value;
                return f;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = _pos;
                while (! at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
                    ++_pos;
                LinearForm f;
                f.add_term(std::string(_text.substr(start, _pos - start)), 1);
                return f;
            }
            fail(at_end() ? "unexpected end of input" : "unexpected character");
        }
    };

} // namespace detail

/// Parses "LHS = RHS" with integer coefficients into sum(a_i x_i) = 0.
///
/// Variables are ordered by first appearance, repeated variables are
/// merged, and the right-hand side is moved across with its sign flipped.
/// Accepts implicit multiplication ("2z", "2(x-y)") and '*'.
inline auto parse_equation(std::string_view text) -> LinearEquation
{
    auto [lhs, rhs] = detail::EquationParser(text).parse();
    lhs.add(rhs, -1);
    if (lhs.constant != 0)
        throw ParseError("equation is not homogeneous (nonzero constant term) in \"" + std::string(text) + "\"");

    std::vector<Int> coefficients;
    for (auto & [name, c] : lhs.terms) {
        if (c == 0)
            throw DegenerateEquation("variable '" + name + "' has net coefficient 0");
        coefficients.push_back(c);
    }
    if (coefficients.size() < 2)
        throw DegenerateEquation("an equation needs at least two variables");

    auto first = text.find_first_not_of(" \t\r\n");
    auto last = text.find_last_not_of(" \t\r\n");
    std::string display = first == std::string_view::npos ? std::string{} : std::string(text.substr(first, last - first + 1));
    return LinearEquation(std::move(coefficients), std::move(display));
}

/// Name of variable `i` in rendered output: x, y, z, w for up to four
/// variables, x1..xn beyond that.
inline auto variable_name(std::size_t i, std::size_t arity) -> std::string
{
    static constexpr const char * short_names[] = {"x", "y", "z", "w"};
    if (arity <= 4)
        return short_names[i];
    return "x" + std::to_string(i + 1);
}

/// Renders as "a1 x + a2 y ... = 0", e.g. "2x - 2y - 3z = 0".
inline auto render(const LinearEquation & eq) -> std::string
{
    std::string out;
    for (std::size_t i = 0; i < eq.arity(); ++i) {
        Int a = eq.coefficient(i);
        if (i == 0)
            out += a < 0 ? "-" : "";
        else
            out += a < 0 ? " - " : " + ";
        Int m = a < 0 ? -a : a;
        if (m != 1)
            out += std::to_string(m);
        out += variable_name(i, eq.arity());
    }
    out += " = 0";
    return out;
}

/// Parses a comma-separated coefficient list such as "1,-1,-1".
inline auto parse_coefficients(std::string_view text) -> LinearEquation
{
    std::vector<Int> coefficients;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto next = text.find(',', pos);
        auto piece = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
        auto b = piece.find_first_not_of(" \t");
        auto e = piece.find_last_not_of(" \t");
        if (b == std::string_view::npos)
            throw ParseError("empty entry in coefficient list \"" + std::string(text) + "\"");
        piece = piece.substr(b, e - b + 1);
        std::size_t i = 0;
        bool negative = false;
        if (piece[i] == '+' || piece[i] == '-') {
            negative = piece[i] == '-';
            ++i;
        }
        if (i == piece.size())
            throw ParseError("malformed coefficient \"" + std::string(piece) + "\"");
        Int value = 0;
        for (; i < piece.size(); ++i) {
            if (! std::isdigit(static_cast<unsigned char>(piece[i])))
                throw ParseError("malformed coefficient \"" + std::string(piece) + "\"");
            value = checked_add(checked_mul(value, 10), piece[i] - '0');
        }
        coefficients.push_back(negative ? -value : value);
        if (next == std::string_view::npos)
            break;
        pos = next + 1;
    }
    LinearEquation eq(std::move(coefficients));
    return LinearEquation(std::vector<Int>(eq.coefficients().begin(), eq.coefficients().end()), render(eq));
}

struct RegularityResult {
    bool regular = false;
    std::optional<std::vector<std::size_t>> witness;  // zero-based positions
};

namespace detail {

    // Calls f(positions) for every k-subset of [0, n) in lexicographic order;
    // stops early when f returns true.
    template <typename F>
    auto for_each_combination(std::size_t n, std::size_t k, F && f) -> bool
    {
        if (k > n)
            return false;
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i)
            idx[i] = i;
        while (true) {
            if (f(std::span<const std::size_t>(idx)))
                return true;
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + i - 1)
                --i;
            if (i == 0)
                return false;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }

} // namespace detail

/// Rado's criterion: regular iff some nonempty subset of coefficients sums to
/// zero. The witness is a smallest such subset, ties broken lexicographically.
inline auto is_regular(const LinearEquation & eq) -> RegularityResult
{
    auto coeffs = eq.coefficients();
    RegularityResult result;
    for (std::size_t k = 2; k <= eq.arity() && ! result.regular; ++k) {
        detail::for_each_combination(eq.arity(), k, [&](std::span<const std::size_t> subset) {
            Int s = 0;
            for (auto i : subset)
                s = checked_add(s, coeffs[i]);
            if (s == 0) {
                result.regular = true;
                result.witness = std::vector<std::size_t>(subset.begin(), subset.end());
                return true;
            }
            return false;
        });
    }
    return result;
}

/// The index set, pivot and derived parameters of the Rado decomposition:
/// sum over I of a_i is zero, s is the sum outside I, u = lcm(s, a_q) carrying
/// the sign of s, l = u / s and m = -u / a_q.
struct QuadraticDecomposition {
    std::vector<std::size_t> index_set;  // zero-based, sorted
    std::size_t pivot = 0;               // q, an element of index_set
    Int s = 0;
    Int u = 0;
    Int l = 0;
    Int m = 0;
    Int m_abs = 0;

    friend auto operator==(const QuadraticDecomposition &, const QuadraticDecomposition &) -> bool = default;
};

/// Builds the decomposition for a given zero-sum index set and pivot. Used by
/// quadratic_case and also handy to inspect the general (l != 1) case.
inline auto decompose(const LinearEquation & eq, std::vector<std::size_t> index_set, std::size_t pivot)
    -> QuadraticDecomposition
{
    std::sort(index_set.begin(), index_set.end());
    std::vector<bool> in_set(eq.arity(), false);
    Int inside = 0;
    for (auto i : index_set) {
        in_set.at(i) = true;
        inside = checked_add(inside, eq.coefficient(i));
    }
    if (inside != 0)
        throw InvalidArgument("index set does not sum to zero");
    if (! in_set.at(pivot))
        throw InvalidArgument("pivot must belong to the index set");
    Int s = 0;
    for (std::size_t i = 0; i < eq.arity(); ++i)
        if (! in_set[i])
            s = checked_add(s, eq.coefficient(i));
    if (s == 0)
        throw InvalidArgument("sum outside the index set is zero");

    Int aq = eq.coefficient(pivot);
    Int g = std::gcd(abs_value(s), abs_value(aq));
    Int lcm = checked_mul(abs_value(s) / g, abs_value(aq));
    QuadraticDecomposition d;
    d.index_set = std::move(index_set);
    d.pivot = pivot;
    d.s = s;
    d.u = s < 0 ? -lcm : lcm;
    d.l = d.u / s;
    d.m = -(d.u / aq);
    d.m_abs = abs_value(d.m);
    return d;
}

/// Among all proper zero-sum subsets I and pivots q in I whose coefficient
/// divides s, the decomposition with smallest |s / a_q| (then smallest |I|,
/// lexicographic I, smallest q). Empty when no such pair exists, including
/// the case where only the full index set sums to zero.
inline auto quadratic_case(const LinearEquation & eq) -> std::optional<QuadraticDecomposition>
{
    auto coeffs = eq.coefficients();
    std::optional<QuadraticDecomposition> best;
    for (std::size_t k = 2; k < eq.arity(); ++k) {
        detail::for_each_combination(eq.arity(), k, [&](std::span<const std::size_t> subset) {
            Int inside = 0;
            for (auto i : subset)
                inside = checked_add(inside, coeffs[i]);
            if (inside != 0)
                return false;
            Int s = checked_sub(eq.coefficient_sum(), inside);
            if (s == 0)
                return false;  // s = 0 leaves m undefined
            for (auto q : subset) {
                if (s % coeffs[q] != 0)
                    continue;
                auto d = decompose(eq, std::vector<std::size_t>(subset.begin(), subset.end()), q);
                if (! best || d.m_abs < best->m_abs)
                    best = std::move(d);
            }
            return false;
        });
    }
    return best;
}

} // namespace radolab
