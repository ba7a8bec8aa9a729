#pragma once

#include <radolab/arith.hpp>
#include <radolab/coloring.hpp>
#include <radolab/errors.hpp>

#include <cmath>
#include <numeric>
#include <string_view>
#include <vector>

namespace radolab {

// Explicit 2-colorings that witness lower bounds. Color 0 plays "R", 1 plays "B".

namespace detail {

    inline auto from_rb(std::string_view pattern) -> Coloring
    {
        std::vector<std::uint8_t> colors;
        for (char ch : pattern)
            colors.push_back(ch == 'B' ? 1 : 0);
        return Coloring(ColorCount(2), std::move(colors));
    }

    inline void require_positive(Int v, const char * name)
    {
        if (v < 1)
            throw InvalidArgument(std::string(name) + " must be a positive integer");
    }

} // namespace detail

/// b R's, b^2 + b B's, b R's: a coloring of [1, b^2 + 3b] with no
/// monochromatic solution to x - y = bz.
inline auto difference_witness(Int b) -> Coloring
{
    detail::require_positive(b, "b");
    std::vector<std::uint8_t> colors;
    colors.insert(colors.end(), static_cast<std::size_t>(b), 0);
    colors.insert(colors.end(), static_cast<std::size_t>(b * b + b), 1);
    colors.insert(colors.end(), static_cast<std::size_t>(b), 0);
    return Coloring(ColorCount(2), std::move(colors));
}

/// color(x) = 1 iff a divides x, on [1, n].
inline auto multiples_witness(Int a, Int n) -> Coloring
{
    detail::require_positive(a, "a");
    Coloring col(ColorCount(2), n);
    for (Int x = a; x <= n; x += a)
        col.set_color(x, 1);
    return col;
}

/// For a > b (after dividing out gcd(a, b)): the multiples-of-a coloring of
/// [1, a^2 - 1], free of monochromatic solutions to a(x - y) = bz.
inline auto scaled_difference_witness(Int a, Int b) -> Coloring
{
    detail::require_positive(a, "a");
    detail::require_positive(b, "b");
    Int g = std::gcd(a, b);
    a /= g;
    b /= g;
    if (a <= b)
        throw InvalidArgument("scaled_difference_witness needs a > b after reduction");
    return multiples_witness(a, a * a - 1);
}

/// For a <= b (after dividing out gcd(a, b)): 1 on the multiples of a up to
/// ab, 0 elsewhere, on [1, b^2 + b].
inline auto small_multiples_witness(Int a, Int b) -> Coloring
{
    detail::require_positive(a, "a");
    detail::require_positive(b, "b");
    Int g = std::gcd(a, b);
    a /= g;
    b /= g;
    if (a > b)
        throw InvalidArgument("small_multiples_witness needs a <= b after reduction");
    Coloring col(ColorCount(2), b * b + b);
    for (Int x = a; x <= a * b; x += a)
        col.set_color(x, 1);
    return col;
}

/// Exponent v(j) = floor(log_{b/a} j) for b > a, using half-open intervals
/// [(b/a)^i, (b/a)^(i+1)): the largest i with b^i <= j a^i.
inline auto log_ratio_exponent(Int a, Int b, Int j) -> Int
{
    Int i = 0;
    __int128 num = b, den = a;
    while (true) {
        __int128 rhs;
        if (__builtin_mul_overflow(static_cast<__int128>(j), den, &rhs))
            break;
        if (num > rhs)
            return i;
        ++i;
        if (__builtin_mul_overflow(num, static_cast<__int128>(b), &num)
            || __builtin_mul_overflow(den, static_cast<__int128>(a), &den))
            break;
    }
    // past 128-bit range; a > 1 here (powers of b alone stay small), so j is
    // never an exact power of b/a and the floating comparison has no tie
    long double ratio = std::log(static_cast<long double>(b) / static_cast<long double>(a));
    long double lj = std::log(static_cast<long double>(j));
    while (static_cast<long double>(i + 1) * ratio <= lj)
        ++i;
    return i;
}

/// Colors j in [1, n] by the parity of v(j); no monochromatic solution to
/// ax = by exists under it since every solution has v(x) = v(y) + 1.
inline auto nonregular_witness_coloring(Int a, Int b, Int n) -> Coloring
{
    detail::require_positive(a, "a");
    detail::require_positive(b, "b");
    Int g = std::gcd(a, b);
    a /= g;
    b /= g;
    if (a == b)
        throw InvalidArgument("ax = by with a = b is trivially regular");
    if (a > b)
        std::swap(a, b);
    Coloring col(ColorCount(2), n);
    for (Int j = 1; j <= n; ++j)
        col.set_color(j, static_cast<int>(log_ratio_exponent(a, b, j) % 2));
    return col;
}

/// RBRB on [1, 4] for x + y + az = (a+1)w, a > 3.
inline auto x_y_az_a1w_witness() -> Coloring { return detail::from_rb("RBRB"); }

/// RBBRBRRBR on [1, 9] for 2x + 2y + az = (a+3)w, a > 24.
inline auto two_two_a3_witness() -> Coloring { return detail::from_rb("RBBRBRRBR"); }

/// RBRBBRBRBRRBRB on [1, 14] for 3x + 3y + az = (a+5)w, a >= 30.
inline auto three_three_a5_witness() -> Coloring { return detail::from_rb("RBRBBRBRBRRBRB"); }

} // namespace radolab
