#pragma once

#include <radolab/errors.hpp>

#include <cstdint>
#include <numeric>

namespace radolab {

using Int = std::int64_t;

inline auto checked_add(Int a, Int b) -> Int
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticOverflow("integer overflow in addition");
    return r;
}

inline auto checked_sub(Int a, Int b) -> Int
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw ArithmeticOverflow("integer overflow in subtraction");
    return r;
}

inline auto checked_mul(Int a, Int b) -> Int
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticOverflow("integer overflow in multiplication");
    return r;
}

inline auto checked_neg(Int a) -> Int
{
    return checked_sub(0, a);
}

/// Mathematical floor of a/b for b != 0 (rounds towards negative infinity).
inline auto floor_div(Int a, Int b) -> Int
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline auto abs_value(Int a) -> Int
{
    return a < 0 ? checked_neg(a) : a;
}

/// Binomial coefficient with C(n, k) = 0 for k < 0 or k > n, and for n < 0.
inline auto binomial(Int n, Int k) -> Int
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Int r = 1;
    for (Int i = 1; i <= k; ++i) {
        // r * (n - k + i) is always divisible by i at this point
        Int g = std::gcd(r, i);
        Int num = (n - k + i) / (i / g);
        r = checked_mul(r / g, num);
    }
    return r;
}

/// Integer power with overflow check.
inline auto checked_pow(Int base, unsigned exp) -> Int
{
    Int r = 1;
    for (unsigned i = 0; i < exp; ++i)
        r = checked_mul(r, base);
    return r;
}

} // namespace radolab
