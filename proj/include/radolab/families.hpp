#pragma once

#include <radolab/arith.hpp>
#include <radolab/equation.hpp>
#include <radolab/errors.hpp>

#include <algorithm>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace radolab {

/// Equation families with closed-form results.
enum class Family {
    difference,         // x - y = b z
    scaled_difference,  // a(x - y) = b z
    x_ay_abz,           // x + a y = a b z
    x_ay_2az,           // x + a y = 2 a z
    x_y_az_a1w,         // x + y + a z = (a + 1) w
    two_two_a3,         // 2x + 2y + a z = (a + 3) w
    three_three_a5,     // 3x + 3y + a z = (a + 5) w
    two_two_ab,         // 2x + 2y + a z = b w
    two_variable,       // a x = b y
    balanced_sum,       // x_1 + ... + x_a = x_{a+1} + ... + x_b   (a = left count, b = arity)
};

/// Family plus its integer parameters; unused parameters stay at 1.
struct FamilyInstance {
    Family family = Family::difference;
    Int a = 1;
    Int b = 1;

    friend auto operator==(const FamilyInstance &, const FamilyInstance &) -> bool = default;
};

inline auto family_id(Family f) -> std::string
{
    switch (f) {
    case Family::difference: return "x-y=bz";
    case Family::scaled_difference: return "a(x-y)=bz";
    case Family::x_ay_abz: return "x+ay=abz";
    case Family::x_ay_2az: return "x+ay=2az";
    case Family::x_y_az_a1w: return "x+y+az=(a+1)w";
    case Family::two_two_a3: return "2x+2y+az=(a+3)w";
    case Family::three_three_a5: return "3x+3y+az=(a+5)w";
    case Family::two_two_ab: return "2x+2y+az=bw";
    case Family::two_variable: return "ax=by";
    case Family::balanced_sum: return "sum=sum";
    }
    return "?";
}

inline constexpr Family all_families[] = {Family::difference, Family::scaled_difference, Family::x_ay_abz,
    Family::x_ay_2az, Family::x_y_az_a1w, Family::two_two_a3, Family::three_three_a5, Family::two_two_ab,
    Family::two_variable, Family::balanced_sum};

/// Looks up a family by its id. "2(x-y)+az=bw" is accepted as another name
/// for the 2x+2y+az=bw table family.
inline auto parse_family(std::string_view id) -> Family
{
    std::string s;
    for (char ch : id)
        if (ch != ' ')
            s += ch;
    if (s == "2(x-y)+az=bw" || s == "2(x+y)+az=bw")
        return Family::two_two_ab;
    for (auto f : all_families)
        if (family_id(f) == s)
            return f;
    throw UnsupportedFamily("unknown equation family \"" + std::string(id) + "\"");
}

inline auto family_equation(const FamilyInstance & f) -> LinearEquation
{
    auto positive = [](Int v, const char * name) {
        if (v < 1)
            throw InvalidArgument(std::string("family parameter ") + name + " must be a positive integer");
    };
    positive(f.a, "a");
    positive(f.b, "b");
    std::vector<Int> c;
    switch (f.family) {
    case Family::difference: c = {1, -1, -f.b}; break;
    case Family::scaled_difference: c = {f.a, -f.a, -f.b}; break;
    case Family::x_ay_abz: c = {1, f.a, -checked_mul(f.a, f.b)}; break;
    case Family::x_ay_2az: c = {1, f.a, -checked_mul(2, f.a)}; break;
    case Family::x_y_az_a1w: c = {1, 1, f.a, -checked_add(f.a, 1)}; break;
    case Family::two_two_a3: c = {2, 2, f.a, -checked_add(f.a, 3)}; break;
    case Family::three_three_a5: c = {3, 3, f.a, -checked_add(f.a, 5)}; break;
    case Family::two_two_ab: c = {2, 2, f.a, -f.b}; break;
    case Family::two_variable: c = {f.a, -f.b}; break;
    case Family::balanced_sum:
        if (f.b <= f.a)
            throw InvalidArgument("balanced sum needs fewer left-hand variables than total variables");
        c.assign(static_cast<std::size_t>(f.a), 1);
        c.insert(c.end(), static_cast<std::size_t>(f.b - f.a), -1);
        break;
    }
    return LinearEquation(std::move(c), family_id(f.family));
}

namespace detail {

    inline void add_unique(std::vector<FamilyInstance> & out, FamilyInstance f)
    {
        if (std::find(out.begin(), out.end(), f) == out.end())
            out.push_back(f);
    }

    // Matches one sign orientation: `pos` and `neg` hold magnitudes, sorted ascending.
    inline void match_oriented(const std::vector<Int> & pos, const std::vector<Int> & neg, std::vector<FamilyInstance> & out)
    {
        const std::size_t n = pos.size() + neg.size();
        if (n == 2 && pos.size() == 1 && neg.size() == 1)
            add_unique(out, {Family::two_variable, std::min(pos[0], neg[0]), std::max(pos[0], neg[0])});

        if (n == 3) {
            // a(x - y) = bz: one coefficient pair +p, -p and a third of either sign
            for (auto p : pos)
                if (std::find(neg.begin(), neg.end(), p) != neg.end()) {
                    std::vector<Int> all = pos;
                    all.insert(all.end(), neg.begin(), neg.end());
                    auto it = std::find(all.begin(), all.end(), p);
                    all.erase(it);
                    it = std::find(all.begin(), all.end(), p);
                    all.erase(it);
                    Int third = all[0];
                    add_unique(out, {Family::scaled_difference, p, third});
                    if (p == 1)
                        add_unique(out, {Family::difference, 1, third});
                }
            // x + ay = abz
            if (pos.size() == 2 && neg.size() == 1 && pos[0] == 1) {
                Int a = pos[1];
                if (neg[0] % a == 0) {
                    add_unique(out, {Family::x_ay_abz, a, neg[0] / a});
                    if (neg[0] == 2 * a)
                        add_unique(out, {Family::x_ay_2az, a, 1});
                }
            }
        }

        if (n == 4 && pos.size() == 3 && neg.size() == 1) {
            Int w = neg[0];
            // two equal positives play x and y, the remaining one is a
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = i + 1; j < 3; ++j) {
                    if (pos[i] != pos[j])
                        continue;
                    Int xy = pos[i];
                    Int a = pos[3 - i - j];
                    if (xy == 1 && w == a + 1)
                        add_unique(out, {Family::x_y_az_a1w, a, 1});
                    if (xy == 2 && w == a + 3)
                        add_unique(out, {Family::two_two_a3, a, 1});
                    if (xy == 3 && w == a + 5)
                        add_unique(out, {Family::three_three_a5, a, 1});
                    if (xy == 2)
                        add_unique(out, {Family::two_two_ab, a, w});
                }
        }

        bool unit = std::all_of(pos.begin(), pos.end(), [](Int v) { return v == 1; })
            && std::all_of(neg.begin(), neg.end(), [](Int v) { return v == 1; });
        if (unit && ! pos.empty() && ! neg.empty() && pos.size() >= neg.size())
            add_unique(out, {Family::balanced_sum, static_cast<Int>(pos.size()), static_cast<Int>(n)});
    }

} // namespace detail

/// All families whose pattern the equation matches, up to reordering the
/// variables and negating the whole equation.
inline auto recognize_families(const LinearEquation & eq) -> std::vector<FamilyInstance>
{
    std::vector<FamilyInstance> out;
    for (int sign : {1, -1}) {
        std::vector<Int> pos, neg;
        for (auto a : eq.coefficients())
            (a * sign > 0 ? pos : neg).push_back(abs_value(a));
        std::sort(pos.begin(), pos.end());
        std::sort(neg.begin(), neg.end());
        detail::match_oriented(pos, neg, out);
    }
    return out;
}

} // namespace radolab
