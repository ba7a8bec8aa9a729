#pragma once

#include <radolab/arith.hpp>
#include <radolab/equation.hpp>
#include <radolab/errors.hpp>
#include <radolab/solutions.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace radolab {

/// Number of colors, at least 2. Certificates use one base-36 digit per
/// integer, so at most 36 colors are supported.
class ColorCount {
public:
    explicit ColorCount(int c) : _c(c)
    {
        if (c < 2)
            throw InvalidArgument("need at least 2 colors, got " + std::to_string(c));
        if (c > 36)
            throw InvalidArgument("at most 36 colors are supported, got " + std::to_string(c));
    }

    auto value() const -> int { return _c; }
    friend auto operator==(ColorCount, ColorCount) -> bool = default;

private:
    int _c;
};

/// A coloring of [1, N] with colors 0..c-1. color(i) is the color of the
/// integer i (one-based, matching the integers being colored).
class Coloring {
public:
    Coloring(ColorCount c, std::vector<std::uint8_t> colors) : _c(c), _colors(std::move(colors))
    {
        for (auto x : _colors)
            if (x >= _c.value())
                throw InvalidArgument("color " + std::to_string(x) + " out of range for " + std::to_string(_c.value()) + " colors");
    }

    Coloring(ColorCount c, Int n) : _c(c), _colors(static_cast<std::size_t>(n), 0) {}

    auto interval() const -> Int { return static_cast<Int>(_colors.size()); }
    auto colors() const -> ColorCount { return _c; }
    auto color(Int i) const -> int { return _colors.at(static_cast<std::size_t>(i - 1)); }

    void set_color(Int i, int color)
    {
        if (color < 0 || color >= _c.value())
            throw InvalidArgument("color out of range");
        _colors.at(static_cast<std::size_t>(i - 1)) = static_cast<std::uint8_t>(color);
    }

    auto raw() const -> const std::vector<std::uint8_t> & { return _colors; }

    /// The coloring of [1, n] obtained by truncation (n <= interval()).
    auto prefix(Int n) const -> Coloring
    {
        return Coloring(_c, std::vector<std::uint8_t>(_colors.begin(), _colors.begin() + n));
    }

    friend auto operator==(const Coloring &, const Coloring &) -> bool = default;

private:
    ColorCount _c;
    std::vector<std::uint8_t> _colors;
};

inline auto certificate_digit(int color) -> char
{
    return static_cast<char>(color < 10 ? '0' + color : 'a' + (color - 10));
}

/// Certificate string: character i-1 is the color of integer i, e.g. "0110".
inline auto to_certificate(const Coloring & coloring) -> std::string
{
    std::string s;
    s.reserve(coloring.raw().size());
    for (auto x : coloring.raw())
        s += certificate_digit(x);
    return s;
}

/// Parses a certificate string; the color count is taken from `c`, or
/// inferred as max(2, largest digit + 1) when absent.
inline auto parse_certificate(std::string_view text, std::optional<ColorCount> c = std::nullopt) -> Coloring
{
    std::vector<std::uint8_t> colors;
    int largest = 0;
    for (char ch : text) {
        int v;
        if (ch >= '0' && ch <= '9')
            v = ch - '0';
        else if (ch >= 'a' && ch <= 'z')
            v = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'Z')
            v = ch - 'A' + 10;
        else
            throw ParseError(std::string("invalid certificate character '") + ch + "'");
        largest = std::max(largest, v);
        colors.push_back(static_cast<std::uint8_t>(v));
    }
    ColorCount count = c ? *c : ColorCount(std::max(2, largest + 1));
    return Coloring(count, std::move(colors));
}

/// Lexicographically first monochromatic solution in the given solution set,
/// which must cover at least [1, coloring.interval()].
inline auto first_monochromatic(const SolutionSet & set, const Coloring & coloring) -> std::optional<std::vector<Int>>
{
    for (std::size_t i = 0; i < set.size(); ++i) {
        auto t = set[i];
        bool inside = true;
        for (auto v : t)
            if (v > coloring.interval()) {
                inside = false;
                break;
            }
        if (! inside)
            continue;
        int first = coloring.color(t[0]);
        bool mono = true;
        for (auto v : t)
            if (coloring.color(v) != first) {
                mono = false;
                break;
            }
        if (mono)
            return std::vector<Int>(t.begin(), t.end());
    }
    return std::nullopt;
}

/// The lexicographically first monochromatic solution under `coloring`, or
/// nothing when the coloring is valid.
inline auto verify_coloring(const LinearEquation & eq, const Coloring & coloring,
    std::uint64_t cap = default_enumeration_cap) -> std::optional<std::vector<Int>>
{
    if (coloring.interval() == 0)
        return std::nullopt;
    return first_monochromatic(enumerate_solutions(eq, coloring.interval(), cap), coloring);
}

} // namespace radolab
