#pragma once

#include <radolab/arith.hpp>
#include <radolab/errors.hpp>
#include <radolab/families.hpp>
#include <radolab/solutions.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace radolab {

/// How a published formula is claimed to relate to the true quantity.
enum class Relation {
    equal,       // formula = quantity
    upper_strict // quantity < formula
};

inline auto to_string(Relation r) -> std::string { return r == Relation::equal ? "eq" : "lt"; }

/// One evaluated closed form. `quantity` is "total", "psi1", "psi2", "psi3" or "phi".
struct ClosedFormValue {
    std::string formula_id;
    std::string quantity;
    Relation relation = Relation::equal;
    Int value = 0;
    std::string formula;
};

namespace detail {

    inline auto floor_sum_i_minus_1_over_b(Int b, Int n) -> Int
    {
        Int total = 0;
        for (Int i = b + 1; i <= n; ++i)
            total = checked_add(total, floor_div(i - 1, b));
        return total;
    }

    inline auto balanced_sum_series(Int j, Int k, Int n, bool corrected) -> Int
    {
        Int total = 0;
        for (Int i = j; i <= n; ++i) {
            Int lower = corrected ? k - j - 1 : j - k - 1;
            total = checked_add(total, checked_mul(binomial(i - 1, j - 1), binomial(i - 1, lower)));
        }
        return total;
    }

} // namespace detail

/// The published solution-count formulas for a family, evaluated verbatim
/// (floors included). For the balanced-sum family a corrected variant with
/// lower index k - j - 1 is returned next to the verbatim one.
inline auto psi_closed_form(const FamilyInstance & f, Int n) -> std::vector<ClosedFormValue>
{
    if (n < 1)
        throw InvalidArgument("interval bound must be at least 1");
    const Int a = f.a, b = f.b;
    std::vector<ClosedFormValue> out;
    switch (f.family) {
    case Family::difference: {
        Int k = floor_div(n, b);
        Int total = checked_mul(b, checked_mul(k, k + 1)) / 2;
        Int psi2 = floor_div(n, b + 1);
        out.push_back({"psi.difference", "total", Relation::equal, total, "b*k*(k+1)/2, k = floor(N/b)"});
        out.push_back({"psi.difference", "psi2", Relation::equal, psi2, "floor(N/(b+1))"});
        out.push_back({"psi.difference", "psi3", Relation::equal, total - psi2, "total - floor(N/(b+1))"});
        return out;
    }
    case Family::scaled_difference: {
        Int total = detail::floor_sum_i_minus_1_over_b(b, n);
        Int psi2 = floor_div(n, a + b) + floor_div(n, a);
        out.push_back({"psi.scaled-difference", "total", Relation::equal, total, "sum_{i=b+1}^N floor((i-1)/b)"});
        out.push_back({"psi.scaled-difference", "psi2", Relation::equal, psi2, "floor(N/(a+b)) + floor(N/a)"});
        out.push_back({"psi.scaled-difference", "psi3", Relation::equal, total - psi2, "total - psi2"});
        return out;
    }
    case Family::x_ay_abz: {
        if (a < 2 || b < 2)
            throw UnsupportedFamily("x+ay=abz solution counts need a, b >= 2");
        Int bound = checked_mul(floor_div(n - 1, b), floor_div(n, a));
        Int ab = checked_mul(a, b);
        Int psi2 = floor_div(n, a * (b - 1)) + floor_div(n, ab - 1)
            + (b % (a + 1) == 0 ? floor_div(checked_mul(n, a + 1), ab) : floor_div(n, ab));
        out.push_back({"psi.x+ay=abz", "total", Relation::upper_strict, bound, "floor((N-1)/b)*floor(N/a)"});
        out.push_back({"psi.x+ay=abz", "psi2", Relation::equal, psi2,
            b % (a + 1) == 0 ? "floor(N/(a(b-1))) + floor(N/(ab-1)) + floor(N(a+1)/(ab))"
                             : "floor(N/(a(b-1))) + floor(N/(ab-1)) + floor(N/(ab))"});
        out.push_back({"psi.x+ay=abz", "psi3", Relation::upper_strict, bound - psi2, "floor((N-1)/b)*floor(N/a) - psi2"});
        return out;
    }
    case Family::balanced_sum: {
        const Int j = a, k = b;
        if (j < 1 || k <= j)
            throw UnsupportedFamily("balanced sum needs 1 <= j < k");
        out.push_back({"psi.balanced-sum", "total", Relation::equal, detail::balanced_sum_series(j, k, n, false),
            "sum_{i=j}^N C(i-1,j-1)*C(i-1,j-k-1)"});
        out.push_back({"psi.balanced-sum.corrected", "total", Relation::equal,
            detail::balanced_sum_series(j, k, n, true), "sum_{i=j}^N C(i-1,j-1)*C(i-1,k-j-1)"});
        return out;
    }
    default: break;
    }
    throw UnsupportedFamily("no closed-form solution count for family " + family_id(f.family));
}

/// The published maximum dependency degree formulas, evaluated verbatim.
inline auto phi_closed_form(const FamilyInstance & f, Int n) -> ClosedFormValue
{
    if (n < 1)
        throw InvalidArgument("interval bound must be at least 1");
    const Int a = f.a, b = f.b;
    if (f.family == Family::scaled_difference || f.family == Family::difference) {
        Int aa = f.family == Family::difference ? 1 : a;
        if (aa < b)
            return {"phi.scaled-difference.a<b", "phi", Relation::equal,
                floor_div(n - 1, b) + 2 * floor_div(n - b - 1, b) + n - b + 1,
                "floor((N-1)/b) + 2*floor((N-b-1)/b) + N - b + 1"};
        if (aa > b)
            return {"phi.scaled-difference.a>b", "phi", Relation::equal, 2 * floor_div(n, aa) + n - b + 1,
                "2*floor(N/a) + N - b + 1"};
        throw UnsupportedFamily("no closed-form dependency degree for a(x-y)=bz with a = b");
    }
    if (f.family == Family::x_ay_abz)
        return {"phi.x+ay=abz", "phi", Relation::equal, 3 * floor_div(n + 1, b), "3*floor((N+1)/b)"};
    throw UnsupportedFamily("no closed-form dependency degree for family " + family_id(f.family));
}

/// One row of a formula-versus-enumeration comparison.
struct ClosedFormDiff {
    std::string formula_id;
    FamilyInstance family;
    Int n = 0;
    std::string quantity;
    Relation relation = Relation::equal;
    std::string formula;
    Int formula_value = 0;
    Int oracle_value = 0;

    auto diff() const -> Int { return formula_value - oracle_value; }
    /// Whether the claimed relation holds on this row.
    auto holds() const -> bool
    {
        return relation == Relation::equal ? formula_value == oracle_value : oracle_value < formula_value;
    }
};

/// Compares every closed form for `f` against enumeration for N = 1..n_max.
inline auto closed_form_diffs(const FamilyInstance & f, Int n_max, bool include_psi = true, bool include_phi = true)
    -> std::vector<ClosedFormDiff>
{
    auto eq = family_equation(f);
    auto all = enumerate_solutions(eq, n_max);
    std::vector<ClosedFormDiff> rows;
    for (Int n = 1; n <= n_max; ++n) {
        auto set = all.restrict(n);
        if (include_psi) {
            auto profile = psi_profile(set);
            for (auto & v : psi_closed_form(f, n)) {
                Int oracle = 0;
                if (v.quantity == "total")
                    oracle = static_cast<Int>(profile.total);
                else
                    oracle = static_cast<Int>(profile.count(static_cast<std::size_t>(v.quantity.back() - '0')));
                rows.push_back({v.formula_id, f, n, v.quantity, v.relation, v.formula, v.value, oracle});
            }
        }
        if (include_phi) {
            auto v = phi_closed_form(f, n);
            auto oracle = static_cast<Int>(phi_max_degree(set).max_degree);
            rows.push_back({v.formula_id, f, n, v.quantity, v.relation, v.formula, v.value, oracle});
        }
    }
    return rows;
}

/// Family instances and ranges behind the committed comparison file.
inline auto standard_closed_form_diffs() -> std::vector<ClosedFormDiff>
{
    struct Spec {
        FamilyInstance f;
        bool psi, phi;
    };
    const Spec specs[] = {
        {{Family::difference, 1, 1}, true, false},
        {{Family::difference, 1, 2}, true, false},
        {{Family::difference, 1, 3}, true, false},
        {{Family::scaled_difference, 1, 2}, true, true},
        {{Family::scaled_difference, 1, 3}, true, true},
        {{Family::scaled_difference, 2, 3}, true, true},
        {{Family::scaled_difference, 2, 1}, true, true},
        {{Family::scaled_difference, 3, 1}, true, true},
        {{Family::scaled_difference, 3, 2}, true, true},
        {{Family::x_ay_abz, 2, 2}, true, true},
        {{Family::x_ay_abz, 2, 3}, true, true},
        {{Family::x_ay_abz, 3, 2}, true, true},
        {{Family::x_ay_abz, 2, 4}, true, true},
        {{Family::balanced_sum, 2, 3}, true, false},
        {{Family::balanced_sum, 2, 4}, true, false},
        {{Family::balanced_sum, 3, 4}, true, false},
    };
    std::vector<ClosedFormDiff> rows;
    for (const auto & s : specs) {
        auto part = closed_form_diffs(s.f, 24, s.psi, s.phi);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
}

inline auto closed_form_diff_csv(const std::vector<ClosedFormDiff> & rows) -> std::string
{
    std::ostringstream out;
    out << "formula_id,family,a,b,N,quantity,relation,formula,oracle,diff,holds\n";
    for (const auto & r : rows)
        out << r.formula_id << ',' << family_id(r.family.family) << ',' << r.family.a << ',' << r.family.b << ','
            << r.n << ',' << r.quantity << ',' << to_string(r.relation) << ',' << r.formula_value << ','
            << r.oracle_value << ',' << r.diff() << ',' << (r.holds() ? "yes" : "no") << '\n';
    return out.str();
}

} // namespace radolab
