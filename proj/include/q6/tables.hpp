#pragma once

#include "q6/core.hpp"
#include "q6/numbers.hpp"
#include "q6/series.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace q6 {

// A named integer sequence f(0..limit) together with the production route
// that filled it.  Tables are immutable once produced and safe to share.
struct SequenceTable {
    std::string name;
    std::string method;
    std::vector<Int> values;

    int limit() const { return static_cast<int>(values.size()) - 1; }

    const Int& at(long long n) const
    {
        if (n < 0 || n > limit())
            throw Error(name + " table: index " + std::to_string(n) + " out of range 0.." +
                        std::to_string(limit()));
        return values[static_cast<size_t>(n)];
    }

    // Shifted-argument convention: f(n) = 0 for n < 0.
    Int at_or_zero(long long n) const { return n < 0 ? Int(0) : at(n); }
};

namespace detail {

inline SequenceTable from_series(std::string name, std::string method, TruncatedSeries s)
{
    std::vector<Int> v = s.coeffs();
    return SequenceTable{std::move(name), std::move(method), std::move(v)};
}

[[noreturn]] inline void unknown_method(std::string_view fn, std::string_view method)
{
    throw Error(std::string(fn) + "_table: unknown method tag '" + std::string(method) + "'");
}

// Fills v[n] for 0 <= n <= limit with the pentagonal-style recurrence
//   v[n] = rhs(n) + sum_{j>=1} (-1)^{j-1} [v[n - s*j(3j-1)/2] + v[n - s*j(3j+1)/2]]
// where s scales the generalized pentagonal shifts.
template <class Rhs>
std::vector<Int> pentagonal_recurrence(int limit, long long scale, Rhs rhs)
{
    std::vector<Int> v(static_cast<size_t>(limit) + 1);
    for (long long n = 0; n <= limit; ++n) {
        Int acc = rhs(n);
        for (long long j = 1;; ++j) {
            long long g1 = scale * (j * (3 * j - 1) / 2);
            long long g2 = scale * (j * (3 * j + 1) / 2);
            if (g1 > n) break;
            if (j % 2 == 1) {
                acc += v[static_cast<size_t>(n - g1)];
                if (g2 <= n) acc += v[static_cast<size_t>(n - g2)];
            } else {
                acc -= v[static_cast<size_t>(n - g1)];
                if (g2 <= n) acc -= v[static_cast<size_t>(n - g2)];
            }
        }
        v[static_cast<size_t>(n)] = std::move(acc);
    }
    return v;
}

} // namespace detail

// p(0..limit) by Euler's pentagonal-number recurrence; p(0) = 1.
inline SequenceTable p_table(int limit)
{
    if (limit < 0) throw Error("p_table: limit must be nonnegative");
    std::vector<Int> v =
        detail::pentagonal_recurrence(limit, 1, [](long long n) { return Int(n == 0 ? 1 : 0); });
    return {"p", "recurrence", std::move(v)};
}

// Signed bilateral sum over table values: sum_{j in Z} (-1)^j f(n - shift(j))
// with f = 0 on negative arguments.
namespace detail {

template <class Shift>
Int signed_bilateral_sum(const SequenceTable& f, long long n, Shift shift)
{
    Int acc = 0;
    bilateral([&](long long j) {
        long long arg = n - shift(j);
        if (arg < 0) return false;
        if (j % 2 == 0)
            acc += f.at(arg);
        else
            acc -= f.at(arg);
        return true;
    });
    return acc;
}

} // namespace detail

// b6(0..limit), the 6-regular partition counts.  Three redundant routes:
//   product     expansion of (q^6; q^6)_oo / (q; q)_oo
//   euler-sum   b6(n) = sum_{j in Z} (-1)^j p(n - 3j(3j-1))
//   recurrence  pentagonal-style recurrence with right side alpha(n)
inline SequenceTable b6_table(int limit, std::string_view method = "recurrence")
{
    if (limit < 0) throw Error("b6_table: limit must be nonnegative");
    if (method == "product") {
        ProductSpec spec{{{-1, 6, 6, 1}, {-1, 1, 1, -1}}};
        return detail::from_series("b6", "product", build_product(spec, limit));
    }
    if (method == "euler-sum") {
        SequenceTable p = p_table(limit);
        std::vector<Int> v(static_cast<size_t>(limit) + 1);
        for (long long n = 0; n <= limit; ++n)
            v[static_cast<size_t>(n)] =
                detail::signed_bilateral_sum(p, n, [](long long j) { return 3 * j * (3 * j - 1); });
        return {"b6", "euler-sum", std::move(v)};
    }
    if (method == "recurrence") {
        std::vector<Int> v = detail::pentagonal_recurrence(
            limit, 1, [](long long n) { return Int(alpha_indicator(n)); });
        return {"b6", "recurrence", std::move(v)};
    }
    detail::unknown_method("b6", method);
}

// q2(0..limit), partitions into distinct parts != +-2 (mod 6).  Four routes:
//   product     expansion of (-q, -q^3, -q^5, -q^6; q^6)_oo
//   rho-sum     q2(n) = sum_{j>=0} rho(j) p(n - j(j+1))
//   watson-sum  q2(n) = sum_{j in Z} p((n - j(3j-2))/3), p(x) = 0 off N
//   recurrence  pentagonal-style recurrence (shifts tripled), right side
//               1 at generalized octagonal n
inline SequenceTable q2_table(int limit, std::string_view method = "recurrence")
{
    if (limit < 0) throw Error("q2_table: limit must be nonnegative");
    if (method == "product") {
        ProductSpec spec{{{1, 1, 6, 1}, {1, 3, 6, 1}, {1, 5, 6, 1}, {1, 6, 6, 1}}};
        return detail::from_series("q2", "product", build_product(spec, limit));
    }
    if (method == "rho-sum") {
        SequenceTable p = p_table(limit);
        std::vector<Int> v(static_cast<size_t>(limit) + 1);
        for (long long n = 0; n <= limit; ++n) {
            Int acc = 0;
            for (long long j = 0; j * (j + 1) <= n; ++j) {
                long long arg = n - j * (j + 1);
                if (rho(j) == 1)
                    acc += p.at(arg);
                else
                    acc -= 2 * p.at(arg);
            }
            v[static_cast<size_t>(n)] = std::move(acc);
        }
        return {"q2", "rho-sum", std::move(v)};
    }
    if (method == "watson-sum") {
        SequenceTable p = p_table(limit / 3);
        std::vector<Int> v(static_cast<size_t>(limit) + 1);
        for (long long n = 0; n <= limit; ++n) {
            Int acc = 0;
            detail::bilateral([&](long long j) {
                long long arg = n - j * (3 * j - 2);
                if (arg < 0) return false;
                if (arg % 3 == 0) acc += p.at(arg / 3);
                return true;
            });
            v[static_cast<size_t>(n)] = std::move(acc);
        }
        return {"q2", "watson-sum", std::move(v)};
    }
    if (method == "recurrence") {
        std::vector<Int> v = detail::pentagonal_recurrence(
            limit, 3, [](long long n) { return Int(is_generalized_octagonal(n) ? 1 : 0); });
        return {"q2", "recurrence", std::move(v)};
    }
    detail::unknown_method("q2", method);
}

namespace detail {

// Partitions into parts from the allowed residue classes (offsets 1..m)
// of period m: the expansion of 1 / prod_{a allowed} (q^a; q^m)_oo.
inline SequenceTable allowed_parts_table(std::string name, const std::vector<int>& offsets,
                                         int modulus, int limit)
{
    ProductSpec spec;
    for (int a : offsets) spec.factors.push_back({-1, a, modulus, -1});
    return from_series(std::move(name), "product", build_product(spec, limit));
}

inline std::vector<int> complement_offsets(const std::vector<int>& forbidden, int modulus)
{
    std::vector<int> allowed;
    for (int a = 1; a <= modulus; ++a) {
        bool bad = false;
        for (int f : forbidden)
            if (imod(a, modulus) == imod(f, modulus)) bad = true;
        if (!bad) allowed.push_back(a);
    }
    return allowed;
}

} // namespace detail

// c(n): parts not congruent to 0, +-2, +-20, +-22, 24 (mod 48);
// d(n): parts not congruent to 0, +-4, +-10, +-14, 24 (mod 48).
inline std::pair<SequenceTable, SequenceTable> cd_tables(int limit)
{
    if (limit < 0) throw Error("cd_tables: limit must be nonnegative");
    std::vector<int> c_forbidden = {0, 2, -2, 20, -20, 22, -22, 24};
    std::vector<int> d_forbidden = {0, 4, -4, 10, -10, 14, -14, 24};
    SequenceTable c =
        detail::allowed_parts_table("c", detail::complement_offsets(c_forbidden, 48), 48, limit);
    SequenceTable d =
        detail::allowed_parts_table("d", detail::complement_offsets(d_forbidden, 48), 48, limit);
    return {std::move(c), std::move(d)};
}

namespace detail {

// Closed truncated-pentagonal form shared by the mk/pk tables:
//   sign * ( [1/(q;q)_oo] * sum_{j=lo}^{hi} (-1)^j q^{j(3j-1)/2}  -  1 )
// evaluated coefficientwise through the p table.
inline std::vector<Int> truncated_pentagonal_form(int limit, long long lo, long long hi, int sign)
{
    SequenceTable p = p_table(limit);
    std::vector<Int> v(static_cast<size_t>(limit) + 1);
    for (long long n = 0; n <= limit; ++n) {
        Int acc = 0;
        for (long long j = lo; j <= hi; ++j) {
            long long arg = n - j * (3 * j - 1) / 2;
            if (arg < 0) continue;
            if (j % 2 == 0)
                acc += p.at(arg);
            else
                acc -= p.at(arg);
        }
        if (n == 0) acc -= 1;
        v[static_cast<size_t>(n)] = (sign > 0) ? std::move(acc) : -std::move(acc);
    }
    return v;
}

} // namespace detail

// M_k(n): partitions of n in which k is the least positive integer that is
// not a part and the parts > k outnumber the parts < k.
inline SequenceTable mk_table(int k, int limit)
{
    if (k < 1) throw Error("mk_table: k must be positive");
    if (limit < 0) throw Error("mk_table: limit must be nonnegative");
    std::vector<Int> v =
        detail::truncated_pentagonal_form(limit, -(k - 1), k, parity_sign(k - 1));
    return {"mk(" + std::to_string(k) + ")", "truncated-pentagonal", std::move(v)};
}

// P~_k(n): partitions of n in which every part <= k appears and the least
// part > k appears at least k+1 times.
inline SequenceTable pk_table(int k, int limit)
{
    if (k < 1) throw Error("pk_table: k must be positive");
    if (limit < 0) throw Error("pk_table: limit must be nonnegative");
    std::vector<Int> v = detail::truncated_pentagonal_form(limit, -k, k, parity_sign(k));
    return {"pk(" + std::to_string(k) + ")", "truncated-pentagonal", std::move(v)};
}

// Census of partitions of n by their least absent even part.  pm[j-1] holds
// (j, pm_{2j}(n)), the count of partitions whose smallest missing even part
// is 2j; tail holds pm_{>2jmax}(n).  The entries and the tail always sum to
// p(n): pm_{2j}(n) = p(n-(j-1)j) - p(n-j(j+1)) telescopes against the tail
// p(n - jmax(jmax+1)).
struct Mex22Census {
    std::vector<std::pair<int, Int>> pm;
    Int tail;
};

inline Mex22Census mex22_census(int n, int jmax)
{
    if (n < 0) throw Error("mex22_census: n must be nonnegative");
    if (jmax < 1) throw Error("mex22_census: jmax must be positive");
    SequenceTable p = p_table(n);
    Mex22Census out;
    for (long long j = 1; j <= jmax; ++j)
        out.pm.emplace_back(static_cast<int>(j),
                            p.at_or_zero(n - (j - 1) * j) - p.at_or_zero(n - j * (j + 1)));
    out.tail = p.at_or_zero(n - static_cast<long long>(jmax) * (jmax + 1));
    return out;
}

// Length-parity refinement: b6e/b6o count 6-regular partitions with an even
// (odd) number of parts.  The signed series
//   sum (b6e(n) - b6o(n)) q^n = 1 / (-q,-q^2,-q^3,-q^4,-q^5; q^6)_oo
// combined with b6 = b6e + b6o yields both tables.
inline std::pair<SequenceTable, SequenceTable> b6_length_split_tables(int limit)
{
    if (limit < 0) throw Error("b6_length_split_tables: limit must be nonnegative");
    ProductSpec spec{{{1, 1, 6, -1}, {1, 2, 6, -1}, {1, 3, 6, -1}, {1, 4, 6, -1}, {1, 5, 6, -1}}};
    TruncatedSeries signedSeries = build_product(spec, limit);
    SequenceTable b6 = b6_table(limit, "recurrence");
    std::vector<Int> even(static_cast<size_t>(limit) + 1), odd(static_cast<size_t>(limit) + 1);
    for (int n = 0; n <= limit; ++n) {
        Int sum = b6.at(n) + signedSeries.coeff(n);
        Int diff = b6.at(n) - signedSeries.coeff(n);
        if (sum % 2 != 0 || diff % 2 != 0)
            throw Error("b6_length_split_tables: parity split failed at n=" + std::to_string(n));
        even[static_cast<size_t>(n)] = sum / 2;
        odd[static_cast<size_t>(n)] = diff / 2;
    }
    return {SequenceTable{"b6e", "product-split", std::move(even)},
            SequenceTable{"b6o", "product-split", std::move(odd)}};
}

// Even-part-count refinement: b6ee/b6eo count 6-regular partitions with an
// even (odd) number of even parts.  Signed series: each part +-2 (mod 6)
// carries weight -1, so
//   sum (b6ee(n) - b6eo(n)) q^n = 1 / [(q,q^3,q^5; q^6)_oo (-q^2,-q^4; q^6)_oo].
inline std::pair<SequenceTable, SequenceTable> b6_even_split_tables(int limit)
{
    if (limit < 0) throw Error("b6_even_split_tables: limit must be nonnegative");
    ProductSpec spec{{{-1, 1, 6, -1}, {1, 2, 6, -1}, {-1, 3, 6, -1}, {1, 4, 6, -1}, {-1, 5, 6, -1}}};
    TruncatedSeries signedSeries = build_product(spec, limit);
    SequenceTable b6 = b6_table(limit, "recurrence");
    std::vector<Int> even(static_cast<size_t>(limit) + 1), odd(static_cast<size_t>(limit) + 1);
    for (int n = 0; n <= limit; ++n) {
        Int sum = b6.at(n) + signedSeries.coeff(n);
        Int diff = b6.at(n) - signedSeries.coeff(n);
        if (sum % 2 != 0 || diff % 2 != 0)
            throw Error("b6_even_split_tables: parity split failed at n=" + std::to_string(n));
        even[static_cast<size_t>(n)] = sum / 2;
        odd[static_cast<size_t>(n)] = diff / 2;
    }
    return {SequenceTable{"b6ee", "product-split", std::move(even)},
            SequenceTable{"b6eo", "product-split", std::move(odd)}};
}

} // namespace q6
