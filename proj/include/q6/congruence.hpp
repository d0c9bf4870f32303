#pragma once

#include "q6/core.hpp"
#include "q6/numbers.hpp"
#include "q6/series.hpp"
#include "q6/tables.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace q6 {

// Deterministic primality for the desk-scale range (trial division).
inline bool is_prime(long long n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// alpha_p = 5(p^2-1)/24 mod p, cross-checked against its two equivalent
// closed forms floor(5p^2/24) mod p and -5 * 24^{-1} mod p.
inline long long alpha_p(long long p)
{
    if (p < 5 || !is_prime(p)) throw Error("alpha_p: need a prime >= 5");
    long long exact = ((5 * (p * p - 1)) / 24) % p;
    long long floor_form = ((5 * p * p) / 24) % p;
    long long inv24 = 0;
    for (long long x = 1; x < p; ++x)
        if ((24 * x) % p == 1) { inv24 = x; break; }
    long long inverse_form = imod(-5 * inv24, p);
    if (exact != floor_form || exact != inverse_form)
        throw Error("alpha_p: the three defining formulas disagree at p=" + std::to_string(p));
    return exact;
}

// Progression spec for the mod-3 families: primes p_1..p_{alpha+1} (each
// >= 5), offset index j with j != 0 (mod p_{alpha+1}), and the target
// sequence b6 or b3.
struct PrimeFamilySpec {
    std::vector<long long> primes;
    long long j = 1;
    std::string target = "b6";

    void validate() const
    {
        if (primes.empty()) throw Error("PrimeFamilySpec: need at least one prime");
        for (long long p : primes)
            if (p < 5 || !is_prime(p))
                throw Error("PrimeFamilySpec: " + std::to_string(p) + " is not a prime >= 5");
        if (imod(j, primes.back()) == 0)
            throw Error("PrimeFamilySpec: j must be nonzero mod p_{alpha+1}");
        if (target != "b6" && target != "b3")
            throw Error("PrimeFamilySpec: target must be b6 or b3");
    }
};

// Which proved statement covers the spec, if any.  The theorem needs
// p_{alpha+1} = 3 (mod 4); the earlier mod-24 family adds residues 13 and
// 17.  Anything else is exploratory: the sweep reports, it does not assert.
enum class FamilyCoverage { theorem, mod24_family, exploratory };

inline FamilyCoverage family_coverage(const PrimeFamilySpec& spec)
{
    long long p = spec.primes.back();
    if (imod(p, 4) == 3) return FamilyCoverage::theorem;
    long long r = imod(p, 24);
    if (r == 13 || r == 17) return FamilyCoverage::mod24_family;
    return FamilyCoverage::exploratory;
}

// m_n, the argument of the congruence family.  For b6:
//   m_n = p_1^2...p_{alpha+1}^2 n + [p_1^2...p_alpha^2 p(24j + 5p) - 5]/24;
// for b3 the analogous form with 12j + p and -1 over 12.  The divisibility
// of the numerator is forced for primes >= 5 and asserted here.
inline Int family_index(const PrimeFamilySpec& spec, long long n)
{
    spec.validate();
    if (n < 0) throw Error("family_index: n must be nonnegative");
    Int square_all = 1, square_front = 1;
    for (size_t i = 0; i < spec.primes.size(); ++i) {
        square_all *= Int(spec.primes[i]) * spec.primes[i];
        if (i + 1 < spec.primes.size()) square_front *= Int(spec.primes[i]) * spec.primes[i];
    }
    long long p = spec.primes.back();
    long long mult = (spec.target == "b6") ? 24 : 12;
    long long shift = (spec.target == "b6") ? 5 : 1;
    Int numerator = square_front * p * (mult * spec.j + shift * p) - shift;
    if (numerator % mult != 0)
        throw Error("family_index: numerator not divisible by " + std::to_string(mult) +
                    " (spec corruption)");
    return square_all * n + numerator / mult;
}

struct CongruenceViolation {
    long long n;
    Int index;   // m_n
    int residue; // table value mod 3
};

struct CongruenceReport {
    std::string statement; // which statement the sweep instantiates
    std::string spec;      // rendered prime/j/target description
    int table_limit = 0;
    long long checked = 0;
    std::vector<CongruenceViolation> violations;
    std::string coverage_note;
    bool exploratory = false;

    bool pass() const { return violations.empty(); }
};

namespace detail {

inline std::string render_family(const PrimeFamilySpec& spec)
{
    std::string s = spec.target + " family, primes (";
    for (size_t i = 0; i < spec.primes.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(spec.primes[i]);
    }
    return s + "), j=" + std::to_string(spec.j);
}

} // namespace detail

// Sweeps every n with m_n <= table.limit() and records the residues
// table[m_n] mod 3.  Covered specs expect all-zero residues; exploratory
// specs only report.  An empty sweep range is an error.
inline CongruenceReport verify_family(const PrimeFamilySpec& spec, const SequenceTable& table)
{
    spec.validate();
    if (table.name != spec.target)
        throw Error("verify_family: table '" + table.name + "' does not match target " +
                    spec.target);
    CongruenceReport rep;
    FamilyCoverage cov = family_coverage(spec);
    rep.statement = (spec.target == "b6") ? "mod-3 family for b6" : "mod-3 family for b3";
    rep.spec = detail::render_family(spec);
    rep.table_limit = table.limit();
    rep.exploratory = (cov == FamilyCoverage::exploratory);
    switch (cov) {
    case FamilyCoverage::theorem:
        rep.coverage_note = "p_{alpha+1} = 3 (mod 4): covered; checked only up to the table limit";
        break;
    case FamilyCoverage::mod24_family:
        rep.coverage_note = "p_{alpha+1} in {13,17} (mod 24): covered; checked only up to "
                            "the table limit";
        break;
    case FamilyCoverage::exploratory:
        rep.coverage_note = "no covering statement: exploratory report only";
        break;
    }
    if (family_index(spec, 0) > table.limit())
        throw Error("verify_family: empty check range (m_0 = " +
                    family_index(spec, 0).str() + " > table limit " +
                    std::to_string(table.limit()) + ")");
    for (long long n = 0;; ++n) {
        Int m = family_index(spec, n);
        if (m > table.limit()) break;
        long long mi = m.convert_to<long long>();
        int residue = static_cast<int>(table.at(mi) % 3);
        if (residue != 0) rep.violations.push_back({n, m, residue});
        ++rep.checked;
    }
    return rep;
}

// b3(0..limit), 3-regular partition counts; needed only by the mod-3
// family checks.  Routes: pentagonal-sum through the p table, or the
// (q^3; q^3)_oo / (q; q)_oo product.
inline SequenceTable b3_table(int limit, std::string_view method = "pentagonal-sum")
{
    if (limit < 0) throw Error("b3_table: limit must be nonnegative");
    if (method == "product") {
        ProductSpec spec{{{-1, 3, 3, 1}, {-1, 1, 1, -1}}};
        return detail::from_series("b3", "product", build_product(spec, limit));
    }
    if (method == "pentagonal-sum") {
        SequenceTable p = p_table(limit);
        std::vector<Int> v(static_cast<size_t>(limit) + 1);
        for (long long n = 0; n <= limit; ++n)
            v[static_cast<size_t>(n)] = detail::signed_bilateral_sum(
                p, n, [](long long j) { return 3 * (j * (3 * j - 1) / 2); });
        return {"b3", "pentagonal-sum", std::move(v)};
    }
    detail::unknown_method("b3", method);
}

// Searches a = 6i+1, b = 6j+1 (i, j ranging over Z) with
// a^2 + (2b)^2 = 24m + 5.  Returns the witness with the smallest |a|, or
// nothing when no representation exists; the search is bounded by
// sqrt(24m+5).
inline std::optional<std::pair<long long, long long>> two_squares_witness(long long m)
{
    if (m < 0) throw Error("two_squares_witness: m must be nonnegative");
    long long target = 24 * m + 5;
    for (long long u = 1; u * u <= target; u += 2) {
        if (u % 3 == 0) continue;
        long long rest = target - u * u;
        if (rest % 4 != 0) continue;
        long long v = isqrt(rest / 4);
        if (v < 1 || v * v != rest / 4) continue;
        if (v % 3 == 0) continue;
        long long a = (imod(u, 6) == 1) ? u : -u;
        long long b = (imod(v, 6) == 1) ? v : -v;
        return std::make_pair(a, b);
    }
    return std::nullopt;
}

// The theta product (q; q)_oo (q^4; q^4)_oo whose coefficients control the
// two-squares route: b6(n) (-1)^n matches coefficient n mod 3.
inline TruncatedSeries two_squares_series(int order)
{
    return mul(build_product({{{-1, 1, 1, 1}}}, order), build_product({{{-1, 4, 4, 1}}}, order));
}

// Single-prime corollary sweep: p = 7,11,13,17,19,23 (mod 24), all offsets
// j != floor(5p/24), arguments p^2 n + p j + alpha_p up to the table limit.
inline CongruenceReport verify_corollary_p24(long long p, const SequenceTable& b6)
{
    long long r = imod(p, 24);
    if (!is_prime(p) || (r != 7 && r != 11 && r != 13 && r != 17 && r != 19 && r != 23))
        throw Error("verify_corollary_p24: p must be a prime congruent to "
                    "7,11,13,17,19,23 (mod 24), got " + std::to_string(p));
    CongruenceReport rep;
    rep.statement = "single-prime mod-3 corollary for b6";
    rep.spec = "p=" + std::to_string(p) + ", all j in 0..p-1 except floor(5p/24)";
    rep.table_limit = b6.limit();
    rep.coverage_note = "checked only up to the table limit";
    long long ap = alpha_p(p);
    long long excluded = (5 * p) / 24;
    for (long long j = 0; j <= p - 1; ++j) {
        if (j == excluded) continue;
        for (long long n = 0;; ++n) {
            long long arg = p * p * n + p * j + ap;
            if (arg > b6.limit()) break;
            int residue = static_cast<int>(b6.at(arg) % 3);
            if (residue != 0) rep.violations.push_back({n, Int(arg), residue});
            ++rep.checked;
        }
    }
    if (rep.checked == 0)
        throw Error("verify_corollary_p24: empty check range for p=" + std::to_string(p));
    return rep;
}

} // namespace q6
