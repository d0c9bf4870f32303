#pragma once

#include "q6/core.hpp"
#include "q6/numbers.hpp"
#include "q6/tables.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace q6 {

// Shared read-only tables for a scan run.  mk/pk tables are filled on
// demand per truncation index.
struct ScanTables {
    int limit;
    SequenceTable p, b6, q2;
    std::map<int, SequenceTable> mk, pk;

    explicit ScanTables(int limit_)
        : limit(limit_), p(p_table(limit_)), b6(b6_table(limit_, "recurrence")),
          q2(q2_table(limit_, "recurrence"))
    {
    }

    const SequenceTable& mk_at(int k)
    {
        auto it = mk.find(k);
        if (it == mk.end()) it = mk.emplace(k, mk_table(k, limit)).first;
        return it->second;
    }

    const SequenceTable& pk_at(int k)
    {
        auto it = pk.find(k);
        if (it == pk.end()) it = pk.emplace(k, pk_table(k, limit)).first;
        return it->second;
    }
};

// Outcome of scanning one (conjecture, k) pair over 0..limit.  The scan
// never asserts a conjecture: a counterexample is reported through status,
// and sharpness is measured against the claimed threshold when one exists.
struct ScanResult {
    std::string id;
    int k = 0;
    int limit = 0;
    std::optional<std::pair<long long, Int>> counterexample; // first n with residual < 0
    std::optional<long long> first_strict;                   // first n with residual > 0
    std::optional<long long> last_equality;                  // last n with residual == 0
    std::optional<long long> claimed_sharpness;
    std::optional<bool> sharpness_match;

    bool violated() const { return counterexample.has_value(); }
};

namespace detail {

// Signed bilateral pentagonal sum with scaled shifts over a table, summing
// (-1)^j f(n - scale * j(3j-1)/2) for j in the given window.
inline Int windowed_pentagonal_sum(const SequenceTable& f, long long n, long long lo,
                                   long long hi, long long scale)
{
    Int acc = 0;
    for (long long j = lo; j <= hi; ++j) {
        long long arg = n - scale * (j * (3 * j - 1) / 2);
        if (arg < 0) continue;
        if (j % 2 == 0)
            acc += f.at(arg);
        else
            acc -= f.at(arg);
    }
    return acc;
}

// sum over all j in Z of (-1)^j f(n - 3j(3j-1)), arguments clipped at 0.
inline Int expanded_pentagonal_sum(const SequenceTable& f, long long n)
{
    Int acc = 0;
    bilateral([&](long long j) {
        long long arg = n - 3 * j * (3 * j - 1);
        if (arg < 0) return false;
        if (j % 2 == 0)
            acc += f.at(arg);
        else
            acc -= f.at(arg);
        return true;
    });
    return acc;
}

// sum_{j>=0} rho(j) f(n - scale * j(j+1)/2)
inline Int rho_sum(const SequenceTable& f, long long n, long long scale, long long jmax = -1)
{
    Int acc = 0;
    for (long long j = 0; jmax < 0 || j <= jmax; ++j) {
        long long arg = n - scale * (j * (j + 1) / 2);
        if (arg < 0) break;
        if (rho(j) == 1)
            acc += f.at(arg);
        else
            acc -= 2 * f.at(arg);
    }
    return acc;
}

} // namespace detail

// The scannable conjecture families.  Branchy ids carry the branch in the
// name; k is the truncation index (k >= 0 for the rho-truncation families,
// k >= 1 elsewhere, ignored by c8-1-2).
inline const std::vector<std::string>& conjecture_ids()
{
    static const std::vector<std::string> ids = {
        "cor81",        "c8-1-2",        "conj-q2-p-i",   "conj-q2-p-ii",
        "cj2",          "cj2a",          "ineq12",        "ineq12a",
        "conj-b6-rho-i", "conj-b6-rho-ii", "cj5",          "cj5a",
        "ineq13",       "ineq13a",
    };
    return ids;
}

inline int conjecture_min_k(std::string_view id)
{
    if (id == "c8-1-2") return 0;   // no index
    if (id == "conj-q2-p-i" || id == "conj-q2-p-ii" || id == "conj-b6-rho-i" ||
        id == "conj-b6-rho-ii")
        return 0;
    return 1;
}

// residual(n) and the claimed strictness threshold for one (id, k).
inline std::pair<std::function<Int(long long)>, std::optional<long long>>
conjecture_residual(std::string_view id, int k, ScanTables& t)
{
    const long long kk = k;
    if (id == "cor81") {
        if (k < 1) throw Error("cor81: k must be positive");
        return {[&t, kk](long long n) {
                    Int trunc = 0;
                    for (long long j = -(kk - 1); j <= kk; ++j) {
                        long long arg = n - 3 * j * (3 * j - 1);
                        if (arg < 0) continue;
                        if (j % 2 == 0)
                            trunc += t.p.at(arg);
                        else
                            trunc -= t.p.at(arg);
                    }
                    Int r = t.b6.at(n) - trunc;
                    return (kk % 2 == 0) ? r : -r;
                },
                3 * kk * (3 * kk + 1)};
    }
    if (id == "c8-1-2") {
        return {[&t](long long n) {
                    Int upper = t.p.at(n) - t.p.at_or_zero(n - 6) - t.b6.at(n);
                    Int lower = t.b6.at(n) - (t.p.at(n) - t.p.at_or_zero(n - 6) -
                                              t.p.at_or_zero(n - 12) + t.p.at_or_zero(n - 30));
                    return upper < lower ? upper : lower;
                },
                std::nullopt};
    }
    if (id == "conj-q2-p-i") {
        return {[&t, kk](long long n) {
                    return detail::rho_sum(t.p, n, 2, 3 * kk) - t.q2.at(n);
                },
                (3 * kk + 1) * (3 * kk + 2)};
    }
    if (id == "conj-q2-p-ii") {
        return {[&t, kk](long long n) {
                    return t.q2.at(n) - detail::rho_sum(t.p, n, 2, 3 * kk + 1);
                },
                (3 * kk + 2) * (3 * kk + 3)};
    }
    if (id == "cj2") {
        if (k < 1) throw Error("cj2: k must be positive");
        return {[&t, kk](long long n) {
                    Int r = alpha_indicator(n) -
                            detail::windowed_pentagonal_sum(t.b6, n, -(kk - 1), kk, 1);
                    return (kk % 2 == 0) ? r : -r;
                },
                kk * (3 * kk + 1) / 2};
    }
    if (id == "cj2a") {
        if (k < 1) throw Error("cj2a: k must be positive");
        return {[&t, kk](long long n) {
                    Int r = alpha_indicator(n) -
                            detail::windowed_pentagonal_sum(t.b6, n, -kk, kk, 1);
                    return (kk % 2 == 0) ? -r : r;
                },
                kk * (3 * kk + 1) / 2};
    }
    if (id == "ineq12") {
        if (k < 1) throw Error("ineq12: k must be positive");
        const SequenceTable& mk = t.mk_at(k);
        return {[&mk](long long n) { return detail::expanded_pentagonal_sum(mk, n); },
                kk * (3 * kk + 1) / 2};
    }
    if (id == "ineq12a") {
        if (k < 1) throw Error("ineq12a: k must be positive");
        const SequenceTable& pk = t.pk_at(k);
        return {[&pk](long long n) { return detail::expanded_pentagonal_sum(pk, n); },
                kk * (3 * kk + 1) / 2};
    }
    if (id == "conj-b6-rho-i") {
        return {[&t, kk](long long n) {
                    return detail::rho_sum(t.b6, n, 1, 3 * kk) - beta_indicator(n);
                },
                (3 * kk + 1) * (3 * kk + 2) / 2};
    }
    if (id == "conj-b6-rho-ii") {
        return {[&t, kk](long long n) {
                    return Int(beta_indicator(n)) - detail::rho_sum(t.b6, n, 1, 3 * kk + 2);
                },
                (3 * kk + 2) * (3 * kk + 3) / 2};
    }
    if (id == "cj5") {
        if (k < 1) throw Error("cj5: k must be positive");
        return {[&t, kk](long long n) {
                    Int r = gamma_indicator(n) -
                            detail::windowed_pentagonal_sum(t.q2, n, -(kk - 1), kk, 1);
                    return (kk % 2 == 0) ? r : -r;
                },
                std::nullopt};
    }
    if (id == "cj5a") {
        if (k < 1) throw Error("cj5a: k must be positive");
        return {[&t, kk](long long n) {
                    Int r = gamma_indicator(n) -
                            detail::windowed_pentagonal_sum(t.q2, n, -kk, kk, 1);
                    return (kk % 2 == 0) ? -r : r;
                },
                std::nullopt};
    }
    if (id == "ineq13") {
        if (k < 1) throw Error("ineq13: k must be positive");
        const SequenceTable& mk = t.mk_at(k);
        return {[&mk](long long n) { return detail::rho_sum(mk, n, 2); }, std::nullopt};
    }
    if (id == "ineq13a") {
        if (k < 1) throw Error("ineq13a: k must be positive");
        const SequenceTable& pk = t.pk_at(k);
        return {[&pk](long long n) { return detail::rho_sum(pk, n, 2); }, std::nullopt};
    }
    throw Error("scan: unknown conjecture id '" + std::string(id) + "'");
}

// Evaluates the signed residual for every n <= limit; records the first
// sign violation and the sharpness data.  sharpness_match demands equality
// strictly below the claimed bound and strict positivity at and above it.
inline ScanResult scan(std::string_view id, int k, ScanTables& tables)
{
    auto [residual, claimed] = conjecture_residual(id, k, tables);
    ScanResult res;
    res.id = std::string(id);
    res.k = k;
    res.limit = tables.limit;
    res.claimed_sharpness = claimed;
    bool match = claimed.has_value();
    for (long long n = 0; n <= tables.limit; ++n) {
        Int r = residual(n);
        if (r < 0 && !res.counterexample) res.counterexample = std::make_pair(n, r);
        if (r > 0 && !res.first_strict) res.first_strict = n;
        if (r == 0) res.last_equality = n;
        if (claimed) {
            if (n < *claimed && r != 0) match = false;
            if (n >= *claimed && r <= 0) match = false;
        }
    }
    if (claimed) res.sharpness_match = match;
    return res;
}

inline ScanResult scan(std::string_view id, int k, int limit)
{
    ScanTables tables(limit);
    return scan(id, k, tables);
}

// Scans the listed ids over k = min_k(id)..k_max (c8-1-2 once) and merges
// the results deterministically by (id, k).
inline std::vector<ScanResult> scan_matrix(const std::vector<std::string>& ids, int k_max,
                                           int limit)
{
    ScanTables tables(limit);
    std::vector<ScanResult> out;
    for (const std::string& id : ids) {
        if (id == "c8-1-2") {
            out.push_back(scan(id, 0, tables));
            continue;
        }
        for (int k = conjecture_min_k(id); k <= k_max; ++k) out.push_back(scan(id, k, tables));
    }
    return out;
}

// Pointwise implication chains.  The stronger statement at index k+1
// dominates the weaker one at k up to a nonnegative table value:
//   weak(k, n) = strong(k+1, n) + f(n - (k+1)(3k+2)/2),  f >= 0,
// so a weak failure without a matching strong failure is a chain violation.
struct ChainReport {
    std::string chain;
    int k_max = 0;
    int limit = 0;
    bool ok = true;
    std::optional<std::pair<int, long long>> violation; // (k, n)
};

inline std::vector<ChainReport> check_implication_chains(int k_max, int limit)
{
    ScanTables tables(limit);
    std::vector<ChainReport> out;
    const std::vector<std::pair<std::string, std::string>> chains = {
        {"cj2", "cj2a"}, {"ineq12", "ineq12a"}, {"cj5", "cj5a"}, {"ineq13", "ineq13a"}};
    for (const auto& [strong_id, weak_id] : chains) {
        ChainReport rep;
        rep.chain = strong_id + " => " + weak_id;
        rep.k_max = k_max;
        rep.limit = limit;
        for (int k = 1; k < k_max && rep.ok; ++k) {
            auto weak = conjecture_residual(weak_id, k, tables).first;
            auto strong = conjecture_residual(strong_id, k + 1, tables).first;
            for (long long n = 0; n <= limit; ++n) {
                if (weak(n) < 0 && strong(n) >= 0) {
                    rep.ok = false;
                    rep.violation = std::make_pair(k, n);
                    break;
                }
            }
        }
        out.push_back(rep);
    }
    return out;
}

// CSV rendering: one row per (id, k).
inline std::string scan_results_csv(const std::vector<ScanResult>& results)
{
    std::string csv = "id,k,status,first_strict_n,claimed_bound,match\n";
    for (const ScanResult& r : results) {
        csv += r.id + "," + std::to_string(r.k) + ",";
        csv += r.violated() ? "counterexample(n=" + std::to_string(r.counterexample->first) + ")"
                            : "verified";
        csv += ",";
        if (r.first_strict) csv += std::to_string(*r.first_strict);
        csv += ",";
        if (r.claimed_sharpness) csv += std::to_string(*r.claimed_sharpness);
        csv += ",";
        if (r.sharpness_match) csv += (*r.sharpness_match ? "yes" : "no");
        csv += "\n";
    }
    return csv;
}

} // namespace q6
