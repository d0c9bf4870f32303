#pragma once

#include "q6/core.hpp"
#include "q6/numbers.hpp"
#include "q6/series.hpp"
#include "q6/tables.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace q6 {

// Outcome of one suite sweep over 0..limit.  status is pass exactly when
// first_failure is absent.
struct VerificationReport {
    std::string suite;
    int limit = 0;
    std::string params;
    bool pass = true;
    struct Failure {
        long long n;
        std::string expected;
        std::string got;
    };
    std::optional<Failure> first_failure;
    std::vector<Failure> failures; // filled only in collect_all mode
    long long checked = 0;
    double elapsed_ms = 0.0;
};

struct SuiteParams {
    std::vector<int> ks = {1, 2, 3, 4, 5, 6, 7, 8}; // th5/th5a convolution indices
    bool collect_all = false;                        // keep sweeping past the first failure
};

namespace detail {

thread_local inline bool sweep_collect_all = false;

// check(n) returns nullopt on success or (expected, got) on failure.
template <class Check>
VerificationReport sweep(std::string suite, int limit, std::string params, Check check)
{
    auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.suite = std::move(suite);
    rep.limit = limit;
    rep.params = std::move(params);
    for (long long n = 0; n <= limit; ++n) {
        ++rep.checked;
        auto bad = check(n);
        if (bad) {
            rep.pass = false;
            if (!rep.first_failure)
                rep.first_failure = VerificationReport::Failure{n, bad->first, bad->second};
            if (!sweep_collect_all) break;
            rep.failures.push_back(VerificationReport::Failure{n, bad->first, bad->second});
        }
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

using CheckResult = std::optional<std::pair<std::string, std::string>>;

inline CheckResult expect_eq(const Int& expected, const Int& got)
{
    if (expected == got) return std::nullopt;
    return std::make_pair(expected.str(), got.str());
}

// sum_{j=lo}^{hi} (-1)^j f(n - j(3j-1)/2), truncated at negative arguments.
inline Int pentagonal_partial_sum(const SequenceTable& f, long long n, long long lo, long long hi)
{
    Int acc = 0;
    for (long long j = lo; j <= hi; ++j) {
        long long arg = n - j * (3 * j - 1) / 2;
        if (arg < 0) continue;
        if (j % 2 == 0)
            acc += f.at(arg);
        else
            acc -= f.at(arg);
    }
    return acc;
}

// sum_{j>=0} rho(j) f(n - scale * j(j+1)/2)
inline Int rho_triangular_sum(const SequenceTable& f, long long n, long long scale)
{
    Int acc = 0;
    for (long long j = 0;; ++j) {
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

// The seventeen identity suites.  Each evaluates one residual formula for
// every n in 0..limit against independently produced tables or series.
inline const std::vector<std::tuple<std::string, std::string, std::string>>& suite_catalog()
{
    static const std::vector<std::tuple<std::string, std::string, std::string>> catalog = {
        {"th1-signed-count",
         "signed length census of 6-regular partitions against q2",
         "(-1)^n q2(n) = b6e(n) - b6o(n)"},
        {"th3-c-d",
         "mod-48 residue tables assemble q2 and b6",
         "q2(n) = c(n) - d(n-2); b6(n) = c(n) + d(n-2)"},
        {"cor15-b6eo-b6ee",
         "parity split of b6 matches the c/d tables",
         "b6e(n) = c(n) [n even] / d(n-2) [n odd]; b6o complementary; "
         "c(n) = b6ee(n); d(n) = b6eo(n+2)"},
        {"th5-convolution",
         "truncated expanded-pentagonal sum against the b6*mk convolution",
         "(-1)^k (b6(n) - sum_{j=-(k-1)}^{k} (-1)^j p(n-3j(3j-1))) = "
         "sum_{j=0}^{floor(n/6)} b6(n-6j) mk(j)"},
        {"th5a-convolution",
         "truncated expanded-pentagonal sum against the b6*pk convolution",
         "(-1)^{k-1} (b6(n) - sum_{j=-k}^{k} (-1)^j p(n-3j(3j-1))) = "
         "sum_{j=0}^{floor(n/6)} b6(n-6j) pk(j)"},
        {"eq5-recurrence",
         "pentagonal recurrence residual for b6",
         "sum_{j in Z} (-1)^j b6(n-j(3j-1)/2) = [n=3k(3k-1)] (-1)^k"},
        {"th6-recurrence",
         "rho-weighted triangular recurrence residual for b6",
         "sum_{j>=0} rho(j) b6(n-j(j+1)/2) = [n=k(3k-2)] (-1)^k"},
        {"th8i-rho-sum",
         "rho-weighted doubled-triangular sum for q2",
         "q2(n) = sum_{j>=0} rho(j) p(n-j(j+1))"},
        {"th8ii-watson",
         "octagonal-shifted scaled p sum for q2",
         "q2(n) = sum_{j in Z} p((n-j(3j-2))/3), p(x)=0 off N"},
        {"th10i",
         "pentagonal recurrence residual for q2",
         "sum_{j in Z} (-1)^j q2(n-j(3j-1)/2) = [n=k(k+1), k>=0] rho(k)"},
        {"th10ii",
         "tripled-pentagonal recurrence residual for q2",
         "sum_{j in Z} (-1)^j q2(n-3j(3j-1)/2) = [n=k(3k-2)]"},
        {"parity-q2-b6",
         "q2 and b6 share parity",
         "q2(n) = b6(n) (mod 2)"},
        {"mod2-corollary",
         "expanded-pentagonal p sum matches q2 mod 2",
         "sum_{j in Z} p(n-3j(3j-1)) = q2(n) (mod 2)"},
        {"mod3-corollary",
         "doubled-triangular p sum matches q2 mod 3",
         "sum_{j>=0} p(n-j(j+1)) = q2(n) (mod 3)"},
        {"octagonal-parity",
         "unsigned tripled-pentagonal b6 sum is odd exactly on octagonal n",
         "sum_{j in Z} b6(n-3j(3j-1)/2) odd <=> n = k(3k-2)"},
        {"mex-remark",
         "least-absent-even-part census assembles q2",
         "sum_{2j=2 (mod 6)} pm_{2j}(n) - sum_{2j=4 (mod 6)} pm_{2j}(n) = q2(n)"},
        {"q2-b6ee-minus-b6eo",
         "signed even-part census of 6-regular partitions against q2",
         "q2(n) = b6ee(n) - b6eo(n)"},
    };
    return catalog;
}

inline VerificationReport run_suite(std::string_view id, int limit,
                                    const SuiteParams& params = {})
{
    if (limit < 0) throw Error("run_suite: limit must be nonnegative");
    detail::sweep_collect_all = params.collect_all;

    if (id == "th1-signed-count") {
        SequenceTable q2 = q2_table(limit, "recurrence");
        ProductSpec spec{
            {{1, 1, 6, -1}, {1, 2, 6, -1}, {1, 3, 6, -1}, {1, 4, 6, -1}, {1, 5, 6, -1}}};
        TruncatedSeries s = build_product(spec, limit);
        return detail::sweep(std::string(id), limit, "", [&](long long n) {
            Int lhs = (n % 2 == 0) ? q2.at(n) : -q2.at(n);
            return detail::expect_eq(lhs, s.coeff(static_cast<int>(n)));
        });
    }
    if (id == "th3-c-d") {
        SequenceTable q2 = q2_table(limit, "recurrence");
        SequenceTable b6 = b6_table(limit, "recurrence");
        auto [c, d] = cd_tables(limit);
        return detail::sweep(std::string(id), limit, "", [&](long long n) -> detail::CheckResult {
            Int dshift = d.at_or_zero(n - 2);
            if (auto bad = detail::expect_eq(q2.at(n), c.at(n) - dshift)) return bad;
            return detail::expect_eq(b6.at(n), c.at(n) + dshift);
        });
    }
    if (id == "cor15-b6eo-b6ee") {
        auto [b6e, b6o] = b6_length_split_tables(limit);
        auto [b6ee, b6eo] = b6_even_split_tables(limit + 2);
        auto [c, d] = cd_tables(limit);
        return detail::sweep(std::string(id), limit, "", [&](long long n) -> detail::CheckResult {
            Int dshift = d.at_or_zero(n - 2);
            const Int& even_side = (n % 2 == 0) ? c.at(n) : dshift;
            const Int& odd_side = (n % 2 == 0) ? dshift : c.at(n);
            if (auto bad = detail::expect_eq(even_side, b6e.at(n))) return bad;
            if (auto bad = detail::expect_eq(odd_side, b6o.at(n))) return bad;
            if (auto bad = detail::expect_eq(c.at(n), b6ee.at(n))) return bad;
            return detail::expect_eq(d.at(n), b6eo.at(n + 2));
        });
    }
    if (id == "th5-convolution" || id == "th5a-convolution") {
        bool variant_a = (id == "th5a-convolution");
        SequenceTable p = p_table(limit);
        SequenceTable b6 = b6_table(limit, "recurrence");
        VerificationReport combined;
        combined.suite = std::string(id);
        combined.limit = limit;
        for (int k : params.ks) {
            SequenceTable conv =
                variant_a ? pk_table(k, limit / 6) : mk_table(k, limit / 6);
            int sign = variant_a ? parity_sign(k - 1) : parity_sign(k);
            long long lo = variant_a ? -k : -(k - 1);
            VerificationReport rep = detail::sweep(
                std::string(id), limit, "k=" + std::to_string(k),
                [&](long long n) {
                    Int truncated = 0;
                    for (long long j = lo; j <= k; ++j) {
                        long long arg = n - 3 * j * (3 * j - 1);
                        if (arg < 0) continue;
                        if (j % 2 == 0)
                            truncated += p.at(arg);
                        else
                            truncated -= p.at(arg);
                    }
                    Int lhs = b6.at(n) - truncated;
                    if (sign < 0) lhs = -lhs;
                    Int rhs = 0;
                    for (long long j = 0; 6 * j <= n; ++j) {
                        const Int& w = conv.at(j);
                        if (w != 0) rhs += b6.at(n - 6 * j) * w;
                    }
                    return detail::expect_eq(lhs, rhs);
                });
            combined.checked += rep.checked;
            combined.elapsed_ms += rep.elapsed_ms;
            if (!rep.pass && combined.pass) {
                combined.pass = false;
                combined.first_failure = rep.first_failure;
                combined.params = rep.params;
            }
        }
        if (combined.params.empty()) {
            combined.params = "k in {";
            for (size_t i = 0; i < params.ks.size(); ++i)
                combined.params += (i ? "," : "") + std::to_string(params.ks[i]);
            combined.params += "}";
        }
        return combined;
    }
    if (id == "eq5-recurrence") {
        SequenceTable b6 = b6_table(limit, "recurrence");
        return detail::sweep(std::string(id), limit, "", [&](long long n) {
            Int lhs = detail::signed_bilateral_sum(
                b6, n, [](long long j) { return j * (3 * j - 1) / 2; });
            return detail::expect_eq(Int(alpha_indicator(n)), lhs);
        });
    }
    if (id == "th6-recurrence") {
        SequenceTable b6 = b6_table(limit, "recurrence");
        return detail::sweep(std::string(id), limit, "", [&](long long n) {
            return detail::expect_eq(Int(beta_indicator(n)),
                                     detail::rho_triangular_sum(b6, n, 1));
        });
    }
    if (id == "th8i-rho-sum") {
        SequenceTable p = p_table(limit);
        SequenceTable q2 = q2_table(limit, "product");
        return detail::sweep(std::string(id), limit, "", [&](long long n) {
            return detail::expect_eq(q2.at(n), detail::rho_triangular_sum(p, n, 2));
        });
    }
    if (id == "th8ii-watson") {
        SequenceTable p = p_table(limit / 3);
        SequenceTable q2 = q2_table(limit, "product");
        return detail::sweep(std::string(id), limit, "", [&](long long n) {
            Int acc = 0;
            detail::bilateral([&](long long j) {
                long long arg = n - j * (3 * j - 2);
                if (arg < 0) return false;
                if (arg % 3 == 0) acc += p.at(arg / 3);
                return true;
            });
            return detail::expect_eq(q2.at(n), acc);
        });
    }
    if (id == "th10i") {
        SequenceTable q2 = q2_table(limit, "recurrence");
        return detail::sweep(std::string(id), limit, "", [&](long long n) {
            Int lhs = detail::signed_bilateral_sum(
                q2, n, [](long long j) { return j * (3 * j - 1) / 2; });
            return detail::expect_eq(Int(gamma_indicator(n)), lhs);
        });
    }
    if (id == "th10ii") {
        SequenceTable q2 = q2_table(limit, "product");
        return detail::sweep(std::string(id), limit, "", [&](long long n) {
            Int lhs = detail::signed_bilateral_sum(
                q2, n, [](long long j) { return 3 * (j * (3 * j - 1) / 2); });
            return detail::expect_eq(Int(is_generalized_octagonal(n) ? 1 : 0), lhs);
        });
    }
    if (id == "parity-q2-b6") {
        SequenceTable q2 = q2_table(limit, "recurrence");
        SequenceTable b6 = b6_table(limit, "euler-sum");
        return detail::sweep(std::string(id), limit, "", [&](long long n) {
            return detail::expect_eq(q2.at(n) % 2, b6.at(n) % 2);
        });
    }
    if (id == "mod2-corollary") {
        SequenceTable p = p_table(limit);
        SequenceTable q2 = q2_table(limit, "recurrence");
        return detail::sweep(std::string(id), limit, "", [&](long long n) {
            Int acc = 0;
            detail::bilateral([&](long long j) {
                long long arg = n - 3 * j * (3 * j - 1);
                if (arg < 0) return false;
                acc += p.at(arg);
                return true;
            });
            return detail::expect_eq(q2.at(n) % 2, acc % 2);
        });
    }
    if (id == "mod3-corollary") {
        SequenceTable p = p_table(limit);
        SequenceTable q2 = q2_table(limit, "recurrence");
        return detail::sweep(std::string(id), limit, "", [&](long long n) {
            Int acc = 0;
            for (long long j = 0; j * (j + 1) <= n; ++j) acc += p.at(n - j * (j + 1));
            return detail::expect_eq(q2.at(n) % 3, acc % 3);
        });
    }
    if (id == "octagonal-parity") {
        SequenceTable b6 = b6_table(limit, "recurrence");
        return detail::sweep(std::string(id), limit, "", [&](long long n) {
            Int acc = 0;
            detail::bilateral([&](long long j) {
                long long arg = n - 3 * (j * (3 * j - 1) / 2);
                if (arg < 0) return false;
                acc += b6.at(arg);
                return true;
            });
            Int expected = is_generalized_octagonal(n) ? 1 : 0;
            return detail::expect_eq(expected, acc % 2);
        });
    }
    if (id == "mex-remark") {
        SequenceTable p = p_table(limit);
        SequenceTable q2 = q2_table(limit, "recurrence");
        return detail::sweep(std::string(id), limit, "", [&](long long n) {
            // pm_{2j}(n) = p(n-(j-1)j) - p(n-j(j+1)); weight +1 on
            // 2j = 2 (mod 6), -1 on 2j = 4 (mod 6)
            Int acc = 0;
            for (long long j = 1; (j - 1) * j <= n; ++j) {
                int r = static_cast<int>(j % 3);
                if (r == 0) continue;
                Int pm = p.at(n - (j - 1) * j) - p.at_or_zero(n - j * (j + 1));
                if (r == 1)
                    acc += pm;
                else
                    acc -= pm;
            }
            return detail::expect_eq(q2.at(n), acc);
        });
    }
    if (id == "q2-b6ee-minus-b6eo") {
        SequenceTable q2 = q2_table(limit, "recurrence");
        ProductSpec spec{
            {{-1, 1, 6, -1}, {1, 2, 6, -1}, {-1, 3, 6, -1}, {1, 4, 6, -1}, {-1, 5, 6, -1}}};
        TruncatedSeries s = build_product(spec, limit);
        return detail::sweep(std::string(id), limit, "", [&](long long n) {
            return detail::expect_eq(q2.at(n), s.coeff(static_cast<int>(n)));
        });
    }
    throw Error("run_suite: unknown suite id '" + std::string(id) + "'");
}

inline std::vector<VerificationReport> run_all_suites(int limit, const SuiteParams& params = {})
{
    std::vector<VerificationReport> out;
    for (const auto& [id, desc, anchor] : suite_catalog()) out.push_back(run_suite(id, limit, params));
    return out;
}

} // namespace q6
