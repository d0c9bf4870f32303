#pragma once

#include "q6/core.hpp"
#include "q6/enumerate.hpp"
#include "q6/numbers.hpp"
#include "q6/tables.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace q6 {

// ---- partition surgery -------------------------------------------------

// Parts of lam divided by k; every part must be divisible by k.
inline Partition divide_parts(const Partition& lam, int k)
{
    if (k < 1) throw Error("divide_parts: k must be positive");
    std::vector<int> out;
    for (int v : lam.parts()) {
        if (v % k != 0)
            throw Error("divide_parts: part " + std::to_string(v) + " not divisible by " +
                        std::to_string(k));
        out.push_back(v / k);
    }
    return Partition(std::move(out));
}

inline Partition multiply_parts(const Partition& lam, int k)
{
    if (k < 1) throw Error("multiply_parts: k must be positive");
    std::vector<int> out;
    for (int v : lam.parts()) out.push_back(v * k);
    return Partition(std::move(out));
}

// Multiset union of the parts.
inline Partition union_parts(const Partition& a, const Partition& b)
{
    std::vector<int> out = a.parts();
    out.insert(out.end(), b.parts().begin(), b.parts().end());
    return Partition(std::move(out));
}

// Splits lam into (parts satisfying pred, the rest); a partition of the
// multiset of parts.
template <class Pred>
std::pair<Partition, Partition> split_by(const Partition& lam, Pred pred)
{
    std::vector<int> yes, no;
    for (int v : lam.parts()) (pred(v) ? yes : no).push_back(v);
    return {Partition(std::move(yes)), Partition(std::move(no))};
}

// ---- Glaisher ----------------------------------------------------------

// Odd parts -> distinct parts: each odd part o with multiplicity m becomes
// the parts o*2^i over the binary digits of m (iterated merging of equal
// pairs).  Weight preserving.
inline Partition glaisher(const Partition& odd_parts)
{
    std::map<int, int> mult;
    for (int v : odd_parts.parts()) {
        if (v % 2 == 0)
            throw Error("glaisher: parts must be odd, got " + std::to_string(v));
        ++mult[v];
    }
    std::vector<int> out;
    for (auto [o, m] : mult)
        for (int bit = 0; (m >> bit) != 0; ++bit)
            if ((m >> bit) & 1) out.push_back(o << bit);
    return Partition(std::move(out));
}

// Distinct parts -> odd parts: each part o*2^i (o odd) splits into 2^i
// copies of o (iterated halving of even parts).
inline Partition glaisher_inverse(const Partition& distinct_parts)
{
    std::vector<int> seen = distinct_parts.parts();
    for (size_t i = 1; i < seen.size(); ++i)
        if (seen[i] == seen[i - 1])
            throw Error("glaisher_inverse: parts must be distinct");
    std::vector<int> out;
    for (int v : seen) {
        int copies = 1;
        while (v % 2 == 0) { v /= 2; copies *= 2; }
        out.insert(out.end(), static_cast<size_t>(copies), v);
    }
    return Partition(std::move(out));
}

// ---- Franklin ----------------------------------------------------------

// A pentagonal partition is empty or a staircase (2i,...,i+1) or
// (2i-1,...,i); these are exactly the fixed points of the involution.
inline bool is_pentagonal_partition(const Partition& lam)
{
    const auto& a = lam.parts();
    int ell = lam.length();
    if (ell == 0) return true;
    for (int i = 1; i < ell; ++i)
        if (a[static_cast<size_t>(i)] != a[0] - i) return false;
    return a[0] == 2 * ell || a[0] == 2 * ell - 1;
}

struct FranklinResult {
    Partition image;
    bool fixed;
};

// Franklin's involution on partitions into distinct parts: compares the
// smallest part s with the top staircase length d, moves s onto the first s
// parts when s <= d, otherwise moves the staircase diagonal down as a new
// smallest part.  Reverses the length parity except at the pentagonal fixed
// points.
inline FranklinResult franklin(const Partition& lam)
{
    const auto& a = lam.parts();
    int ell = lam.length();
    for (int i = 1; i < ell; ++i)
        if (a[static_cast<size_t>(i)] == a[static_cast<size_t>(i - 1)])
            throw Error("franklin: parts must be distinct");
    if (ell == 0) return {lam, true};
    int s = a.back();
    int d = 1;
    while (d < ell && a[static_cast<size_t>(d)] == a[0] - d) ++d;
    std::vector<int> out = a;
    if (s <= d) {
        if (ell == d && s == d) return {lam, true}; // (2i-1,...,i)
        out.pop_back();
        for (int i = 0; i < s; ++i) ++out[static_cast<size_t>(i)];
    } else {
        if (ell == d && s == d + 1) return {lam, true}; // (2i,...,i+1)
        for (int i = 0; i < d; ++i) --out[static_cast<size_t>(i)];
        out.push_back(d);
    }
    return {Partition(std::move(out)), false};
}

// ---- the involution phi on B'_6 ----------------------------------------

// B'_6(n): 6-regular partitions with at least one even part or at least one
// repeated part not congruent to 3 (mod 6).
inline bool in_b6prime(const Partition& lam)
{
    bool qualifies = false;
    const auto& a = lam.parts();
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] % 6 == 0) return false;
        if (a[i] % 2 == 0) qualifies = true;
        if (i + 1 < a.size() && a[i] == a[i + 1] && imod(a[i], 6) != 3) qualifies = true;
    }
    return qualifies;
}

// phi merges the two largest repeated non-3(mod 6) parts r into 2r when
// 2r > e, and otherwise splits the largest even part e into two halves.
// Involution on B'_6(n); reverses both the length parity and the parity of
// the number of even parts.
inline Partition phi(const Partition& lam)
{
    if (!in_b6prime(lam))
        throw Error("phi: partition " + to_string(lam) + " is not in B'_6");
    const auto& a = lam.parts();
    int r = 0, e = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (r == 0 && i + 1 < a.size() && a[i] == a[i + 1] && imod(a[i], 6) != 3) r = a[i];
        if (e == 0 && a[i] % 2 == 0) e = a[i];
    }
    std::vector<int> out = a;
    if (2 * r > e) {
        auto it = std::find(out.begin(), out.end(), r);
        out.erase(it, it + 2);
        out.push_back(2 * r);
    } else {
        out.erase(std::find(out.begin(), out.end(), e));
        out.push_back(e / 2);
        out.push_back(e / 2);
    }
    return Partition(std::move(out));
}

// ---- the bijection psi : Q'_2(n) -> Q_2(n) ------------------------------

inline bool in_q2prime(const Partition& lam)
{
    return preset_constraint("q2prime").satisfied_by(lam);
}

inline bool in_q2(const Partition& lam)
{
    return preset_constraint("q2").satisfied_by(lam);
}

// Splits lam = alpha u beta with alpha the distinct portion (one copy of
// every part of odd multiplicity) and beta the even-multiplicity remainder,
// then maps beta through Glaisher at scale 3:
//   psi(lam) = alpha u 3*glaisher(beta/3).
inline Partition psi(const Partition& lam)
{
    if (!in_q2prime(lam))
        throw Error("psi: partition " + to_string(lam) + " is not in Q'_2");
    std::map<int, int> mult;
    for (int v : lam.parts()) ++mult[v];
    std::vector<int> alpha, beta;
    for (auto [v, m] : mult) {
        if (m % 2 == 1) alpha.push_back(v);
        int even_copies = m - (m % 2);
        if (even_copies > 0) {
            if (imod(v, 6) != 3)
                throw Error("psi: repeated part " + std::to_string(v) + " not 3 (mod 6)");
            beta.insert(beta.end(), static_cast<size_t>(even_copies), v);
        }
    }
    Partition merged =
        multiply_parts(glaisher(divide_parts(Partition(std::move(beta)), 3)), 3);
    return union_parts(Partition(std::move(alpha)), merged);
}

// Inverse: the parts divisible by 6 come back through Glaisher; the odd
// parts pass through untouched.
inline Partition psi_inverse(const Partition& mu)
{
    if (!in_q2(mu))
        throw Error("psi_inverse: partition " + to_string(mu) + " is not in Q_2");
    auto [gamma, alpha] = split_by(mu, [](int v) { return v % 6 == 0; });
    Partition beta = multiply_parts(glaisher_inverse(divide_parts(gamma, 3)), 3);
    return union_parts(alpha, beta);
}

// ---- the three-stage census behind the q2 recurrence --------------------

// Signed-count verification of the combinatorial chain proving
//   sum_{j in Z} (-1)^j q2(n - 3j(3j-1)/2) = [n = k(3k-2)].
// Every stage is checked exhaustively on materialized sets:
//   stage 1  Franklin lifted to pairs (lambda, mu=3 eta) cancels non-
//            pentagonal eta; the signed count matches the theta-weighted
//            q2 sum.
//   stage 2  the swap/transfer involution cancels pairs with
//            lambda^{3|} != mu; survivors are the diagonal pairs.
//   stage 3  diagonal pairs biject onto B(n) (alpha in Q_{6,1}, beta = 6
//            gamma distinct); B(n) and the triple set C(n) carry equal
//            signed counts; zeta cancels everything in C(n) except
//            (empty, k(3k-2), empty).
struct CensusReport {
    int n = 0;
    long long signed_count = 0; // sum over A(n) of (-1)^{length(mu)}
    long long theta_sum = 0;    // sum_j (-1)^j q2(n - 3j(3j-1)/2)
    int rhs = 0;                // 1 iff n = k(3k-2)
    bool franklin_stage_ok = false;
    bool transfer_stage_ok = false;
    bool b_set_ok = false;
    bool c_set_ok = false;
    bool zeta_stage_ok = false;
    std::string note;

    bool ok() const
    {
        return franklin_stage_ok && transfer_stage_ok && b_set_ok && c_set_ok &&
               zeta_stage_ok && signed_count == theta_sum && signed_count == rhs;
    }
};

namespace detail {

// The swap/transfer involution of stage 2 on pairs with lambda^{3|} != mu.
// First branch: lengths incongruent mod 2 -> swap mu with lambda^{3|}.
// Second branch (complementary guard): transfer the first differing part
// toward the pair member holding the smaller one.
inline std::pair<Partition, Partition> census_transfer(const Partition& lambda,
                                                       const Partition& mu)
{
    auto [l3, lrest] = split_by(lambda, [](int v) { return v % 3 == 0; });
    if (l3.length() % 2 != mu.length() % 2)
        return {union_parts(mu, lrest), l3};
    std::vector<int> a = l3.parts(), b = mu.parts();
    size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    int av = i < a.size() ? a[i] : 0;
    int bv = i < b.size() ? b[i] : 0;
    if (av == bv) throw Error("census_transfer: pair is diagonal");
    if (av > bv) {
        a.erase(a.begin() + static_cast<long>(i));
        b.push_back(av);
    } else {
        b.erase(b.begin() + static_cast<long>(i));
        a.push_back(bv);
    }
    return {union_parts(Partition(std::move(a)), lrest), Partition(std::move(b))};
}

} // namespace detail

inline CensusReport three_split_involution_census(int n)
{
    if (n < 0) throw Error("three_split_involution_census: n must be nonnegative");
    CensusReport rep;
    rep.n = n;
    rep.rhs = is_generalized_octagonal(n) ? 1 : 0;
    rep.note = "stage-2 second branch read as the complementary length congruence "
               "with lambda^{3|} != mu";

    PartitionConstraint q2c = preset_constraint("q2");
    PartitionConstraint distinct = preset_constraint("distinct");
    PartitionConstraint div6 = preset_constraint("div6");

    // A(n): pairs (lambda in Q_2, mu = 3 eta with eta distinct)
    std::vector<std::pair<Partition, Partition>> a_set;
    for (int w = 0; w <= n; ++w) {
        if ((n - w) % 3 != 0) continue;
        std::vector<Partition> lams = enumerate(w, q2c);
        std::vector<Partition> etas = enumerate((n - w) / 3, distinct);
        for (const auto& lam : lams)
            for (const auto& eta : etas) a_set.emplace_back(lam, multiply_parts(eta, 3));
    }

    long long signed_count = 0;
    for (const auto& [lam, mu] : a_set)
        signed_count += parity_sign(mu.length());
    rep.signed_count = signed_count;

    SequenceTable q2 = q2_table(n, "recurrence");
    Int theta = detail::signed_bilateral_sum(q2, n, [](long long j) {
        return 3 * (j * (3 * j - 1) / 2);
    });
    rep.theta_sum = static_cast<long long>(theta);

    // stage 1: Franklin on eta = mu/3; fixed points exactly the pentagonal
    // eta, everything else cancels in parity-reversing 2-cycles.
    bool fr_ok = (rep.signed_count == rep.theta_sum);
    long long ea_signed = 0;
    for (const auto& [lam, mu] : a_set) {
        Partition eta = divide_parts(mu, 3);
        FranklinResult f = franklin(eta);
        if (f.fixed != is_pentagonal_partition(eta)) fr_ok = false;
        if (f.fixed) {
            ea_signed += parity_sign(mu.length());
            continue;
        }
        if (f.image.weight() != eta.weight()) fr_ok = false;
        if (f.image.length() % 2 == eta.length() % 2) fr_ok = false;
        FranklinResult back = franklin(f.image);
        if (back.fixed || !(back.image == eta)) fr_ok = false;
    }
    if (ea_signed != rep.signed_count) fr_ok = false;
    rep.franklin_stage_ok = fr_ok;

    // stage 2: swap/transfer involution; diagonal pairs survive.
    bool tr_ok = true;
    long long diag_signed = 0;
    std::vector<std::pair<Partition, Partition>> diagonal;
    for (const auto& [lam, mu] : a_set) {
        auto [l3, lrest] = split_by(lam, [](int v) { return v % 3 == 0; });
        if (l3 == mu) {
            diagonal.emplace_back(lam, mu);
            diag_signed += parity_sign(mu.length());
            continue;
        }
        auto [lam2, mu2] = detail::census_transfer(lam, mu);
        if (!q2c.satisfied_by(lam2)) tr_ok = false;
        Partition eta2 = divide_parts(mu2, 3); // throws unless mu2 = 3 eta
        if (!distinct.satisfied_by(eta2)) tr_ok = false;
        if (lam2.weight() + mu2.weight() != n) tr_ok = false;
        if (mu2.length() % 2 == mu.length() % 2) tr_ok = false;
        auto [lam3, mu3] = detail::census_transfer(lam2, mu2);
        if (!(lam3 == lam) || !(mu3 == mu)) tr_ok = false;
    }
    if (diag_signed != rep.signed_count) tr_ok = false;
    rep.transfer_stage_ok = tr_ok;

    // stage 3a: diagonal pairs (lambda, lambda^{3|}) -> (lambda^{3-}, 2 lambda^{3|})
    // must biject onto B(n).
    std::vector<std::pair<Partition, Partition>> b_set;
    for (int w = 0; w <= n; ++w) {
        if ((n - w) % 6 != 0) continue;
        std::vector<Partition> alphas = enumerate(w, preset_constraint("q61"));
        std::vector<Partition> gammas = enumerate((n - w) / 6, distinct);
        for (const auto& alpha : alphas)
            for (const auto& gamma : gammas) b_set.emplace_back(alpha, multiply_parts(gamma, 6));
    }
    std::vector<std::pair<Partition, Partition>> mapped;
    for (const auto& [lam, mu] : diagonal) {
        auto [l3, lrest] = split_by(lam, [](int v) { return v % 3 == 0; });
        mapped.emplace_back(lrest, multiply_parts(l3, 2));
    }
    auto pair_less = [](const auto& x, const auto& y) {
        if (x.first.parts() != y.first.parts()) return x.first.parts() < y.first.parts();
        return x.second.parts() < y.second.parts();
    };
    std::sort(mapped.begin(), mapped.end(), pair_less);
    std::sort(b_set.begin(), b_set.end(), pair_less);
    long long b_signed = 0;
    for (const auto& [alpha, beta] : b_set) b_signed += parity_sign(beta.length());
    rep.b_set_ok = (mapped == b_set) && (b_signed == rep.signed_count);

    // stage 3b: C(n) triples (gamma, k(3k-2), beta) carry the same signed
    // count by |Q_{6,1}(m)| = |W_{6,1}(m)|.
    std::vector<std::tuple<Partition, long long, Partition>> c_set;
    for (long long k = 0;; k = (k > 0 ? -k : -k + 1)) {
        long long o = k * (3 * k - 2);
        if (o > n) {
            if (k < 0) break;
            continue;
        }
        for (int wg = 0; wg <= n - o; ++wg) {
            std::vector<Partition> gammas = enumerate(wg, div6);
            if (gammas.empty()) continue;
            std::vector<Partition> betas_all;
            {
                PartitionConstraint div6_distinct = div6;
                div6_distinct.distinct = true;
                betas_all = enumerate(static_cast<int>(n - o - wg), div6_distinct);
            }
            for (const auto& g : gammas)
                for (const auto& b : betas_all) c_set.emplace_back(g, o, b);
        }
    }
    long long c_signed = 0;
    for (const auto& [g, o, b] : c_set) c_signed += parity_sign(b.length());
    rep.c_set_ok = (c_signed == b_signed);

    // stage 3c: zeta moves the largest part between gamma and beta; fixed
    // points are exactly (empty, k(3k-2), empty).
    bool z_ok = true;
    long long fixed_signed = 0;
    for (const auto& [g, o, b] : c_set) {
        if (g.length() == 0 && b.length() == 0) {
            fixed_signed += 1;
            continue;
        }
        int g1 = g.length() ? g.parts()[0] : 0;
        int b1 = b.length() ? b.parts()[0] : 0;
        std::vector<int> gp = g.parts(), bp = b.parts();
        if (g1 > b1) {
            gp.erase(gp.begin());
            bp.push_back(g1);
        } else {
            bp.erase(bp.begin());
            gp.push_back(b1);
        }
        Partition g2(std::move(gp)), b2(std::move(bp));
        for (size_t i = 1; i < b2.parts().size(); ++i)
            if (b2.parts()[i] == b2.parts()[i - 1]) z_ok = false; // beta must stay distinct
        if (b2.length() % 2 == b.length() % 2) z_ok = false;
        // apply zeta again
        int h1 = g2.length() ? g2.parts()[0] : 0;
        int c1 = b2.length() ? b2.parts()[0] : 0;
        std::vector<int> gp2 = g2.parts(), bp2 = b2.parts();
        if (h1 > c1) {
            gp2.erase(gp2.begin());
            bp2.push_back(h1);
        } else {
            bp2.erase(bp2.begin());
            gp2.push_back(c1);
        }
        if (!(Partition(std::move(gp2)) == g) || !(Partition(std::move(bp2)) == b)) z_ok = false;
    }
    if (fixed_signed != c_signed) z_ok = false;
    rep.zeta_stage_ok = z_ok;
    return rep;
}

} // namespace q6
