#pragma once

#include "q6/core.hpp"

#include <string>
#include <utility>
#include <vector>

namespace q6 {

// Exact formal power series in q, truncated at an explicit order.  A series
// of order N carries coefficients for q^0..q^N and nothing else; operations
// never read or invent coefficients past the truncation point.  Instances
// are immutable once built and safe to share across threads.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(static_cast<size_t>(check_order(order)) + 1) {}

    explicit TruncatedSeries(std::vector<Int> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) throw Error("TruncatedSeries: need at least the constant term");
    }

    static TruncatedSeries one(int order)
    {
        TruncatedSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Int& coeff(int i) const
    {
        if (i < 0 || i > order()) throw Error("TruncatedSeries: coefficient index out of range");
        return coeffs_[static_cast<size_t>(i)];
    }

    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool operator==(const TruncatedSeries&) const = default;

private:
    static int check_order(int order)
    {
        if (order < 0) throw Error("TruncatedSeries: order must be nonnegative");
        return order;
    }

    friend struct SeriesBuilder;
    std::vector<Int> coeffs_;
};

// Escape hatch for the construction routines below; everything public keeps
// value semantics.
struct SeriesBuilder {
    static TruncatedSeries take(std::vector<Int>&& c) { return TruncatedSeries(std::move(c)); }
};

// One q-Pochhammer symbol (+-q^offset; q^modulus)_oo placed in the numerator
// or denominator of a product.
struct PochhammerFactor {
    int sign;    // +1 encodes (-q^a; q^m)_oo, -1 encodes (q^a; q^m)_oo
    int offset;  // a >= 1
    int modulus; // m >= 1
    int power;   // +1 numerator, -1 denominator
};

struct ProductSpec {
    std::vector<PochhammerFactor> factors;
};

namespace detail {

// In-place multiplication by the four elementary factors.  Multiplying by
// (1 -+ q^e) walks downward so each source coefficient is still unmodified;
// the geometric inverses walk upward.
inline void mul_one_minus(std::vector<Int>& c, int e)
{
    for (int i = static_cast<int>(c.size()) - 1; i >= e; --i) c[i] -= c[i - e];
}

inline void mul_one_plus(std::vector<Int>& c, int e)
{
    for (int i = static_cast<int>(c.size()) - 1; i >= e; --i) c[i] += c[i - e];
}

inline void div_one_minus(std::vector<Int>& c, int e)
{
    for (int i = e; i < static_cast<int>(c.size()); ++i) c[i] += c[i - e];
}

inline void div_one_plus(std::vector<Int>& c, int e)
{
    for (int i = e; i < static_cast<int>(c.size()); ++i) c[i] -= c[i - e];
}

inline std::string describe_factor(const PochhammerFactor& f)
{
    std::string base = (f.sign > 0 ? "(-q^" : "(q^") + std::to_string(f.offset) + "; q^" +
                       std::to_string(f.modulus) + ")_oo";
    return f.power < 0 ? "1/" + base : base;
}

} // namespace detail

// Expands prod factors to the requested order.  Every infinite Pochhammer is
// materialized progression term by progression term and truncated as soon as
// the leading exponent passes the order, so a factor with modulus m costs
// O(order/m) elementary passes.
inline TruncatedSeries build_product(const ProductSpec& spec, int order)
{
    if (order < 0) throw Error("build_product: order must be nonnegative");
    std::vector<Int> c(static_cast<size_t>(order) + 1);
    c[0] = 1;
    for (size_t idx = 0; idx < spec.factors.size(); ++idx) {
        const PochhammerFactor& f = spec.factors[idx];
        if (f.sign != 1 && f.sign != -1)
            throw Error("build_product: factor " + std::to_string(idx) + " has invalid sign");
        if (f.power != 1 && f.power != -1)
            throw Error("build_product: factor " + std::to_string(idx) + " has invalid power");
        if (f.modulus < 1)
            throw Error("build_product: factor " + std::to_string(idx) + " has invalid modulus");
        if (f.offset < 1) {
            if (f.power < 0)
                throw Error("build_product: non-invertible denominator factor " +
                            std::to_string(idx) + " " + detail::describe_factor(f) +
                            " (constant term vanishes)");
            throw Error("build_product: factor " + std::to_string(idx) +
                        " has invalid offset");
        }
        for (long long e = f.offset; e <= order; e += f.modulus) {
            int ei = static_cast<int>(e);
            if (f.power > 0) {
                if (f.sign > 0)
                    detail::mul_one_plus(c, ei);
                else
                    detail::mul_one_minus(c, ei);
            } else {
                if (f.sign > 0)
                    detail::div_one_plus(c, ei);
                else
                    detail::div_one_minus(c, ei);
            }
        }
    }
    return SeriesBuilder::take(std::move(c));
}

// Exact Cauchy product, truncated to the shorter of the two orders.
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    int order = std::min(a.order(), b.order());
    std::vector<Int> c(static_cast<size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) {
        const Int& ai = a.coeff(i);
        if (ai == 0) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (b.coeff(j) == 0) continue;
            c[static_cast<size_t>(i + j)] += ai * b.coeff(j);
        }
    }
    return SeriesBuilder::take(std::move(c));
}

// Multiplicative inverse to the shared order; requires constant term +-1 so
// the result stays integral.
inline TruncatedSeries invert(const TruncatedSeries& a)
{
    const Int& a0 = a.coeff(0);
    if (a0 != 1 && a0 != -1)
        throw Error("invert: constant term must be +1 or -1");
    int order = a.order();
    std::vector<Int> b(static_cast<size_t>(order) + 1);
    b[0] = a0;
    for (int n = 1; n <= order; ++n) {
        Int acc = 0;
        for (int i = 1; i <= n; ++i) {
            if (a.coeff(i) == 0) continue;
            acc += a.coeff(i) * b[static_cast<size_t>(n - i)];
        }
        b[static_cast<size_t>(n)] = (a0 == 1) ? -acc : acc;
    }
    return SeriesBuilder::take(std::move(b));
}

namespace detail {

// Bilateral sum helper: visits n = 0, 1, -1, 2, -2, ... and calls add(n)
// which returns false once every exponent for that n is past the order.
// Iteration stops after a full +-t ring contributes nothing.
template <class F>
void bilateral(F&& add)
{
    add(0);
    for (long long t = 1;; ++t) {
        bool any = false;
        if (add(t)) any = true;
        if (add(-t)) any = true;
        if (!any) break;
    }
}

} // namespace detail

// sum_{n in Z} (-1)^n q^{n(3n-1)/2}, the bilateral pentagonal theta.  Equals
// (q; q)_oo coefficientwise.
inline TruncatedSeries pentagonal_theta(int order)
{
    if (order < 0) throw Error("pentagonal_theta: order must be nonnegative");
    std::vector<Int> c(static_cast<size_t>(order) + 1);
    detail::bilateral([&](long long n) {
        long long e = n * (3 * n - 1) / 2;
        if (e > order) return false;
        c[static_cast<size_t>(e)] += parity_sign(n);
        return true;
    });
    return SeriesBuilder::take(std::move(c));
}

// Watson's quintuple product under the substitution q -> q^m, z -> q^s:
//   sum_{n in Z} q^{m n(3n+1)/2} (q^{-3sn} - q^{s(3n+1)})
//     = (q^s, q^{m-s}, q^m; q^m)_oo (q^{m+2s}, q^{m-2s}; q^{2m})_oo.
// Requires m > 2s so every exponent on both sides is nonnegative.  Returns
// (sum side, product side); callers assert coefficientwise equality.
inline std::pair<TruncatedSeries, TruncatedSeries>
quintuple_specialization(int s, int m, int order)
{
    if (order < 0) throw Error("quintuple_specialization: order must be nonnegative");
    if (s < 1 || m < 1 || m - 2 * s < 1)
        throw Error("quintuple_specialization: substitution z=q^" + std::to_string(s) +
                    ", q=q^" + std::to_string(m) + " produces a negative exponent");
    std::vector<Int> sum(static_cast<size_t>(order) + 1);
    detail::bilateral([&](long long n) {
        long long base = m * (n * (3 * n + 1) / 2);
        long long e1 = base - 3 * s * n;
        long long e2 = base + s * (3 * n + 1);
        if (e1 < 0 || e2 < 0)
            throw Error("quintuple_specialization: negative exponent at n=" + std::to_string(n));
        bool any = false;
        if (e1 <= order) { sum[static_cast<size_t>(e1)] += 1; any = true; }
        if (e2 <= order) { sum[static_cast<size_t>(e2)] -= 1; any = true; }
        return any;
    });
    ProductSpec spec{{
        {-1, s, m, 1},
        {-1, m - s, m, 1},
        {-1, m, m, 1},
        {-1, m + 2 * s, 2 * m, 1},
        {-1, m - 2 * s, 2 * m, 1},
    }};
    return {SeriesBuilder::take(std::move(sum)), build_product(spec, order)};
}

// Jacobi's triple product under q -> q^m, z -> sign*q^s:
//   sum_{n in Z} (-z)^n q^{m n(n-1)/2} = (z, q^m/z, q^m; q^m)_oo.
// Requires m > s.  Returns (sum side, product side).
inline std::pair<TruncatedSeries, TruncatedSeries>
triple_specialization(int s, int sign, int m, int order)
{
    if (order < 0) throw Error("triple_specialization: order must be nonnegative");
    if (sign != 1 && sign != -1) throw Error("triple_specialization: sign must be +-1");
    if (s < 1 || m < 1 || m - s < 1)
        throw Error("triple_specialization: substitution z=" +
                    std::string(sign > 0 ? "q^" : "-q^") + std::to_string(s) + ", q=q^" +
                    std::to_string(m) + " produces a negative exponent");
    std::vector<Int> sum(static_cast<size_t>(order) + 1);
    detail::bilateral([&](long long n) {
        long long e = m * (n * (n - 1) / 2) + s * n;
        if (e < 0)
            throw Error("triple_specialization: negative exponent at n=" + std::to_string(n));
        if (e > order) return false;
        int term = (sign > 0) ? parity_sign(n) : 1;
        sum[static_cast<size_t>(e)] += term;
        return true;
    });
    int fs = (sign > 0) ? -1 : 1; // (z; q^m) with z = +q^s is a (q^a; q^m) factor
    ProductSpec spec{{
        {fs, s, m, 1},
        {fs, m - s, m, 1},
        {-1, m, m, 1},
    }};
    return {SeriesBuilder::take(std::move(sum)), build_product(spec, order)};
}

} // namespace q6
