#pragma once

#include "q6/core.hpp"

#include <optional>

namespace q6 {

// Weight sequence used by the triangular-number recurrences:
// rho(k) = -2 when k = 1 (mod 3), otherwise 1.
inline int rho(long long k) { return imod(k, 3) == 1 ? -2 : 1; }

// Each helper below inverts one quadratic form exactly.  It returns the
// unique integer index when the argument lies in the sequence, and nothing
// otherwise.

// n = k(3k-1)/2, k in Z (generalized pentagonal). 24n+1 = (6k-1)^2.
inline std::optional<long long> pentagonal_index(long long n)
{
    if (n < 0) return std::nullopt;
    long long s = isqrt(24 * n + 1);
    if (s * s != 24 * n + 1) return std::nullopt;
    if (s % 6 == 5) return (s + 1) / 6;
    if (s % 6 == 1) return (1 - s) / 6;
    return std::nullopt;
}

// n = 3k(3k-1), k in Z. 4n+1 = (6k-1)^2.
inline std::optional<long long> expanded_pentagonal_index(long long n)
{
    if (n < 0) return std::nullopt;
    long long s = isqrt(4 * n + 1);
    if (s * s != 4 * n + 1) return std::nullopt;
    if (s % 6 == 5) return (s + 1) / 6;
    if (s % 6 == 1) return (1 - s) / 6;
    return std::nullopt;
}

// n = k(3k-2), k in Z (generalized octagonal). 3n+1 = (3k-1)^2.
inline std::optional<long long> octagonal_index(long long n)
{
    if (n < 0) return std::nullopt;
    long long s = isqrt(3 * n + 1);
    if (s * s != 3 * n + 1) return std::nullopt;
    if (s % 3 == 2) return (s + 1) / 3;
    if (s % 3 == 1) return (1 - s) / 3;
    return std::nullopt;
}

// n = k(k+1), k >= 0. 4n+1 = (2k+1)^2.
inline std::optional<long long> pronic_index(long long n)
{
    if (n < 0) return std::nullopt;
    long long s = isqrt(4 * n + 1);
    if (s * s != 4 * n + 1 || s % 2 == 0) return std::nullopt;
    return (s - 1) / 2;
}

// Signed indicators carried on those supports.
// alpha(n) = (-1)^m at n = 3m(3m-1), else 0.
inline int alpha_indicator(long long n)
{
    auto m = expanded_pentagonal_index(n);
    return m ? parity_sign(*m) : 0;
}

// beta(n) = (-1)^m at n = m(3m-2), else 0.
inline int beta_indicator(long long n)
{
    auto m = octagonal_index(n);
    return m ? parity_sign(*m) : 0;
}

// gamma(n) = rho(m) at n = m(m+1) with m >= 0, else 0.
inline int gamma_indicator(long long n)
{
    auto m = pronic_index(n);
    return m ? rho(*m) : 0;
}

inline bool is_generalized_octagonal(long long n)
{
    return octagonal_index(n).has_value();
}

} // namespace q6
