#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace q6 {

// All coefficients and table values are exact signed integers of arbitrary
// size.  No floating point is used anywhere in the library.
using Int = boost::multiprecision::cpp_int;

// Domain error: bad operands, invalid specs, malformed caches.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Largest s with s*s <= n.
inline long long isqrt(long long n)
{
    if (n < 0) throw Error("isqrt: negative argument");
    long long s = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

// Mathematical residue in [0, m).
inline long long imod(long long a, long long m)
{
    long long r = a % m;
    return r < 0 ? r + m : r;
}

inline int parity_sign(long long k) { return (imod(k, 2) == 0) ? 1 : -1; }

} // namespace q6
