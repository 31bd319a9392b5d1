#pragma once

#include <string>

#include <gmpxx.h>

namespace orekit {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string to_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

// Exact binomial coefficient as an integer.
inline Integer binomial(long n, long k)
{
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// n * (n-1) * ... * (n-k+1)
inline Integer falling_factorial(long n, long k)
{
    Integer r = 1;
    for (long i = 0; i < k; ++i) r *= (n - i);
    return r;
}

inline Integer factorial(long n) { return falling_factorial(n, n); }

} // namespace orekit
