#pragma once

#include <gmpxx.h>

#include <string>

namespace schurlab {

// Exact arithmetic everywhere: GMP integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Int factorial(long n)
{
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n < 0 ? 0ul : static_cast<unsigned long>(n));
    return r;
}

inline Int pow_int(const Int& base, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline std::string str(const Int& v) { return v.get_str(); }
inline std::string str(const Rat& v) { return v.get_str(); }

} // namespace schurlab
