#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace dimsub {

using Int = mpz_class;

inline Int ipow(const Int& base, unsigned long exp)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Int ipow(long base, unsigned long exp) { return ipow(Int(base), exp); }

// Quotient rounded towards minus infinity; divisor must be nonzero.
inline Int floor_div(const Int& a, const Int& b)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Remainder in [0, |b|).
inline Int floor_mod(const Int& a, const Int& b)
{
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& a)
{
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int gcd(const Int& a, const Int& b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b)
{
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline std::size_t bit_size(const Int& a)
{
    return a == 0 ? 0 : mpz_sizeinbase(a.get_mpz_t(), 2);
}

inline std::string to_string(const Int& a) { return a.get_str(); }

inline Int binomial(unsigned long n, unsigned long k)
{
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace dimsub
