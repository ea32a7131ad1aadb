#ifndef STARKRANKIN_NUMUTIL_HPP
#define STARKRANKIN_NUMUTIL_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace starkrankin {

using Int = mpz_class;
using Rat = mpq_class;

// Kronecker symbol (a|n). Multiplicative in n, extends the Jacobi symbol
// to even and negative n.
inline int kronecker_symbol(const Int &a, const Int &n)
{
    if (n == 0)
        throw std::domain_error("kronecker_symbol: n must be nonzero");
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

inline int kronecker_symbol(long a, long n)
{
    return kronecker_symbol(Int(a), Int(n));
}

inline bool is_prime(const Int &n)
{
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

inline bool is_prime(long n) { return is_prime(Int(n)); }

// Trial-division factorization, (prime, exponent) pairs with primes increasing.
std::vector<std::pair<long, int>> factorize(long n);

std::vector<long> divisors(long n);

std::vector<long> prime_divisors(long n);

long euler_phi(long n);

long gcd_ll(long a, long b);

long lcm_ll(long a, long b);

// a^e mod m for e >= 0, m > 1.
long powmod(long a, long e, long m);

// Multiplicative order of a modulo m, gcd(a, m) = 1.
long mult_order(long a, long m);

// A generator of (Z/m)^x for m an odd prime power or m in {2, 4}.
long primitive_root(long m);

// Smallest r in [0, q) with r^2 = a (mod q), q an odd prime; -1 if none.
long sqrt_mod_prime(long a, long q);

// [SL_2(Z) : Gamma_0(N)] = N * prod_{q | N} (1 + 1/q).
Rat psi_index(long n);

// -d is a fundamental discriminant (d > 0).
bool is_fundamental_discriminant_neg(long d);

// Reduced fraction a/b (mpq_class's two-argument constructor does not reduce).
inline Rat make_rat(const Int &a, const Int &b)
{
    if (b == 0)
        throw std::domain_error("make_rat: zero denominator");
    Rat r(a, b);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long a, long b) { return make_rat(Int(a), Int(b)); }

inline Int int_pow(const Int &a, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat &a, long e)
{
    if (e == 0)
        return Rat(1);
    if (a == 0 && e < 0)
        throw std::domain_error("rat_pow: zero to negative power");
    Rat base = e > 0 ? a : Rat(1) / a;
    unsigned long k = e > 0 ? e : -e;
    Rat num = int_pow(base.get_num(), k);
    Rat den = int_pow(base.get_den(), k);
    return num / den;
}

inline Int factorial(long n)
{
    if (n < 0)
        throw std::domain_error("factorial of negative integer");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int binomial(long n, long k)
{
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace starkrankin

#endif
