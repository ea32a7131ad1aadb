#include "starkrankin/numutil.hpp"

#include <algorithm>
#include <numeric>

namespace starkrankin {

std::vector<std::pair<long, int>> factorize(long n)
{
    if (n < 1)
        throw std::domain_error("factorize: argument must be positive");
    std::vector<std::pair<long, int>> out;
    for (long d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::vector<long> divisors(long n)
{
    std::vector<long> out{1};
    for (auto [p, e] : factorize(n)) {
        std::size_t sz = out.size();
        long pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i)
                out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> prime_divisors(long n)
{
    std::vector<long> out;
    for (auto [p, e] : factorize(n))
        out.push_back(p);
    return out;
}

long euler_phi(long n)
{
    long r = n;
    for (auto [p, e] : factorize(n))
        r = r / p * (p - 1);
    return r;
}

long gcd_ll(long a, long b) { return std::gcd(a, b); }

long lcm_ll(long a, long b) { return std::lcm(a, b); }

long powmod(long a, long e, long m)
{
    if (m <= 1)
        throw std::domain_error("powmod: modulus must exceed 1");
    Int r;
    Int base(a);
    mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e),
                Int(m).get_mpz_t());
    return r.get_si();
}

long mult_order(long a, long m)
{
    a %= m;
    if (a < 0)
        a += m;
    if (std::gcd(a, m) != 1)
        throw std::domain_error("mult_order: arguments not coprime");
    long x = a % m, k = 1;
    while (x != 1 % m) {
        x = static_cast<long>((static_cast<__int128>(x) * a) % m);
        ++k;
    }
    return k;
}

long primitive_root(long m)
{
    if (m == 2)
        return 1;
    if (m == 4)
        return 3;
    auto fac = factorize(m);
    bool ok = (fac.size() == 1 && fac[0].first % 2 == 1);
    if (!ok)
        throw std::domain_error("primitive_root: modulus must be an odd prime power, 2 or 4");
    long phi = euler_phi(m);
    for (long g = 2; g < m; ++g) {
        if (std::gcd(g, m) != 1)
            continue;
        if (mult_order(g, m) == phi)
            return g;
    }
    throw std::logic_error("primitive_root: search failed");
}

long sqrt_mod_prime(long a, long q)
{
    a %= q;
    if (a < 0)
        a += q;
    for (long r = 0; r < q; ++r)
        if ((static_cast<__int128>(r) * r - a) % q == 0)
            return r;
    return -1;
}

Rat psi_index(long n)
{
    if (n < 1)
        throw std::domain_error("psi_index: argument must be positive");
    Rat r(n);
    for (long q : prime_divisors(n))
        r *= Rat(q + 1, q);
    return r;
}

bool is_fundamental_discriminant_neg(long d)
{
    if (d <= 0)
        return false;
    long disc = -d;
    long mod4 = ((disc % 4) + 4) % 4;
    if (mod4 == 1) {
        // squarefree check
        for (long k = 2; k * k <= d; ++k)
            if (d % (k * k) == 0)
                return false;
        return true;
    }
    if (mod4 == 0) {
        long m = d / 4;
        long mmod4 = ((-m % 4) + 4) % 4;
        if (mmod4 == 1)
            return false; // then -d/4 would already be a discriminant
        for (long k = 2; k * k <= m; ++k)
            if (m % (k * k) == 0)
                return false;
        return true;
    }
    return false;
}

} // namespace starkrankin
