#include "starkrankin/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace starkrankin {

Rat bernoulli_number(long k)
{
    if (k < 0)
        throw std::domain_error("bernoulli_number: index must be non-negative");
    static std::vector<Rat> cache{Rat(1)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    while (static_cast<long>(cache.size()) <= k) {
        long n = static_cast<long>(cache.size());
        // sum_{j=0}^{n} C(n+1, j) B_j = 0  =>  B_n
        Rat s(0);
        for (long j = 0; j < n; ++j)
            s += Rat(binomial(n + 1, j)) * cache[j];
        cache.push_back(-s / Rat(n + 1));
    }
    return cache[k];
}

Rat bernoulli_polynomial(long k, const Rat &x)
{
    Rat s(0);
    Rat xpow(1);
    // B_k(x) = sum_j C(k, j) B_j x^{k-j}; accumulate from the x^0 term up.
    for (long j = k; j >= 0; --j) {
        s += Rat(binomial(k, j)) * bernoulli_number(j) * xpow;
        xpow *= x;
    }
    return s;
}

Cyc generalized_bernoulli(long k, const DirichletCharacter &chi)
{
    if (k < 1)
        throw std::domain_error("generalized_bernoulli: k must be positive");
    long n = chi.modulus();
    Cyc s(0);
    for (long a = 1; a <= n; ++a) {
        Cyc v = chi(a);
        if (v.is_zero())
            continue;
        s = s + v * Cyc(bernoulli_polynomial(k, make_rat(a, n)));
    }
    return (Cyc(rat_pow(Rat(n), k - 1)) * s).simplified();
}

Cyc dirichlet_l_nonpositive(long k, const DirichletCharacter &chi)
{
    return (Cyc(Rat(-1, k)) * generalized_bernoulli(k, chi)).simplified();
}

} // namespace starkrankin
