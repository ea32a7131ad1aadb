#include "starkrankin/qexp.hpp"

#include "starkrankin/bernoulli.hpp"

namespace starkrankin {

namespace {
long min_trunc = 30;
long max_trunc = 10000;
} // namespace

long qexp_min_truncation() { return min_trunc; }
void set_qexp_min_truncation(long q) { min_trunc = q; }
long qexp_max_truncation() { return max_trunc; }
void set_qexp_max_truncation(long q) { max_trunc = q; }

QExpansion<Cyc> eisenstein_series(long k, const DirichletCharacter &chi, long N, long Q)
{
    if (k < 1)
        throw std::domain_error("eisenstein_series: weight must be positive");
    bool odd_weight = (k % 2) == 1;
    if (chi.odd() != odd_weight)
        throw std::domain_error("eisenstein_series: character parity does not match the weight");
    DirichletCharacter prim = chi.primitive_character();
    long Nchi = prim.modulus();
    if (N % Nchi != 0)
        throw std::domain_error("eisenstein_series: level is not a multiple of the conductor");
    detail::check_truncation(Q);

    DirichletCharacter chiN = DirichletCharacter::induced(prim, N);
    QExpansion<Cyc> E(Q, k, N);
    E.character = chiN;

    Cyc a0 = Cyc(make_rat(1, 2)) * dirichlet_l_nonpositive(k, prim);
    for (long q : prime_divisors(N))
        if (Nchi % q != 0)
            a0 = a0 * (Cyc(1) - prim(q) * Cyc(rat_pow(Rat(q), k - 1)));
    E[0] = a0.simplified();

    for (long n = 1; n <= Q; ++n) {
        Cyc s(0);
        for (long d : divisors(n)) {
            Cyc v = chiN(d);
            if (v.is_zero())
                continue;
            s = s + v * Cyc(rat_pow(Rat(d), k - 1));
        }
        E[n] = s.simplified();
    }
    return E;
}

} // namespace starkrankin
