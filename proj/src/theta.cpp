#include "starkrankin/theta.hpp"

namespace starkrankin {

ThetaSeries theta_series(const RingClassCharacter &psi, long Q)
{
    detail::check_truncation(Q);
    ThetaSeries t;
    long c = psi.conductor();
    long D = psi.field().D_K;
    t.weight = 1;
    t.level = D * c * c;
    t.nebentype = DirichletCharacter::induced(DirichletCharacter::kronecker(-D), t.level);
    t.cuspidal = !psi.pow(2).is_trivial();
    t.series = QExpansion<Cyc>(Q, t.weight, t.level);
    t.series.character = t.nebentype;
    for (long n = 0; n <= Q; ++n)
        t.series[n] = theta_coefficient(psi, n);
    return t;
}

ThetaSeries theta_series(const InfinityTypeCharacter &psi, long Q)
{
    detail::check_truncation(Q);
    ThetaSeries t;
    long D = psi.field().D_K;
    long k = psi.weight();
    t.weight = k + 1;
    t.level = D;
    t.nebentype = DirichletCharacter::kronecker(-D);
    t.cuspidal = k > 0;
    t.series = QExpansion<Cyc>(Q, t.weight, t.level);
    t.series.character = t.nebentype;
    for (long n = 0; n <= Q; ++n)
        t.series[n] = Cyc(theta_coefficient(psi, n));
    return t;
}

EigenformReport verify_eigenform(const ThetaSeries &theta, const std::vector<long> &primes)
{
    EigenformReport rep;
    for (long ell : primes) {
        EigenformReport::Entry e;
        e.ell = ell;
        e.pass = is_hecke_eigenform_at(theta.series, ell);
        rep.all_pass = rep.all_pass && e.pass;
        rep.entries.push_back(e);
    }
    return rep;
}

FamilyEigenvalueReport family_eigenvalue_check(const ImagQuadField &K, long p, long l)
{
    if (l < 0)
        throw std::domain_error("family_eigenvalue_check: l must be non-negative");
    long k = 2 * l + 2;
    InfinityTypeCharacter psi(K, k);
    PrimeSplitting sp = prime_splitting(K, 1, p);
    if (sp.kind != SplitKind::split)
        throw std::domain_error("family_eigenvalue_check: p must split in K");

    FamilyEigenvalueReport rep;
    rep.p = p;
    rep.l = l;
    rep.a_p = theta_coefficient(psi, p);

    QuadRat gamma = principal_generator(K, 1, sp.prime, 1);
    rep.root_plus = gamma.conj().pow(k); // character value at the distinguished prime
    rep.root_minus = gamma.pow(k);

    // the roots must solve X^2 - a_p X + p^{2l+2}
    QuadRat sum = rep.root_plus + rep.root_minus;
    QuadRat prod = rep.root_plus * rep.root_minus;
    rep.pass = sum.is_rational() && prod.is_rational() && sum.x == rep.a_p &&
               prod.x == rat_pow(Rat(p), k);
    return rep;
}

} // namespace starkrankin
