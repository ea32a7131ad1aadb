#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "starkrankin/theta.hpp"

using namespace starkrankin;

namespace {
struct MinTruncGuard {
    long saved;
    explicit MinTruncGuard(long tmp) : saved(qexp_min_truncation()) { set_qexp_min_truncation(tmp); }
    ~MinTruncGuard() { set_qexp_min_truncation(saved); }
};
} // namespace

TEST_CASE("theta series of the trivial character")
{
    ImagQuadField K7(7);
    auto triv = RingClassCharacter::trivial(K7, 1);
    auto t = theta_series(triv, 60);
    CHECK(t.weight == 1);
    CHECK(t.level == 7);
    CHECK_FALSE(t.cuspidal);
    CHECK(t.series[0] == Cyc(make_rat(1, 2)));
    CHECK(t.series[1] == Cyc(1));
    CHECK(t.series[2] == Cyc(2));
    CHECK(t.series[3] == Cyc(0));
    CHECK(t.series[4] == Cyc(3));

    // coefficients count ideals of each norm
    for (long n = 1; n <= 60; ++n)
        CHECK(t.series[n] == Cyc(Rat(static_cast<long>(ideals_of_norm(K7, 1, n).size()))));
}

TEST_CASE("cuspidal theta series of an order-3 character")
{
    MinTruncGuard guard(5);
    ImagQuadField K23(23);
    RingClassCharacter psi(K23, 1, {1});
    auto t = theta_series(psi, 200);
    CHECK(t.cuspidal);
    CHECK(t.level == 23);
    CHECK(t.series[1] == Cyc(1));
    CHECK(t.series[2] == Cyc(Rat(-1)));
    CHECK(t.series[0] == Cyc(0));

    // theta of the conjugate character has conjugate coefficients
    auto tc = theta_series(psi.conjugate_character(), 60);
    for (long n = 0; n <= 60; ++n)
        CHECK(tc.series[n] == t.series[n].conj());

    // eigenform at good primes
    auto rep = verify_eigenform(t, {2, 3, 5, 7, 11, 13});
    CHECK(rep.all_pass);

    // negative control: zero-padding the tail breaks the eigen-relation
    auto bad = t;
    for (long n = 150; n <= 200; ++n)
        bad.series[n] = Cyc(0);
    auto badrep = verify_eigenform(bad, {2});
    CHECK_FALSE(badrep.all_pass);
}

TEST_CASE("euler-product reconstruction from prime coefficients")
{
    ImagQuadField K23(23);
    RingClassCharacter psi(K23, 1, {1});
    auto t = theta_series(psi, 100);
    auto chiK = DirichletCharacter::kronecker(-23);
    // rebuild coefficients multiplicatively: a_{q^{r+1}} = a_q a_{q^r} - chi(q) a_{q^{r-1}},
    // a_{mn} = a_m a_n for coprime m, n
    std::vector<Cyc> rebuilt(101, Cyc(0));
    rebuilt[1] = Cyc(1);
    for (long n = 2; n <= 100; ++n) {
        auto f = factorize(n);
        if (f.size() > 1) {
            long q = f[0].first;
            long qe = 1;
            for (int i = 0; i < f[0].second; ++i)
                qe *= q;
            rebuilt[n] = (rebuilt[qe] * rebuilt[n / qe]).simplified();
        } else {
            long q = f[0].first;
            if (n == q)
                rebuilt[n] = t.series[q];
            else
                rebuilt[n] =
                    (t.series[q] * rebuilt[n / q] - chiK(q) * rebuilt[n / (q * q)]).simplified();
        }
    }
    for (long n = 1; n <= 100; ++n)
        CHECK(t.series[n] == rebuilt[n]);
}

TEST_CASE("weight-3 theta series of the exact weight-2 character")
{
    MinTruncGuard guard(5);
    ImagQuadField K7(7);
    InfinityTypeCharacter psi2(K7, 2);
    auto t = theta_series(psi2, 200);
    CHECK(t.weight == 3);
    CHECK(t.level == 7);
    CHECK(t.cuspidal);
    CHECK(t.series[1] == Cyc(1));
    CHECK(t.series[2] == Cyc(Rat(-3)));

    // weight-3 Hecke recursion at split primes: a_{q^2} = a_q^2 - chi(q) q^2
    auto chi = DirichletCharacter::kronecker(-7);
    for (long q : {2L, 11L}) {
        REQUIRE(kronecker_symbol(-7, q) == 1);
        Cyc lhs = t.series[q * q];
        Cyc rhs = t.series[q] * t.series[q] - chi(q) * Cyc(Rat(q * q));
        CHECK(lhs == rhs.simplified());
    }

    auto rep = verify_eigenform(t, {2, 3, 5, 11, 13});
    CHECK(rep.all_pass);
}

TEST_CASE("family eigenvalue relation in the class-number-one case")
{
    ImagQuadField K7(7);
    auto rep = family_eigenvalue_check(K7, 11, 0);
    CHECK(rep.pass);
    // gamma = 2 + sqrt(-7) has norm 11; a_11 = gamma^2 + conj(gamma)^2 = -6
    CHECK(rep.a_p == Rat(-6));
    CHECK((rep.root_plus * rep.root_minus).x == Rat(121));

    CHECK(family_eigenvalue_check(K7, 2, 0).a_p == Rat(-3));
    for (long l : {0L, 1L, 2L})
        for (long p : {11L, 23L, 29L})
            CHECK(family_eigenvalue_check(K7, p, l).pass);

    ImagQuadField K11(11);
    for (long l : {0L, 1L})
        for (long p : {3L, 5L, 23L})
            CHECK(family_eigenvalue_check(K11, p, l).pass);

    CHECK_THROWS_AS(family_eigenvalue_check(K7, 3, 0), std::domain_error); // inert
}
