#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "starkrankin/heckechar.hpp"

using namespace starkrankin;

namespace {

FactoredIdeal random_ideal(const ImagQuadField &K, long c, std::mt19937_64 &rng)
{
    std::uniform_int_distribution<long> d(1, 60);
    for (;;) {
        long n = d(rng);
        if (gcd_ll(n, c) != 1)
            continue;
        auto all = ideals_of_norm(K, c, n);
        if (all.empty())
            continue;
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        return all[pick(rng)];
    }
}

} // namespace

TEST_CASE("character evaluation and duality")
{
    ImagQuadField K23(23);
    auto triv = RingClassCharacter::trivial(K23, 1);
    CHECK(triv.is_trivial());
    CHECK(triv.order() == 1);

    RingClassCharacter psi(K23, 1, {1});
    CHECK(psi.order() == 3);
    auto sp2 = prime_splitting(K23, 1, 2);
    Cyc v = psi.evaluate_class(sp2.prime.reduced());
    CHECK((v == Cyc::zeta(3) || v == Cyc::zeta(3, 2)));
    CHECK(psi.evaluate_class(sp2.conjugate.reduced()) == v.inverse());

    // psi' = psi^{-1} = psi^2 for an order-3 character
    auto conj = psi.conjugate_character();
    CHECK(conj == psi.pow(2));
    CHECK(conj == psi.pow(-1));
    CHECK(psi.is_self_dual());
    CHECK(triv.is_self_dual());

    // central character trivial
    auto eps = psi.central_character();
    CHECK(eps.order() == 1);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        auto I = random_ideal(K23, 1, rng);
        CHECK(psi.evaluate(I) * psi.evaluate(I.conj()) == Cyc(1));
        CHECK(triv.evaluate(I) == Cyc(1));
    }
}

TEST_CASE("frobenius eigenvalue pairs")
{
    ImagQuadField K23(23);
    RingClassCharacter psi(K23, 1, {1});
    auto fr = frobenius_data(psi, 2);
    CHECK(fr.alpha * fr.beta == Cyc(1));
    CHECK((fr.alpha == Cyc::zeta(3) || fr.alpha == Cyc::zeta(3, 2)));
    CHECK(fr.beta == fr.alpha.inverse());

    auto frt = frobenius_data(RingClassCharacter::trivial(K23, 1), 2);
    CHECK(frt.alpha == Cyc(1));
    CHECK(frt.beta == Cyc(1));

    CHECK_THROWS_AS(frobenius_data(psi, 5), std::domain_error);  // 5 inert in Q(sqrt(-23))
    CHECK_THROWS_AS(frobenius_data(psi, 23), std::domain_error); // ramified
}

TEST_CASE("theta coefficients of finite-order characters")
{
    ImagQuadField K7(7), K23(23);
    auto triv7 = RingClassCharacter::trivial(K7, 1);
    CHECK(theta_coefficient(triv7, 0) == Cyc(make_rat(1, 2)));
    CHECK(theta_coefficient(triv7, 2) == Cyc(2));
    CHECK(theta_coefficient(triv7, 3) == Cyc(0));
    CHECK(theta_coefficient(triv7, 4) == Cyc(3));

    RingClassCharacter psi(K23, 1, {1});
    CHECK(theta_coefficient(psi, 0) == Cyc(0));
    CHECK(theta_coefficient(psi, 1) == Cyc(1));
    CHECK(theta_coefficient(psi, 2) == Cyc(Rat(-1))); // zeta_3 + zeta_3^2

    // multiplicativity over coprime indices
    for (long m = 1; m <= 10; ++m)
        for (long n = 1; n <= 10; ++n) {
            if (gcd_ll(m, n) != 1)
                continue;
            CHECK(theta_coefficient(psi, m * n) ==
                  (theta_coefficient(psi, m) * theta_coefficient(psi, n)).simplified());
        }

    // Hecke recursion at split primes q: a_{q^{r+1}} = a_q a_{q^r} - chi_K(q) a_{q^{r-1}}
    auto chiK = DirichletCharacter::kronecker(-23);
    for (long q : {2L, 3L, 13L}) {
        if (kronecker_symbol(-23, q) != 1)
            continue;
        for (long r = 1; r <= 4; ++r) {
            long qr = 1;
            for (long i = 0; i < r; ++i)
                qr *= q;
            Cyc lhs = theta_coefficient(psi, qr * q);
            Cyc rhs = theta_coefficient(psi, q) * theta_coefficient(psi, qr) -
                      chiK(q) * theta_coefficient(psi, qr / q);
            CHECK(lhs == rhs.simplified());
        }
    }
}

TEST_CASE("exact infinity-type characters in the class-number-one case")
{
    ImagQuadField K7(7);
    InfinityTypeCharacter psi2(K7, 2);

    // value on the prime above 2: conj((1+sqrt(-7))/2)^2
    auto I2 = ideals_of_norm(K7, 1, 2);
    REQUIRE(I2.size() == 2);
    QuadRat g(make_rat(1, 2), make_rat(-1, 2), 7);
    CHECK((psi2.evaluate(I2[0]) == g * g || psi2.evaluate(I2[0]) == (g * g).conj()));

    // a_2 = gamma^2 + conj(gamma)^2 = -3
    CHECK(theta_coefficient(psi2, 2) == Rat(-3));
    CHECK(theta_coefficient(psi2, 1) == Rat(1));

    // psi_k(a) psi_k(conj a) = N(a)^k for 50 random ideals
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        auto I = random_ideal(K7, 1, rng);
        for (long k : {0L, 2L, 4L}) {
            InfinityTypeCharacter psik(K7, k);
            QuadRat prod = psik.evaluate(I) * psik.evaluate(I.conj());
            CHECK(prod.is_rational());
            CHECK(prod.x == rat_pow(Rat(I.norm()), k));
        }
    }

    CHECK_THROWS_AS(InfinityTypeCharacter(K7, 3), std::domain_error);
    CHECK_THROWS_AS(InfinityTypeCharacter(ImagQuadField(23), 2), std::domain_error);
}

TEST_CASE("norm-power twist of a coefficient stream")
{
    ImagQuadField K7(7);
    auto triv = RingClassCharacter::trivial(K7, 1);
    std::vector<Cyc> a;
    for (long n = 0; n <= 12; ++n)
        a.push_back(theta_coefficient(triv, n));
    auto a0 = scale_by_norm_power(a, 0);
    CHECK(a0 == a);
    auto a1 = scale_by_norm_power(a, 1);
    CHECK(a1[2] == Cyc(4)); // 2 * a_2
    CHECK(a1[1] == a[1]);
    auto am = scale_by_norm_power(a1, -1);
    for (std::size_t n = 1; n < a.size(); ++n)
        CHECK(am[n] == a[n]);
}
