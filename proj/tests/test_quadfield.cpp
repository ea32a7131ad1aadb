#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "starkrankin/quadfield.hpp"

using namespace starkrankin;

namespace {

// Oracle: count reduced primitive forms of discriminant -D by a triple loop.
long brute_class_number(long D)
{
    long count = 0;
    for (long a = 1; 3 * a * a <= D; ++a)
        for (long b = -a + 1; b <= a; ++b) {
            if (((b + D) % 2) != 0)
                continue;
            long num = b * b + D;
            if (num % (4 * a) != 0)
                continue;
            long c = num / (4 * a);
            if (c < a || (a == c && b < 0))
                continue;
            if (gcd_ll(gcd_ll(a, b < 0 ? -b : b), c) != 1)
                continue;
            ++count;
        }
    return count;
}

// Oracle: ideals of norm n in the maximal order of Q(sqrt(-D)) counted by
// proper representations: r(n) = #{(x,y) : Q(x,y) = n over all reduced form
// classes} / w, where Q runs over ALL reduced forms (including imprimitive is
// impossible for fundamental discriminants) and w = #units.
long brute_ideal_count(long D, long n)
{
    ImagQuadField K(D);
    long count = 0;
    long disc = -D;
    for (long a = 1; 3 * a * a <= D; ++a)
        for (long b = -a + 1; b <= a; ++b) {
            if (((b - disc) % 2) != 0)
                continue;
            long num = b * b + D;
            if (num % (4 * a) != 0)
                continue;
            long c = num / (4 * a);
            if (c < a || (a == c && b < 0))
                continue;
            // count representations a x^2 + b x y + c y^2 = n
            for (long x = -n - 1; x <= n + 1; ++x)
                for (long y = -n - 1; y <= n + 1; ++y)
                    if (a * x * x + b * x * y + c * y * y == n)
                        ++count;
        }
    return count / K.w_K;
}

} // namespace

TEST_CASE("field construction and unit counts")
{
    ImagQuadField K7(7);
    CHECK(K7.w_K == 2);
    CHECK_FALSE(K7.small_disc_warning);
    CHECK(ImagQuadField(3).w_K == 6);
    CHECK(ImagQuadField(4).w_K == 4);
    CHECK(ImagQuadField(4).small_disc_warning);
    CHECK_THROWS_AS(ImagQuadField(5), std::domain_error);  // -5 = 3 (mod 4)
    CHECK_THROWS_AS(ImagQuadField(12), std::domain_error); // not fundamental
    CHECK_THROWS_AS(ImagQuadField(-7), std::domain_error);
}

TEST_CASE("form reduction and composition")
{
    QuadForm f(4, 5, 3); // discriminant -23
    CHECK(f.disc() == -23);
    QuadForm r = f.reduced();
    CHECK(r.is_reduced());
    CHECK(r == QuadForm(2, -1, 3));
    CHECK(QuadForm::identity(Int(-23)) == QuadForm(1, 1, 6));
    CHECK(QuadForm(1, 1, 6).is_principal());
    CHECK_FALSE(QuadForm(2, 1, 3).is_principal());

    // 2-torsion-free group of order 3: P^2 ~ P^{-1}, P^3 principal
    QuadForm P(2, 1, 3);
    CHECK(QuadForm::compose(P, P) == P.inverse());
    CHECK(P.pow(3).is_principal());
    CHECK(P.pow(-1) == P.inverse());
}

TEST_CASE("class groups match the counting oracle")
{
    CHECK(ClassGroup(Int(-23)).h() == 3);
    CHECK(ClassGroup(Int(-23)).orders() == std::vector<long>{3});
    CHECK(ClassGroup(Int(-7)).h() == 1);
    CHECK(ClassGroup(Int(-4)).h() == 1);
    CHECK(ClassGroup(Int(-47)).h() == 5);

    for (long D = 3; D <= 200; ++D) {
        if (!is_fundamental_discriminant_neg(D))
            continue;
        ClassGroup cl(Int(-D));
        CHECK(cl.h() == brute_class_number(D));
        long prod = 1;
        for (long d : cl.orders())
            prod *= d;
        CHECK(prod == cl.h());
        // divisor chain
        for (std::size_t i = 0; i + 1 < cl.orders().size(); ++i)
            CHECK(cl.orders()[i + 1] % cl.orders()[i] == 0);
    }
    CHECK_THROWS(ClassGroup(Int(-20000003)));
}

TEST_CASE("composition table is an abelian group (exhaustive, small h)")
{
    for (long D : {7L, 23L, 47L, 71L, 84L, 120L, 231L}) {
        ClassGroup cl(Int(-D));
        if (cl.h() > 12)
            continue;
        const auto &E = cl.elements();
        QuadForm id = cl.principal().reduced();
        for (const auto &x : E) {
            CHECK(QuadForm::compose(x, id) == x);
            CHECK(QuadForm::compose(x, x.inverse()) == id);
            for (const auto &y : E) {
                CHECK(QuadForm::compose(x, y) == QuadForm::compose(y, x));
                for (const auto &z : E)
                    CHECK(QuadForm::compose(QuadForm::compose(x, y), z) ==
                          QuadForm::compose(x, QuadForm::compose(y, z)));
            }
        }
        // decompose round-trip
        for (const auto &x : E) {
            auto e = cl.decompose(x);
            QuadForm back = id;
            for (std::size_t i = 0; i < e.size(); ++i)
                back = QuadForm::compose(back, cl.generators()[i].pow(e[i]));
            CHECK(back == x);
        }
    }
}

TEST_CASE("genus number equals the two-power of the prime-divisor count")
{
    for (long D = 7; D <= 500; ++D) {
        if (!is_fundamental_discriminant_neg(D))
            continue;
        ClassGroup cl(Int(-D));
        long expected = 1L << (prime_divisors(D).size() - 1);
        CHECK(cl.genus_number() == expected);
    }
}

TEST_CASE("prime splitting")
{
    ImagQuadField K11(11), K7(7);
    CHECK(prime_splitting(K11, 1, 3).kind == SplitKind::split);
    CHECK(prime_splitting(K11, 1, 11).kind == SplitKind::ramified);
    CHECK(prime_splitting(K7, 1, 3).kind == SplitKind::inert);
    auto sp = prime_splitting(K11, 1, 3);
    CHECK(sp.prime.a == 3);
    CHECK(sp.prime.b == 1);
    CHECK(sp.prime.disc() == -11);
    CHECK(QuadForm::compose(sp.prime.reduced(), sp.conjugate.reduced()).is_principal());
    CHECK_THROWS_AS(prime_splitting(K11, 3, 3), std::domain_error);
    CHECK_THROWS_AS(prime_splitting(K11, 1, 4), std::domain_error);
    // splitting in a non-maximal order: 2 is inert in the order of conductor 3
    // inside Q(sqrt(-7)) iff kronecker(-63, 2) = -1
    CHECK(prime_splitting(K7, 3, 2).kind ==
          (kronecker_symbol(-63, 2) == 1 ? SplitKind::split : SplitKind::inert));
}

TEST_CASE("ideal enumeration matches the representation oracle")
{
    ImagQuadField K7(7);
    CHECK(ideals_of_norm(K7, 1, 2).size() == 2);
    CHECK(ideals_of_norm(K7, 1, 3).size() == 0);
    CHECK(ideals_of_norm(K7, 1, 1).size() == 1);
    CHECK(ideals_of_norm(K7, 1, 1)[0].is_unit());

    for (long D : {7L, 11L, 23L, 47L}) {
        ImagQuadField K(D);
        for (long n = 1; n <= 60; ++n)
            CHECK(static_cast<long>(ideals_of_norm(K, 1, n).size()) == brute_ideal_count(D, n));
    }

    // multiplicativity across coprime norms
    ImagQuadField K23(23);
    for (long m : {2L, 3L, 5L, 9L})
        for (long n : {7L, 11L, 13L})
            CHECK(ideals_of_norm(K23, 1, m * n).size() ==
                  ideals_of_norm(K23, 1, m).size() * ideals_of_norm(K23, 1, n).size());

    // norms and conjugates are consistent
    for (const auto &I : ideals_of_norm(K23, 1, 12)) {
        CHECK(I.norm() == 12);
        CHECK(I.conj().norm() == 12);
        CHECK(I.conj().conj().parts.size() == I.parts.size());
        // class of conj is the inverse class
        QuadForm c1 = ideal_class(K23, 1, I);
        QuadForm c2 = ideal_class(K23, 1, I.conj());
        CHECK(QuadForm::compose(c1, c2).is_principal());
    }
    CHECK_THROWS_AS(ideals_of_norm(K7, 3, 6), std::domain_error);
}

TEST_CASE("cyclic ideals above the conductor of the curve")
{
    ImagQuadField K11(11), K7(7);
    auto n11 = heegner_ideal(K11, 11);
    REQUIRE(n11.has_value());
    CHECK(n11->norm() == 11);
    CHECK(n11->parts.size() == 1);
    CHECK(n11->parts[0].kind == SplitKind::ramified);

    CHECK_FALSE(heegner_ideal(K7, 3).has_value());
    CHECK(heegner_ideal(K7, 1)->is_unit());
    // 37 = split in Q(sqrt(-11))
    CHECK(heegner_ideal(K11, 37).has_value());
    // ramified square fails: 121 requires the ramified prime squared
    CHECK_FALSE(heegner_ideal(K11, 121).has_value());
}

TEST_CASE("principal generators of prime-ideal powers")
{
    ImagQuadField K11(11), K7(7), K23(23);

    auto g3 = principal_generator(K11, 1, prime_splitting(K11, 1, 3).prime, 1);
    CHECK(g3 == QuadRat(make_rat(1, 2), make_rat(1, 2), 11));
    CHECK(g3.norm() == 3);

    auto g2 = principal_generator(K7, 1, prime_splitting(K7, 1, 2).prime, 1);
    CHECK(g2 == QuadRat(make_rat(1, 2), make_rat(1, 2), 7));
    CHECK(g2.norm() == 2);

    CHECK(principal_generator(K7, 1, QuadForm::identity(Int(-7)), 1) ==
          QuadRat(Rat(1), Rat(0), 7));

    // h = 3: the cube of a prime above 2 in Q(sqrt(-23)) is principal
    auto g8 = principal_generator(K23, 1, prime_splitting(K23, 1, 2).prime, 3);
    CHECK(g8.norm() == 8);
    // but the prime itself is not
    CHECK_THROWS_AS(principal_generator(K23, 1, prime_splitting(K23, 1, 2).prime, 1),
                    std::logic_error);

    // ramified prime: generator of the prime above 7 is sqrt(-7)
    auto g7 = principal_generator(K7, 1, prime_splitting(K7, 1, 7).prime, 1);
    CHECK(g7.norm() == 7);
    CHECK(g7.x == 0);

    // generator times conjugate = norm; generator^h lies in the right ideal class
    auto sp = prime_splitting(K11, 1, 5);
    CHECK(sp.kind == SplitKind::split);
    auto g5 = principal_generator(K11, 1, sp.prime, 1);
    CHECK(g5.norm() == 5);
}

TEST_CASE("quadratic field element arithmetic")
{
    QuadRat a(make_rat(1, 2), make_rat(1, 2), 11);
    CHECK((a * a.conj()).is_rational());
    CHECK((a * a.conj()).x == a.norm());
    CHECK(a.pow(2) == a * a);
    CHECK(a.pow(0) == QuadRat(Rat(1), Rat(0), 11));
    CHECK((a.pow(-1) * a) == QuadRat(Rat(1), Rat(0), 11));
    CHECK((a + a.conj()).is_rational());
}
