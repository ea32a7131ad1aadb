#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "starkrankin/elliptic.hpp"
#include "starkrankin/lfun.hpp"

using namespace starkrankin;

namespace {

// oracle: count points of E over F_p by enumerating every (x, y) pair
long brute_count(const WeierstrassModel &E, long p)
{
    auto C = curve_over_fp(E, p);
    long count = 1;
    for (long x = 0; x < p; ++x)
        for (long y = 0; y < p; ++y)
            if (on_curve(C, CurvePoint<Fp>::affine(Fp(x, p), Fp(y, p))))
                ++count;
    return count;
}

const std::vector<long> curve11a{0, -1, 1, -10, -20};
const std::vector<long> curve37a{0, 0, 1, -1, 0};

} // namespace

TEST_CASE("weierstrass invariants and conductor validation")
{
    auto E = WeierstrassModel::from_list(curve11a);
    CHECK(E.disc == -161051); // -11^5
    CHECK(E.c4 == 496);
    auto F = WeierstrassModel::from_list(curve37a);
    CHECK(F.disc == 37);

    CHECK_NOTHROW(validate_conductor(E, 11));
    CHECK_NOTHROW(validate_conductor(F, 37));
    CHECK_THROWS_AS(validate_conductor(E, 7), std::domain_error);
    // y^2 = x^3 - 2^12: singular nowhere but non-minimal at 2... keep a clean
    // non-minimal example: scale 37a by u = 2 -> [0,0,8,-16,0]
    auto NM = WeierstrassModel(Int(0), Int(0), Int(8), Int(-16), Int(0));
    CHECK(NM.disc == Int(37) * 4096);
    CHECK_THROWS_AS(validate_conductor(NM, 37 * 2), std::domain_error);

    CHECK_THROWS_AS(WeierstrassModel(Int(0), Int(0), Int(0), Int(0), Int(0)), std::domain_error);
}

TEST_CASE("point counting and traces")
{
    auto E = WeierstrassModel::from_list(curve11a);
    CHECK(count_points(E, 3) == 5);
    CHECK(trace_ap(E, 3) == -1);

    auto C = WeierstrassModel(Int(0), Int(0), Int(0), Int(1), Int(0)); // y^2 = x^3 + x
    CHECK(count_points(C, 3) == 4);
    CHECK(trace_ap(C, 3) == 0);

    auto F = WeierstrassModel::from_list(curve37a);
    CHECK(count_points(F, 5) == 8);
    CHECK(trace_ap(F, 5) == -2);

    // counting matches the exhaustive oracle on assorted curves and primes
    for (long p : {3L, 5L, 7L, 13L, 31L}) {
        for (auto &a : {curve11a, curve37a, std::vector<long>{1, 0, 1, 4, -6}}) {
            auto M = WeierstrassModel::from_list(a);
            if (M.disc % p == 0)
                continue;
            CHECK(count_points(M, p) == brute_count(M, p));
        }
    }

    // Hasse bound holds for 100 random curves at p <= 97 (trace_ap throws otherwise)
    std::mt19937 rng(20260823);
    std::uniform_int_distribution<long> coeff(-10, 10);
    std::vector<long> primes{5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                             59, 61, 67, 71, 73, 79, 83, 89, 97};
    long done = 0;
    while (done < 100) {
        std::vector<long> a{coeff(rng), coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
        long p = primes[static_cast<std::size_t>(rng() % primes.size())];
        try {
            auto M = WeierstrassModel::from_list(a);
            if (M.disc % p == 0)
                continue;
            long ap = trace_ap(M, p);
            CHECK(Int(ap) * ap <= 4 * Int(p));
            ++done;
        } catch (const std::domain_error &) {
            continue; // singular sample
        }
    }

    CHECK_THROWS_AS(count_points(E, 11), std::domain_error);   // bad prime
    CHECK_THROWS_AS(count_points(E, 15), std::domain_error);   // not prime
    CHECK_THROWS_AS(count_points(E, 100003), std::runtime_error);
}

TEST_CASE("reduction type at bad primes")
{
    auto E = WeierstrassModel::from_list(curve11a);
    CHECK(bad_prime_aq(E, 11) == 1); // split multiplicative

    // y^2 = x^3 - q^2 x is additive at q
    for (long q : {5L, 7L}) {
        auto A = WeierstrassModel(Int(0), Int(0), Int(0), Int(-q * q), Int(0));
        REQUIRE(A.disc % q == 0);
        CHECK(bad_prime_aq(A, q) == 0);
    }

    // multiplicative oracle: a nodal cubic over F_q has q - a_q nonsingular
    // points (with infinity), so raw enumeration gives q - a_q + 1 in total
    auto B = WeierstrassModel(Int(0), Int(1), Int(1), Int(-23), Int(-50));
    REQUIRE(B.disc % 37 == 0);
    auto F = WeierstrassModel::from_list(curve37a);
    for (auto [Mp, q] : std::vector<std::pair<const WeierstrassModel *, long>>{
             {&E, 11}, {&F, 37}, {&B, 37}}) {
        int aq = bad_prime_aq(*Mp, q);
        CHECK((aq == 1 || aq == -1));
        CHECK(brute_count(*Mp, q) == q - aq + 1);
    }

    CHECK_THROWS_AS(bad_prime_aq(E, 7), std::domain_error); // good prime
}

TEST_CASE("group law over the rationals")
{
    auto F = WeierstrassModel::from_list(curve37a);
    auto C = curve_over_q(F);
    auto P = CurvePoint<Rat>::affine(Rat(0), Rat(0));
    REQUIRE(on_curve(C, P));

    CHECK(point_add(C, P, CurvePoint<Rat>::at_infinity()) == P);

    auto twoP = point_add(C, P, P);
    CHECK(on_curve(C, twoP));
    CHECK(twoP == CurvePoint<Rat>::affine(Rat(1), Rat(0)));
    CHECK(point_mul(C, P, 2) == twoP);

    // n P by double-and-add matches repeated addition, all points on curve
    auto acc = CurvePoint<Rat>::at_infinity();
    for (long n = 1; n <= 12; ++n) {
        acc = point_add(C, acc, P);
        CHECK(on_curve(C, acc));
        CHECK(point_mul(C, P, n) == acc);
    }
    CHECK(point_add(C, P, point_negate(C, P)).infinity);
    CHECK(point_mul(C, P, -3) == point_negate(C, point_mul(C, P, 3)));

    // 5-torsion on the 11a curve
    auto E = WeierstrassModel::from_list(curve11a);
    auto CE = curve_over_q(E);
    auto T = CurvePoint<Rat>::affine(Rat(5), Rat(5));
    REQUIRE(on_curve(CE, T));
    CHECK(point_mul(CE, T, 5).infinity);
    CHECK_FALSE(point_mul(CE, T, 3).infinity);

    auto off = CurvePoint<Rat>::affine(Rat(1), Rat(1));
    CHECK_THROWS_AS(point_add(C, off, P), std::domain_error);
    CHECK_THROWS_AS(point_mul(C, off, 2), std::domain_error);
}

TEST_CASE("group law over prime fields")
{
    auto E = WeierstrassModel::from_list(curve11a);
    long p = 101;
    auto C = curve_over_fp(E, p);
    long m = count_points(E, p);

    std::mt19937 rng(4711);
    auto random_point = [&] {
        auto P0 = some_fp_point(E, p, static_cast<long>(rng() % p));
        return point_mul(C, P0, static_cast<long>(1 + rng() % 50));
    };

    // associativity on random triples
    for (int i = 0; i < 50; ++i) {
        auto A = random_point(), B = random_point(), D = random_point();
        CHECK(point_add(C, point_add(C, A, B), D) == point_add(C, A, point_add(C, B, D)));
    }
    // the group order annihilates every point
    for (int i = 0; i < 20; ++i)
        CHECK(point_mul(C, random_point(), m).infinity);
    // commutativity and scalar consistency
    for (int i = 0; i < 10; ++i) {
        auto A = random_point(), B = random_point();
        CHECK(point_add(C, A, B) == point_add(C, B, A));
    }
    auto P = some_fp_point(E, p, 0);
    auto acc = CurvePoint<Fp>::at_infinity();
    for (long n = 1; n <= 20; ++n) {
        acc = point_add(C, acc, P);
        CHECK(point_mul(C, P, n) == acc);
    }
}

TEST_CASE("counted traces feed the local-factor streams consistently")
{
    auto E = WeierstrassModel::from_list(curve11a);
    for (long p : {3L, 5L, 7L, 13L}) {
        long ap = trace_ap(E, p);
        auto r = hecke_roots(Cyc(Rat(ap)), Cyc(1), p, 2, false);
        REQUIRE(r.exact);
        CHECK((r.alpha + r.beta).simplified() == Cyc(Rat(ap)));
        CHECK((r.alpha * r.beta).simplified() == Cyc(Rat(p)));
        // second Hecke coefficient a_{p^2} = a_p^2 - p equals the degree-2 symmetric sum
        Cyc s2 = (r.alpha * r.alpha + r.alpha * r.beta + r.beta * r.beta).simplified();
        CHECK(s2 == Cyc(Rat(ap * ap - p)));
    }
}
