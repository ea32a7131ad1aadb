#ifndef STARKRANKIN_THETA_HPP
#define STARKRANKIN_THETA_HPP

#include "starkrankin/heckechar.hpp"
#include "starkrankin/qexp.hpp"

namespace starkrankin {

// Theta series of a character of K: weight 1 for finite-order characters,
// weight k+1 for the exact weight-k characters of class-number-one fields.
struct ThetaSeries {
    QExpansion<Cyc> series;
    long weight = 1;
    long level = 1;
    DirichletCharacter nebentype = DirichletCharacter::trivial(1);
    bool cuspidal = false;
};

ThetaSeries theta_series(const RingClassCharacter &psi, long Q);
ThetaSeries theta_series(const InfinityTypeCharacter &psi, long Q);

struct EigenformReport {
    struct Entry {
        long ell = 0;
        bool pass = false;
    };
    std::vector<Entry> entries;
    bool all_pass = true;
};

// T_ell theta = a_ell(theta) * theta for each listed good prime.
EigenformReport verify_eigenform(const ThetaSeries &theta, const std::vector<long> &primes);

// Reads a_p from theta of the weight-(2l+2) character and confirms the roots
// of X^2 - a_p X + p^{2l+2} are the character values of the two primes above
// p, i.e. the (2l+2)-nd powers of a generator of each.
struct FamilyEigenvalueReport {
    long p = 0;
    long l = 0;
    Rat a_p;
    QuadRat root_plus;  // value at the distinguished prime
    QuadRat root_minus; // value at its conjugate
    bool pass = false;
};

FamilyEigenvalueReport family_eigenvalue_check(const ImagQuadField &K, long p, long l);

} // namespace starkrankin

#endif
