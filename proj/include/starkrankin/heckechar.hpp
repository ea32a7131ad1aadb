#ifndef STARKRANKIN_HECKECHAR_HPP
#define STARKRANKIN_HECKECHAR_HPP

#include <memory>

#include "starkrankin/cyclotomic.hpp"
#include "starkrankin/dirichlet.hpp"
#include "starkrankin/quadfield.hpp"

namespace starkrankin {

// Finite-order character of the form class group of the order of conductor c
// in K, given by exponents on the cyclic generators (psi(g_i) = zeta_{d_i}^{e_i}).
class RingClassCharacter {
  public:
    RingClassCharacter(const ImagQuadField &K, long c, std::vector<long> exponents);

    static RingClassCharacter trivial(const ImagQuadField &K, long c)
    {
        ClassGroup cl(-Int(K.D_K) * c * c);
        return RingClassCharacter(K, c, std::vector<long>(cl.orders().size(), 0));
    }

    const ImagQuadField &field() const { return field_; }
    long conductor() const { return c_; }
    const ClassGroup &class_group() const { return *cl_; }
    const std::vector<long> &exponents() const { return exponents_; }
    long order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }

    Cyc evaluate_class(const QuadForm &cls) const;
    Cyc evaluate(const FactoredIdeal &ideal) const;
    Cyc operator()(const FactoredIdeal &ideal) const { return evaluate(ideal); }

    // psi'(a) = psi(conj a) = psi(a)^{-1} on class groups
    RingClassCharacter conjugate_character() const;
    RingClassCharacter pow(long e) const;
    RingClassCharacter operator*(const RingClassCharacter &o) const;
    bool is_self_dual() const;
    // restriction to rational principal ideals (trivial for these characters)
    DirichletCharacter central_character() const;

    bool operator==(const RingClassCharacter &o) const
    {
        return field_.D_K == o.field_.D_K && c_ == o.c_ && exponents_ == o.exponents_;
    }

  private:
    ImagQuadField field_;
    long c_;
    std::shared_ptr<const ClassGroup> cl_;
    std::vector<long> exponents_;
    long order_ = 1;
};

// Character psi_k of trivial conductor on a class-number-one field, sending a
// principal ideal (alpha) to conj(alpha)^k; k must be even so units cancel.
class InfinityTypeCharacter {
  public:
    InfinityTypeCharacter(const ImagQuadField &K, long k);

    const ImagQuadField &field() const { return field_; }
    long weight() const { return k_; }

    QuadRat evaluate(const FactoredIdeal &ideal) const;
    QuadRat operator()(const FactoredIdeal &ideal) const { return evaluate(ideal); }

  private:
    ImagQuadField field_;
    long k_;
};

struct FrobeniusData {
    long p = 0;
    Cyc alpha; // psi of the distinguished prime above p
    Cyc beta;  // psi of its conjugate
};

FrobeniusData frobenius_data(const RingClassCharacter &psi, long p);

// a_n(psi) = sum of psi over the ideals of norm n coprime to the conductor;
// a_0 is h/w for the trivial character and 0 otherwise.
Cyc theta_coefficient(const RingClassCharacter &psi, long n);
Rat theta_coefficient(const InfinityTypeCharacter &psi, long n);

// a_n -> n^k a_n, the coefficient stream of psi * (norm)^k.
std::vector<Cyc> scale_by_norm_power(const std::vector<Cyc> &coeffs, long k);

} // namespace starkrankin

#endif
