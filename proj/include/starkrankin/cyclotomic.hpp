#ifndef STARKRANKIN_CYCLOTOMIC_HPP
#define STARKRANKIN_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "starkrankin/bigcomplex.hpp"
#include "starkrankin/numutil.hpp"

namespace starkrankin {

// Element of the cyclotomic field Q(zeta_m), stored in the power basis
// 1, zeta, ..., zeta^{phi(m)-1} reduced modulo the m-th cyclotomic polynomial.
// Arithmetic between elements of different orders promotes both to the lcm.
class CyclotomicElement {
  public:
    CyclotomicElement() : order_(1), coeffs_(1, Rat(0)) {}
    CyclotomicElement(const Rat &r) : order_(1), coeffs_(1, r) {}
    CyclotomicElement(long n) : order_(1), coeffs_(1, Rat(n)) {}

    // zeta_m^k
    static CyclotomicElement zeta(long m, long k = 1);

    long order() const { return order_; }
    const std::vector<Rat> &coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat to_rational() const; // throws std::domain_error if not rational

    CyclotomicElement operator-() const;
    CyclotomicElement operator+(const CyclotomicElement &o) const;
    CyclotomicElement operator-(const CyclotomicElement &o) const;
    CyclotomicElement operator*(const CyclotomicElement &o) const;
    CyclotomicElement operator/(const CyclotomicElement &o) const;
    CyclotomicElement inverse() const; // throws std::domain_error on zero
    CyclotomicElement pow(long e) const;

    bool operator==(const CyclotomicElement &o) const;
    bool operator!=(const CyclotomicElement &o) const { return !(*this == o); }

    // Field automorphism zeta |-> zeta^a, gcd(a, order) = 1.
    CyclotomicElement galois(long a) const;
    // Complex conjugation, zeta |-> zeta^{-1}.
    CyclotomicElement conj() const;

    // Rewrites the element at order m (current order must divide m).
    CyclotomicElement promoted(long m) const;
    // Drops to order 1 when the element is rational (canonicalising helper).
    CyclotomicElement simplified() const;

    BigComplex to_complex(long prec_bits = BigFloat::default_precision) const;
    std::string to_string() const;

    // Coefficient vector of the m-th cyclotomic polynomial (monic, ascending).
    static const std::vector<Rat> &cyclotomic_polynomial(long m);

  private:
    CyclotomicElement(long m, std::vector<Rat> c) : order_(m), coeffs_(std::move(c)) {}
    static void align(CyclotomicElement &a, CyclotomicElement &b);

    long order_;
    std::vector<Rat> coeffs_; // length = phi(order_), ascending powers
};

using Cyc = CyclotomicElement;

inline CyclotomicElement operator+(const Rat &r, const CyclotomicElement &c) { return CyclotomicElement(r) + c; }
inline CyclotomicElement operator-(const Rat &r, const CyclotomicElement &c) { return CyclotomicElement(r) - c; }
inline CyclotomicElement operator*(const Rat &r, const CyclotomicElement &c) { return CyclotomicElement(r) * c; }

} // namespace starkrankin

#endif
