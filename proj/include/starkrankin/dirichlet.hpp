#ifndef STARKRANKIN_DIRICHLET_HPP
#define STARKRANKIN_DIRICHLET_HPP

#include <vector>

#include "starkrankin/cyclotomic.hpp"

namespace starkrankin {

// Dirichlet character modulo N.  Internally defined by its values on the
// canonical generators of (Z/N)^x; a dense value table is cached for
// evaluation.  Values are exact roots of unity (CyclotomicElement).
class DirichletCharacter {
  public:
    struct Generator {
        long residue; // generator of one cyclic component of (Z/N)^x
        long comp_order;
        long exponent; // character value at the generator is zeta_{comp_order}^exponent
    };

    // Principal character modulo n.
    static DirichletCharacter trivial(long n);
    // Quadratic character a |-> (disc | a) for a fundamental discriminant disc.
    static DirichletCharacter kronecker(long disc);
    // Character modulo n defined by exponents on the canonical generators.
    static DirichletCharacter from_exponents(long n, const std::vector<long> &exponents);
    // Character modulo n induced by chi (conductor of chi must divide n).
    static DirichletCharacter induced(const DirichletCharacter &chi, long n);

    long modulus() const { return modulus_; }
    long conductor() const { return conductor_; }
    bool primitive() const { return conductor_ == modulus_; }
    long order() const { return order_; } // order of the character in the dual group
    bool is_trivial() const { return order_ == 1; }
    bool even() const { return even_; } // chi(-1) = 1
    bool odd() const { return !even_; }

    const std::vector<Generator> &generators() const { return gens_; }

    // chi(n) for any integer n (zero when gcd(n, modulus) > 1).
    Cyc operator()(long n) const;
    Cyc operator()(const Int &n) const;

    DirichletCharacter inverse_character() const;
    // Primitive character of modulus = conductor inducing this one.
    DirichletCharacter primitive_character() const;

    bool operator==(const DirichletCharacter &o) const
    {
        return modulus_ == o.modulus_ && values_ == o.values_;
    }

  private:
    DirichletCharacter() = default;
    void finalize(); // computes order, parity, conductor from the table

    long modulus_ = 1;
    long conductor_ = 1;
    long order_ = 1;
    bool even_ = true;
    std::vector<Generator> gens_;
    std::vector<Cyc> values_; // index a in [0, modulus)
};

// Canonical generators of (Z/n)^x with their component orders.
std::vector<std::pair<long, long>> unit_group_generators(long n);

} // namespace starkrankin

#endif
