#include "starkrankin/gauss.hpp"

#include <stdexcept>

namespace starkrankin {

BigComplex gauss_sum(const DirichletCharacter &chi, long precision_bits)
{
    if (!chi.primitive())
        throw std::domain_error("gauss_sum: character must be primitive");
    long n = chi.modulus();
    if (n == 1)
        return BigComplex::from_rat(Rat(1), precision_bits); // empty-sum convention tau(1) = 1
    BigComplex acc(precision_bits);
    for (long a = 1; a <= n; ++a) {
        Cyc v = chi(a);
        if (v.is_zero())
            continue;
        acc = acc + v.to_complex(precision_bits) * BigComplex::root_of_unity(a, n, precision_bits);
    }
    return acc;
}

} // namespace starkrankin
