#ifndef STARKRANKIN_GAUSS_HPP
#define STARKRANKIN_GAUSS_HPP

#include "starkrankin/dirichlet.hpp"

namespace starkrankin {

// tau(chi) = sum_{a=1}^{N} chi(a) e^{2 pi i a / N}; chi must be primitive.
BigComplex gauss_sum(const DirichletCharacter &chi, long precision_bits = BigFloat::default_precision);

} // namespace starkrankin

#endif
