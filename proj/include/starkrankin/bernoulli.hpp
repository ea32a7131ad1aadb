#ifndef STARKRANKIN_BERNOULLI_HPP
#define STARKRANKIN_BERNOULLI_HPP

#include "starkrankin/dirichlet.hpp"

namespace starkrankin {

// k-th Bernoulli number (B_1 = -1/2 convention).
Rat bernoulli_number(long k);

// Bernoulli polynomial B_k evaluated at x.
Rat bernoulli_polynomial(long k, const Rat &x);

// Generalized Bernoulli number B_{k,chi} = N^{k-1} sum_{a=1}^{N} chi(a) B_k(a/N).
Cyc generalized_bernoulli(long k, const DirichletCharacter &chi);

// L(chi, 1-k) = -B_{k,chi}/k.
Cyc dirichlet_l_nonpositive(long k, const DirichletCharacter &chi);

} // namespace starkrankin

#endif
