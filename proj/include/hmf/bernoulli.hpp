#pragma once

#include <cstdint>
#include <vector>

#include "hmf/rational.hpp"

namespace hmf {

// n-th Bernoulli number, convention B_1 = -1/2. Memoized.
Rational bernoulli(unsigned n);

// Bernoulli polynomial B_n(x) = sum C(n,k) B_k x^{n-k}.
Rational bernoulli_poly(unsigned n, const Rational& x);

// Generalized Bernoulli number B_{n,chi} for the quadratic character
// chi = kronecker(D, .) of a fundamental discriminant D (D = 1 gives B_n).
Rational bernoulli_chi(unsigned n, std::int64_t D);

// Cohen's class-number function H(r, N): H(r,0) = zeta(1-2r); for N > 0 with
// (-1)^r N = D f^2 (D fundamental), H = L(1-r, chi_D) sum_{d|f} mu(d) chi_D(d)
// d^{r-1} sigma_{2r-1}(f/d); zero when (-1)^r N is not 0 or 1 mod 4.
Rational cohen_h(unsigned r, std::int64_t N);

int moebius(std::int64_t n);
bool is_fundamental_discriminant(std::int64_t D);

// dim M_k(SL_2(Z)) and dim S_k(SL_2(Z)) for integer k.
int dim_mk_level1(int k);
int dim_sk_level1(int k);

} // namespace hmf
