#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "hmf/rational.hpp"

namespace hmf {

// Cyclic finite quadratic module Z/NZ with Q-valued-mod-1 quadratic form and a
// signature tag mod 8. Covers the discriminant forms used here: prime order
// |d| for the imaginary-quadratic fields, order 2m for Jacobi index m.
class FQM {
public:
    FQM(std::int64_t order, std::vector<Rational> qvals, int signature);

    std::int64_t order() const { return n_; }
    int signature() const { return sig_; }

    // Q(gamma) mod 1, in [0, 1).
    const Rational& q(std::int64_t gamma) const { return qvals_[static_cast<std::size_t>(mod_pos(gamma, n_))]; }
    // Bilinear form <beta,gamma> = Q(beta+gamma) - Q(beta) - Q(gamma) mod 1.
    Rational bilinear(std::int64_t beta, std::int64_t gamma) const;

    std::int64_t neg(std::int64_t gamma) const { return mod_pos(-gamma, n_); }

    bool operator==(const FQM& o) const
    {
        return n_ == o.n_ && sig_ == o.sig_ && qvals_ == o.qvals_;
    }

private:
    std::int64_t n_;
    int sig_;
    std::vector<Rational> qvals_;
};

// Discriminant form of the norm lattice of the field with discriminant d:
// order |d|, Q(k) = k^2/|d|, signature 2.
FQM fqm_for_field(std::int64_t d);

// Discriminant form of the index-m Jacobi lattice: order 2m, Q(k) = k^2/4m,
// signature 1.
FQM fqm_for_jacobi_index(std::int64_t m);

// Exact element of Z[zeta_L]: dictionary exponent -> rational coefficient,
// reduced modulo the L-th cyclotomic polynomial.
class Cyclo {
public:
    Cyclo() : order_(1) {}
    explicit Cyclo(std::int64_t order) : order_(order) {}
    static Cyclo root_power(std::int64_t order, std::int64_t e); // zeta_order^e
    static Cyclo rational(std::int64_t order, const Rational& c);

    std::int64_t order() const { return order_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<std::int64_t, Rational>& coeffs() const { return c_; }

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo scaled(const Rational& r) const;
    bool operator==(const Cyclo& o) const;

    std::complex<double> to_complex() const; // test-only numeric view

private:
    std::map<std::int64_t, Rational> c_; // exponent in [0, deg Phi_L) after reduction
    std::int64_t order_;
    void add_term(std::int64_t e, const Rational& v);
    void reduce();
};

// Integer coefficients of the L-th cyclotomic polynomial.
std::vector<Int> cyclotomic_poly(std::int64_t L);

// sqrt(n) as an element of Z[zeta_L] (throws if not representable there).
Cyclo sqrt_as_cyclo(std::int64_t n, std::int64_t L);

// Exact matrices of the generators under the dual Weil representation:
// rho*(T) diagonal with e^{-2 pi i Q(gamma)}, and
// rho*(S) = e^{pi i sig/4}/sqrt(N) (e^{2 pi i <beta,gamma>})_{beta,gamma},
// where sig is the stored tag of the positive-definite side (the inputs
// transform under the representation attached to its negative).
// S is stored with the 1/sqrt(N) factor carried separately: S = s_tilde / sqrt(N).
struct WeilMatrices {
    std::int64_t N = 0;
    std::int64_t root_order = 1; // lcm(8, 2N)
    std::vector<std::vector<Cyclo>> s_tilde; // sqrt(N) * S
    std::vector<std::vector<Cyclo>> t;
};

WeilMatrices weil_matrices(const FQM& fqm);

std::vector<std::vector<Cyclo>> cyclo_mat_mul(const std::vector<std::vector<Cyclo>>& a,
                                              const std::vector<std::vector<Cyclo>>& b);

} // namespace hmf
