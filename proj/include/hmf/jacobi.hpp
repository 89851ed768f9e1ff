#pragma once

#include <cstdint>
#include <vector>

#include "hmf/qseries.hpp"
#include "hmf/vvform.hpp"

namespace hmf {

// Jacobi form of integral weight and index m, stored as a two-variable series
// c(n, r) q^n zeta^r. Holomorphic forms have support 4nm - r^2 >= 0; weak forms
// (quotients by Delta) and z-derivatives are carried by the same type.
class JacobiForm {
public:
    JacobiForm() = default;
    JacobiForm(int weight, std::int64_t index, std::int64_t prec);
    JacobiForm(int weight, std::int64_t index, QSeries series);

    int weight() const { return weight_; }
    std::int64_t index() const { return index_; }
    std::int64_t prec() const { return series_.prec(); }
    const QSeries& series() const { return series_; }
    bool is_zero() const { return series_.is_zero(); }

    Rational coeff(std::int64_t n, std::int64_t r) const { return series_.coeff(n, r); }
    void set_coeff(std::int64_t n, std::int64_t r, const Rational& v)
    {
        series_.set_coeff(n, r, v);
    }

    bool is_holomorphic() const; // support only where 4nm - r^2 >= 0
    bool is_cusp() const;        // support only where 4nm - r^2 > 0
    // c(n,r) determined by (4nm - r^2, r mod 2m)?
    bool satisfies_index_law() const;

    JacobiForm operator+(const JacobiForm& o) const;
    JacobiForm operator-(const JacobiForm& o) const;
    JacobiForm scaled(const Rational& c) const;
    JacobiForm mul(const JacobiForm& o) const;        // weights and indices add
    JacobiForm mul_scalar(const QSeries& f, int scalar_weight) const;
    bool operator==(const JacobiForm& o) const;

    std::string str() const { return series_.str("q", "z"); }

private:
    int weight_ = 0;
    std::int64_t index_ = 1;
    QSeries series_{2, 0};
};

// Jacobi Eisenstein series E_{k,m}, normalized c(0,0) = 1; k >= 4 even, m <= 3
// (index 1 by the exact class-number formula, higher index via index raising
// in the one-dimensional spaces).
JacobiForm jacobi_eisenstein(int k, std::int64_t m, std::int64_t prec);

// Index-raising Hecke operator V_l: J_{k,m} -> J_{k,ml}.
JacobiForm jacobi_hecke_v(const JacobiForm& phi, std::int64_t l);

// Exact division by Delta. With require_holomorphic (the default) a quotient
// with negative q-powers is rejected as math_error; weak quotients are allowed
// by passing false.
JacobiForm jacobi_div_delta(const JacobiForm& phi, bool require_holomorphic = true);

// (2 pi i)^{-1} d/dz: (n, r) -> r c(n, r); weight + 1, same index.
JacobiForm jacobi_zderiv(const JacobiForm& phi);

// Theta-decomposition bridges to vector-valued forms over fqm_for_jacobi_index.
VVForm jacobi_to_vv(const JacobiForm& phi, std::int64_t jprec);
JacobiForm vv_to_jacobi(const VVForm& f, int weight, std::int64_t prec);

// Weak Jacobi forms of weight 0 and -2, index 1 (phi_{12,1}/Delta, phi_{10,1}/Delta).
JacobiForm weak_jacobi_0_1(std::int64_t prec);
JacobiForm weak_jacobi_m2_1(std::int64_t prec);

// The named index-1..3 cusp forms from the generator recipes. phi11_sign is the
// frozen orientation of the antisymmetrized derivative combination.
JacobiForm jacobi_phi_10_1(std::int64_t prec);
JacobiForm jacobi_phi_12_1(std::int64_t prec);
JacobiForm jacobi_phi_8_2(std::int64_t prec);
JacobiForm jacobi_phi_10_2(std::int64_t prec);
JacobiForm jacobi_phi_11_2(std::int64_t prec, int phi11_sign);
JacobiForm jacobi_phi_12_2(std::int64_t prec);
JacobiForm jacobi_phi_6_3(std::int64_t prec);
JacobiForm jacobi_phi_8_3(std::int64_t prec);
JacobiForm jacobi_phi_9_3(std::int64_t prec, int phi11_sign);
JacobiForm jacobi_phi_10_3(std::int64_t prec);
JacobiForm jacobi_phi_11_3(std::int64_t prec, int phi11_sign);
JacobiForm jacobi_phi_12_3(std::int64_t prec);

// Basis of J_{k,m} (k = weight + 1/2 even) as vector-valued forms, via the
// weak-form module over M_*(SL_2) with the singular conditions imposed.
std::vector<VVForm> jacobi_vv_basis(const FQM& fqm, const Rational& weight, std::int64_t jprec);

// dim M_k + sum_{j=1..m} dim S_{k+2j}: the expected dimension of J_{k,m} for
// even k >= 4 at the indices used here.
int jacobi_dim(int k, std::int64_t m);

} // namespace hmf
