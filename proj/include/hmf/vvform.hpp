#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hmf/fqm.hpp"
#include "hmf/linalg.hpp"
#include "hmf/qseries.hpp"

namespace hmf {

// Vector-valued modular form for the dual Weil representation of a cyclic FQM.
// Component gamma is supported on exponents n = j + alpha_gamma with integer j,
// where alpha_gamma = (-Q(gamma)) mod 1 in [0,1). Holomorphic forms have j >= 0
// everywhere; nearly-holomorphic ones may have j < 0. All stored j < jprec.
class VVForm {
public:
    VVForm() = default;
    VVForm(FQM fqm, int weight2, std::int64_t jprec);
    static VVForm make(const FQM& fqm, const Rational& weight, std::int64_t jprec);

    const FQM& fqm() const { return *fqm_; }
    // weight as an exact rational (kappa); weight2() = 2*kappa.
    int weight2() const { return weight2_; }
    Rational weight() const { return rat(weight2_, 2); }
    std::int64_t jprec() const { return jprec_; }

    // alpha_gamma = fractional offset of component gamma's exponents.
    Rational alpha(std::int64_t gamma) const;

    // Component symmetry sign: c(n,-gamma) = epsilon * c(n,gamma).
    int epsilon() const;

    bool is_zero() const;
    // True when no stored exponent is negative / all are positive.
    bool is_holomorphic() const;
    bool is_cusp() const;

    Rational coeff_j(std::int64_t gamma, std::int64_t j) const;
    // Coefficient at exact exponent n (must satisfy n = alpha_gamma mod 1, else 0).
    Rational coeff_n(std::int64_t gamma, const Rational& n) const;
    // Sets c at (gamma, j) and enforces the epsilon law at -gamma.
    void set_coeff_pair(std::int64_t gamma, std::int64_t j, const Rational& v);
    // Sets a single component entry (caller fills both orientations itself).
    void set_coeff_single(std::int64_t gamma, std::int64_t j, const Rational& v);

    const std::map<std::int64_t, Rational>& component(std::int64_t gamma) const;

    VVForm truncated(std::int64_t jprec) const;
    VVForm operator+(const VVForm& o) const;
    VVForm operator-(const VVForm& o) const;
    VVForm scaled(const Rational& c) const;
    // Multiplication by a scalar (one-variable, integer-exponent) series of
    // the given weight.
    VVForm mul_scalar(const QSeries& g, int scalar_weight = 0) const;
    bool operator==(const VVForm& o) const;

    // Serre derivative: theta(f) = q df/dq - kappa/12 E_2 f, weight kappa + 2.
    VVForm serre_derivative() const;
    // Division by Delta^P (nearly-holomorphic output).
    VVForm div_delta_power(int P) const;

    // Flattens components to a dense vector over gamma in [0,N), j in [jlo, jhi).
    QVec to_qvec(std::int64_t jlo, std::int64_t jhi) const;

    std::string str() const;

private:
    std::optional<FQM> fqm_;
    int weight2_ = 0;
    std::int64_t jprec_ = 0;
    std::vector<std::map<std::int64_t, Rational>> comp_;

    void set_raw(std::int64_t gamma, std::int64_t j, const Rational& v);
    friend VVForm bb_invert(const QSeries& g, const FQM& fqm, const Rational& weight);
};

// Scalar avatar over a prime-order FQM (components summed into exponents p*n).
// Requires epsilon = +1 (else the sum is identically zero and is rejected).
QSeries bb_map(const VVForm& f);

// Inverse of bb_map from a scalar series supported on the admissible pattern
// (multiples of p and exponents E with -E a nonzero square mod p).
VVForm bb_invert(const QSeries& g, const FQM& fqm, const Rational& weight);

// Formal twisted sum sum_gamma c(n,gamma) chi(gamma) q^{pn} of an
// epsilon = -1 form: entries (E, a, u) meaning coefficient a * chi(u) at q^E.
// u is canonicalized to the given representative set; labels are composed with
// the frozen scaling of the identification Lambda'/Lambda = Z/pZ.
struct TwistedEntry {
    std::int64_t exponent; // E
    Rational value;        // a
    std::int64_t argument; // u
    bool operator==(const TwistedEntry& o) const
    {
        return exponent == o.exponent && value == o.value && argument == o.argument;
    }
};

struct TwistedSeries {
    std::int64_t p = 0;
    std::int64_t character_index = 1; // which odd character (formal label)
    std::vector<TwistedEntry> entries;
};

// iso_scale: frozen unit s with label(gamma) = s*gamma; repset: chosen coset
// representatives for printing (one per pair {u,-u}).
TwistedSeries twisted_map(const VVForm& f, std::int64_t character_index, std::int64_t iso_scale,
                          const std::vector<std::int64_t>& repset);

// Is the character chi_index odd? Characters mod p are indexed by the power of
// a fixed primitive root g: chi(g) = zeta_{p-1}^index; chi odd <=> index odd.
bool character_is_odd(std::int64_t p, std::int64_t character_index);

} // namespace hmf
