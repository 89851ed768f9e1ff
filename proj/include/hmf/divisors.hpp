#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hmf/fqm.hpp"
#include "hmf/qseries.hpp"

namespace hmf {

// Multiset of Heegner divisors with nonnegative multiplicities.
struct DivisorSum {
    std::map<std::int64_t, Rational> parts; // D -> multiplicity
    bool operator==(const DivisorSum& o) const { return parts == o.parts; }
    std::string str() const;
};

// Principal part of a nearly-holomorphic input of weight -1 (rank-2 lattice):
// integer coefficients at (gamma, n < 0) plus the constant term c(0,0).
struct PrincipalPart {
    FQM fqm;
    // (gamma, exponent numerator over |d|): n = num/|d| with num < 0
    std::map<std::pair<std::int64_t, std::int64_t>, Int> negative; // c(n, gamma)
    Int constant = 0;                                              // c(0, 0)

    void set(std::int64_t gamma, std::int64_t num, const Int& v); // sets +-gamma
    Int get(std::int64_t gamma, std::int64_t num) const;
};

// Divisor and weight of the multiplicative lift of the principal part:
// order on the discriminant-D divisor is sum_{r>0} c(r^2 (-D/|d|), r gamma_D),
// the weight is c(0,0)/2; the holomorphy flag requires nonnegative integer
// orders, and holomorphic products here are automatically cusp forms.
struct BorcherdsData {
    DivisorSum divisor;
    Rational weight;
    bool holomorphic = false;
    bool cusp = false;
};

BorcherdsData borcherds_divisor_weight(const PrincipalPart& pp, std::int64_t dmax = 16);

// Intersection data along the norm-m divisor: the stored weight-3 series of
// pairing numbers and the derived statements used by the reduction arguments.
struct HeegnerData {
    QSeries phi;                 // Phi_m
    std::int64_t pair_with = 0;  // the other member of the distinguished pair
    std::int64_t on_k1 = 0;      // H_1 . H_pair as a multiple of H_1, level-1 side
    std::int64_t on_kpair = 0;   // ... on the level-pair side
    QSeries alpha;               // the weight-5/2 sum series
};

HeegnerData heegner_intersection_data(std::int64_t d, std::int64_t m);

// theta' means (2 pi i)^{-1} d/dtau; returns a*theta'(tau) - E_2(c*tau)*theta(tau).
QSeries theta_weight_52_combination(std::int64_t a, std::int64_t c, std::int64_t prec);

} // namespace hmf
