#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hmf/vvform.hpp"

namespace hmf {

// Weight-kappa Eisenstein series of level p with quadratic character, combined
// so the expansion is supported on multiples of p and non-residue exponents,
// normalized to constant term 1. kappa must be odd, >= 3.
QSeries eisenstein_minus_space(std::int64_t p, int kappa, std::int64_t prec);

// Eisenstein series with constant term e_0 for the dual Weil representation.
// Field case: weight odd >= 3 via the scalar route. Jacobi case: delegated to
// the Jacobi-Eisenstein construction (weight k - 1/2, k >= 4 even).
VVForm vv_eisenstein(const FQM& fqm, const Rational& weight, std::int64_t jprec);

// Basis of M_kappa(rho*) (or nearly-holomorphic forms with pole order <= P).
// Build pool: Eisenstein series, products with E4/E6/Delta, Serre derivatives,
// harmonic theta seeds; echelonized deterministically. If expected_rank is
// given and not reached, throws math_error (incomplete construction strategy).
std::vector<VVForm> vv_basis(const FQM& fqm, const Rational& weight, std::int64_t jprec,
                             std::optional<std::size_t> expected_rank = std::nullopt,
                             int pole_order = 0);

// Seed of a pinning problem: constrains every admissible exponent E <= max_exponent
// of the scalar avatar (epsilon = +1: bb image; epsilon = -1: twisted entries).
struct PinSeed {
    std::optional<QSeries> scalar;
    std::vector<TwistedEntry> twisted;
    std::int64_t max_exponent = 0;
    std::int64_t iso_scale = 1; // for twisted entries: printed label = scale * gamma
};

// The unique basis combination matching the seed on its exponent window;
// every seed coefficient beyond the first rank-many is a consistency check.
// Throws math_error("no solution") / math_error("ambiguous...") accordingly.
VVForm vv_pin(const PinSeed& seed, const std::vector<VVForm>& basis);

} // namespace hmf
