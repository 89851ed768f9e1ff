#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hmf/fqm.hpp"
#include "hmf/vvform.hpp"

namespace hmf {

// Auxiliary positive-definite even rank-6 lattice whose discriminant form is
// (Z/p, -k^2/p); its (harmonic) theta series realize forms for the dual Weil
// representation of fqm_for_field(-p). For p = 7 this is A6; for p = 11 a
// glue of D5 with a vector of norm 44.
class SeedLattice {
public:
    explicit SeedLattice(std::int64_t field_disc); // -7 or -11

    std::int64_t p() const { return p_; }
    const std::vector<std::vector<std::int64_t>>& gram() const { return gram_; }

    // Theta series with harmonic polynomial Re/Im((<a,x> + i <b,x>)^nu) for the
    // stored isotropic pairs (a,b), as forms of weight 3 + nu for fqm. Returns
    // the distinct nonzero series for all pairs, each with entries j < jprec.
    std::vector<VVForm> theta_seeds(int nu, std::int64_t jprec, const FQM& fqm) const;

    // Plain theta series (nu = 0).
    VVForm theta(std::int64_t jprec, const FQM& fqm) const;

private:
    std::int64_t p_;
    std::vector<std::vector<std::int64_t>> gram_;     // 6x6
    std::vector<std::vector<std::int64_t>> adj_;      // p * gram^{-1}, integer
    std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> pairs_;
    std::vector<std::vector<std::int64_t>> singles_;
    std::vector<std::int64_t> label_row_;             // functional giving coset labels
    std::int64_t label_unit_ = 1;                     // normalizes generator label to 1
    std::int64_t iso_scale_ = 1;                      // lattice label -> fqm label

    struct Point {
        std::array<std::int16_t, 6> m;
        std::int32_t norm2p; // m^T adj m = 2p * Q(x)
        std::int8_t label;   // lattice coset label in Z/p
    };
    mutable std::vector<Point> points_;
    mutable std::int64_t enumerated_to_ = -1; // max Q bound enumerated so far
    // Buckets (label, norm, linear-form values) shared by every harmonic degree.
    mutable std::vector<std::map<std::array<std::int64_t, 4>, std::int64_t>> pair_buckets_;
    mutable std::vector<std::map<std::array<std::int64_t, 3>, std::int64_t>> single_buckets_;
    mutable std::int64_t buckets_level_ = -1;
    void ensure_enumerated(std::int64_t qmax) const;
    void ensure_buckets() const;
    void setup_labels(const FQM& fqm);
};

const SeedLattice& seed_lattice_for_field(std::int64_t d);

} // namespace hmf
