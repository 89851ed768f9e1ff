#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hmf/rational.hpp"

namespace hmf {

// Frozen conventions and defaults, loaded from the versioned config file.
struct FieldConfig {
    std::int64_t disc = 0;
    std::int64_t twisted_iso_scale = 1;
    std::vector<std::int64_t> twisted_repset;
    // ell -> lambda = (x, y) with lambda = x + y*omega of norm ell
    std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> lambda;
    // residual sign/scale per (ell, N) on top of the weight normalization law
    std::map<std::pair<std::int64_t, int>, Rational> slice_residual;
    std::string generators_file;
    std::string dims_file;
    std::string relations_file;
};

struct Config {
    std::int64_t trace_bound = 10;
    std::int64_t vv_jprec = 27;
    std::int64_t param_prec = 10;
    std::int64_t relation_trace_bound = 8;
    std::int64_t dims_kmax = 40;
    int phi11_sign = 1;
    std::string data_dir;
    std::map<std::int64_t, FieldConfig> fields;

    const FieldConfig& field(std::int64_t d) const;
};

// Loads the config; path resolution: explicit argument, HMF2_CONFIG, then
// <data dir>/config.json with the data dir from HMF2_DATA or the build default.
const Config& config(const std::string& path = "");

// Weight normalization relating a raw order-N transverse slice of a weight-k
// form to the reference quasi-pullback cells:
//   T_N = residual(ell, N) * slice_weight_factor(k, N) * P_N.
Rational slice_weight_factor(int k, int N);

std::string default_data_dir();

} // namespace hmf
