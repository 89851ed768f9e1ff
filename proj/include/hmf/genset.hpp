#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hmf/config.hpp"
#include "hmf/hermitian.hpp"
#include "hmf/paramodular.hpp"
#include "hmf/vvspace.hpp"

namespace hmf {

// Polynomial expression over named forms: sum of coefficient * product of
// (name, power) factors. Used for reference cells and relations.
struct PolyTerm {
    Rational coeff;
    std::vector<std::pair<std::string, int>> factors;
};
using PolyExpr = std::vector<PolyTerm>;

PolyExpr parse_poly_expr(const std::string& text);
std::string poly_expr_str(const PolyExpr& e);

struct GenSpec {
    std::string name;
    int weight = 0;
    int kappa = 0;
    bool eisenstein = false;
    Rational scale = Rational(1);
    bool twisted = false;                 // chi-seed (epsilon = -1)
    std::vector<TwistedEntry> tw_seed;    // twisted entries
    std::map<std::int64_t, Rational> q_seed; // scalar avatar entries
    std::int64_t max_exponent = 0;
};

struct CellSpec {
    std::string row;
    std::int64_t ell = 1;
    int order = 0;
    Rational anomaly = Rational(1); // documented deviation of the source cell
    PolyExpr value;                 // empty = printed zero
};

struct DivisorSpec {
    std::string name;
    std::vector<std::pair<int, std::int64_t>> parts; // (multiplicity, D)
};

struct FieldTables {
    std::int64_t disc = 0;
    std::vector<GenSpec> gens;
    std::map<int, std::size_t> vvdims; // kappa -> expected dim
    std::vector<CellSpec> cells;
    std::vector<DivisorSpec> divisors;
    // dimension rows, index 0 unused, k = 1..kmax
    std::vector<int> dims_full, dims_sym, dims_maass;

    const GenSpec& gen(const std::string& name) const;
};

const FieldTables& field_tables(std::int64_t d);

// The named Maass-lift generators, built once per (d, trace bound) from the
// frozen seeds: Eisenstein rows normalized to constant term 1, cusp rows
// pinned in their vv space and scaled by the recorded multiple.
class GeneratorSet {
public:
    std::int64_t disc = 0;
    std::int64_t trace_bound = 0;
    std::vector<std::string> names; // catalog order
    std::map<std::string, HermExp> forms;

    const HermExp& at(const std::string& name) const;
    int weight_of(const std::string& name) const;
};

const GeneratorSet& generator_set(std::int64_t d, std::int64_t trace_bound = 0);

// The pinned vv input of a named generator (unscaled).
VVForm generator_input(std::int64_t d, const std::string& name, std::int64_t jprec = 0);

// vv basis with the frozen expected dimension for this kappa (hard rank gate).
std::vector<VVForm> field_vv_basis(std::int64_t d, int kappa, std::int64_t jprec);

// Evaluates a polynomial expression over a paramodular catalog.
ParamExp eval_poly_param(const PolyExpr& e, const GeneratorCatalog& cat, std::int64_t level,
                         int weight, std::int64_t prec);
// Evaluates over Hermitian generators.
HermExp eval_poly_herm(const PolyExpr& e, const GeneratorSet& gens);

// Outcome of checking one reference cell against the raw transverse slice.
struct CellCheck {
    CellSpec cell;
    bool testable = false; // all lower-order raw slices vanish
    bool passed = false;
    std::string note;
};

// Runs every reference cell of the field: testable cells are compared against
// residual(ell,N) * slice_weight_factor(k,N) * anomaly * printed value.
std::vector<CellCheck> check_reference_cells(std::int64_t d, std::int64_t trace_bound = 0);

} // namespace hmf
