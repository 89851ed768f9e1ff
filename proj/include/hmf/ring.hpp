#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hmf/genset.hpp"
#include "hmf/hilbert.hpp"

namespace hmf {

// Weighted exponent tuple over the generator list (catalog order).
using Monomial = std::vector<int>;

// All monomials of total weight k over the generator weights, in lexicographic
// order of exponent tuples (deterministic).
std::vector<Monomial> monomials_of_weight(const std::vector<int>& weights, int k);

std::string monomial_str(const Monomial& m, const std::vector<std::string>& names);

// Evaluation with caching inside a span computation.
struct MonomialSpan {
    int weight = 0;
    std::vector<Monomial> monomials;
    std::vector<QVec> rows;       // coefficient vectors, pruned columns
    std::size_t rank = 0;
    std::int64_t column_trace = 0; // trace cut used for the columns
};

// Coefficient matrix of all weight-k monomials, with the column window grown
// until the rank stabilizes against the expected dimension (when known).
MonomialSpan monomial_span(const GeneratorSet& gens, int k);

// Nullspace of the monomial matrix at weight k, echelonized: each vector is a
// linear relation among the weight-k monomials, valid at working precision.
struct Relation {
    int weight = 0;
    PolyExpr poly;
};

std::vector<Relation> relation_discover(const GeneratorSet& gens, int k);

// Exact evaluation of the relation over the generator expansions.
bool relation_verify(const Relation& rel, const GeneratorSet& gens);

std::vector<Relation> load_relations(std::int64_t d);

// Expression of a symmetric expansion in the generators at its weight; failure
// certifies the form is outside the span at this precision.
std::optional<PolyExpr> express_in_generators(const HermExp& f, const GeneratorSet& gens);

// Membership of every discovered weight-k relation in the ideal generated by
// the given relations (degreewise linear algebra).
bool relations_generate_at_weight(const std::vector<Relation>& ideal_gens,
                                  const GeneratorSet& gens, int k);

// Hilbert series of the symmetric subring and the full ring, assembled from
// the structure of the reduction argument (level-one and paramodular component
// series, coupled even/odd equations, shifted cusp summands).
struct HilbPair {
    HilbSeries sym;
    HilbSeries full;
};

HilbPair hilb_derive(std::int64_t d);

// Reference closed forms of the same series.
HilbPair hilb_closed_forms(std::int64_t d);

struct DimensionTable {
    std::vector<int> full, sym, maass; // index k, entry 0 unused
};

// Rows full/sym from hilb_derive; the Maass row from vv ranks at weight k-1.
DimensionTable dimension_table(std::int64_t d, int kmax, bool with_maass = true);

} // namespace hmf
