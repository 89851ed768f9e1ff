#include <doctest.h>

#include "hmf/ring.hpp"

using namespace hmf;

TEST_SUITE_BEGIN("ring");

TEST_CASE("monomial spans match the dimension table")
{
    const GeneratorSet& g7 = generator_set(-7);
    auto s4 = monomial_span(g7, 4);
    CHECK(s4.monomials.size() == 1);
    CHECK(s4.rank == 1);
    auto s16 = monomial_span(g7, 16);
    CHECK(s16.rank == 8);
    auto s17 = monomial_span(g7, 17);
    CHECK(s17.rank == 5);

    const GeneratorSet& g11 = generator_set(-11);
    auto s12 = monomial_span(g11, 12);
    CHECK(s12.rank == 8);
}

TEST_CASE("relation discovery")
{
    const GeneratorSet& g7 = generator_set(-7);
    for (int k = 4; k <= 13; ++k)
        CHECK(relation_discover(g7, k).empty());
    auto r17 = relation_discover(g7, 17);
    REQUIRE(r17.size() == 1);
    // the discovered relation is the first stored one up to normalization
    auto stored = load_relations(-7);
    HermExp lhs = eval_poly_herm(r17[0].poly, g7);
    CHECK(lhs.is_zero());
    // compare coefficient patterns: m8*m9 - b7*m10_1 - 12 b7*m10_2
    CHECK(relation_verify(stored[0], g7));

    const GeneratorSet& g11 = generator_set(-11);
    CHECK(!relation_discover(g11, 13).empty());
}

TEST_CASE("stored relations verify and perturbations fail")
{
    const GeneratorSet& g7 = generator_set(-7);
    auto rels = load_relations(-7);
    REQUIRE(rels.size() == 7);
    for (const auto& r : rels)
        CHECK(relation_verify(r, g7));

    // 0 = 0 passes
    Relation zero;
    zero.weight = 10;
    CHECK(relation_verify(zero, g7));

    // perturbing one coefficient (12 -> 13) breaks the first relation
    Relation pert = rels[0];
    for (auto& term : pert.poly)
        if (term.coeff == -12)
            term.coeff = -13;
    CHECK(!relation_verify(pert, g7));
}

TEST_CASE("rank-nullity accounting")
{
    const GeneratorSet& g7 = generator_set(-7);
    const auto& sym = field_tables(-7).dims_sym;
    for (int k = 4; k <= 20; ++k) {
        auto span = monomial_span(g7, k);
        auto rels = relation_discover(g7, k);
        CHECK(span.rank + rels.size() == span.monomials.size());
        CHECK(span.rank == static_cast<std::size_t>(sym[static_cast<std::size_t>(k)]));
    }
}

TEST_CASE("ideal membership at low weights")
{
    const GeneratorSet& g7 = generator_set(-7, config().relation_trace_bound);
    auto rels = load_relations(-7);
    for (int k = 17; k <= 20; ++k)
        CHECK(relations_generate_at_weight(rels, g7, k));
}

TEST_CASE("expression in generators")
{
    const GeneratorSet& g7 = generator_set(-7);
    HermExp e4sq = g7.at("E4") * g7.at("E4");
    auto expr = express_in_generators(e4sq, g7);
    REQUIRE(expr.has_value());
    CHECK(eval_poly_herm(*expr, g7) == e4sq);

    HermExp m8m9 = g7.at("m8") * g7.at("m9");
    auto expr2 = express_in_generators(m8m9, g7);
    REQUIRE(expr2.has_value());
    CHECK(eval_poly_herm(*expr2, g7) == m8m9);

    // a perturbed coefficient leaves the span
    HermExp pert = e4sq;
    HermExp delta(pert.table_ptr(), pert.weight());
    delta.set_coeff(3, 0, 2, 2, rat(1, 11));
    delta.set_coeff(3, -2, 2, 2, rat(1, 11)); // keep it symmetric
    pert = pert + delta;
    if (symmetry_type(pert) == SymmetryType::symmetric)
        CHECK(!express_in_generators(pert, g7).has_value());
}

TEST_CASE("hilbert series derivation")
{
    for (auto d : {-7LL, -11LL}) {
        HilbPair derived = hilb_derive(d);
        HilbPair closed = hilb_closed_forms(d);
        CHECK(derived.sym.equals_rational(closed.sym));
        CHECK(derived.full.equals_rational(closed.full));
        // nonnegativity through t^60
        for (const auto& c : derived.sym.expand(60))
            CHECK(c >= 0);
        for (const auto& c : derived.full.expand(60))
            CHECK(c >= 0);
    }
    // the even-weight coupled equation in resolved form
    HilbSeries sym7 = hilb_derive(-7).sym;
    auto dims = sym7.expand(28);
    CHECK(dims[16] == 8);
    CHECK(dims[28] == 34);
}

TEST_CASE("dimension tables")
{
    for (auto d : {-7LL, -11LL}) {
        const auto& ft = field_tables(d);
        DimensionTable t = dimension_table(d, 40, false);
        for (int k = 1; k <= 40; ++k) {
            auto ks = static_cast<std::size_t>(k);
            CHECK(t.full[ks] == ft.dims_full[ks]);
            CHECK(t.sym[ks] == ft.dims_sym[ks]);
        }
    }
    DimensionTable t7 = dimension_table(-7, 20, true);
    CHECK(t7.maass[20] == 6);
    CHECK(t7.full[20] == 13);
    DimensionTable t11 = dimension_table(-11, 12, true);
    CHECK(t11.maass[12] == 5);
}

TEST_SUITE_END();
