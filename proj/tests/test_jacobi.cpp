#include <doctest.h>

#include "hmf/jacobi.hpp"
#include "hmf/vvspace.hpp"
#include "test_util.hpp"

using namespace hmf;

TEST_SUITE_BEGIN("jacobi");

TEST_CASE("index-1 Eisenstein series")
{
    JacobiForm e41 = jacobi_eisenstein(4, 1, 4);
    CHECK(e41.coeff(0, 0) == 1);
    CHECK(e41.coeff(0, 1) == 0);
    CHECK(e41.coeff(1, 1) == 56);
    CHECK(e41.coeff(1, 0) == 126);
    CHECK(e41.coeff(1, 2) == 1);
    CHECK(e41.is_holomorphic());
    CHECK(e41.satisfies_index_law());

    JacobiForm e61 = jacobi_eisenstein(6, 1, 4);
    CHECK(e61.coeff(1, 1) == -88);
    CHECK_THROWS_AS(jacobi_eisenstein(5, 1, 4), usage_error);
    CHECK_THROWS_AS(jacobi_eisenstein(4, 4, 4), usage_error);
}

TEST_CASE("higher-index Eisenstein series")
{
    JacobiForm e42 = jacobi_eisenstein(4, 2, 6);
    CHECK(e42.coeff(0, 0) == 1);
    CHECK(e42.coeff(0, 1) == 0);
    CHECK(e42.satisfies_index_law());
    CHECK(e42.is_holomorphic());
    JacobiForm e43 = jacobi_eisenstein(4, 3, 6);
    CHECK(e43.coeff(0, 0) == 1);
    CHECK(e43.satisfies_index_law());
    // singular support check: only 4nm >= r^2
    JacobiForm e62 = jacobi_eisenstein(6, 2, 6);
    for (const auto& [k, v] : e62.series().terms())
        CHECK(4 * k.first * 2 - k.second * k.second >= 0);
}

TEST_CASE("named cusp forms")
{
    JacobiForm p101 = jacobi_phi_10_1(6);
    CHECK(p101.coeff(1, 1) == 1);
    CHECK(p101.coeff(1, 0) == -2);
    CHECK(p101.is_cusp());
    CHECK(p101.satisfies_index_law());

    JacobiForm p121 = jacobi_phi_12_1(6);
    CHECK(p121.coeff(1, 1) == 1);
    CHECK(p121.is_cusp());

    JacobiForm p82 = jacobi_phi_8_2(6);
    CHECK(p82.coeff(1, 2) == 1);
    CHECK(p82.is_cusp());
    CHECK(p82.satisfies_index_law());

    // weight/index bookkeeping under multiplication
    JacobiForm prod = p101.mul(p82);
    CHECK(prod.weight() == 18);
    CHECK(prod.index() == 3);

    // the weight-6 index-3 quotient exists (division is exact)
    JacobiForm p63 = jacobi_phi_6_3(6);
    CHECK(p63.weight() == 6);
    CHECK(p63.index() == 3);
    CHECK(p63.is_cusp());

    // division with a nonzero remainder is an error
    CHECK_THROWS_AS(jacobi_div_delta(jacobi_eisenstein(4, 1, 8)), math_error);
}

TEST_CASE("delta division round trip")
{
    testutil::Rng rng(23);
    QSeries delta1 = delta_series(8);
    QSeries delta2(2, 8);
    for (const auto& [k, v] : delta1.terms())
        delta2.set_coeff(k.first, 0, v);
    for (int i = 0; i < 20; ++i) {
        QSeries x = testutil::random_series(rng, 2, 6, 5);
        JacobiForm jx(10, 1, x);
        JacobiForm prod(22, 1, x * delta2);
        JacobiForm back = jacobi_div_delta(prod);
        CHECK(back.series() == x.truncated(back.prec()));
    }
}

TEST_CASE("z-derivative")
{
    JacobiForm e41 = jacobi_eisenstein(4, 1, 5);
    JacobiForm d = jacobi_zderiv(e41);
    CHECK(d.weight() == 5);
    CHECK(d.index() == 1);
    CHECK(d.coeff(1, 1) == e41.coeff(1, 1));
    CHECK(d.coeff(1, 2) == 2 * e41.coeff(1, 2));
    CHECK(d.coeff(1, 0) == 0);
    // parity: an even-in-r form has odd-in-r derivative
    for (const auto& [k, v] : d.series().terms())
        CHECK(d.coeff(k.first, -k.second) == -v);

    // the antisymmetrized derivative combination is a cusp form of weight 11
    JacobiForm p112 = jacobi_phi_11_2(8, 1);
    CHECK(p112.weight() == 11);
    CHECK(!p112.is_zero());
    CHECK(p112.is_cusp());
    for (const auto& [k, v] : p112.series().terms())
        CHECK(8 * k.first - k.second * k.second > 0);
}

TEST_CASE("theta decomposition round trip")
{
    JacobiForm e42 = jacobi_eisenstein(4, 2, 10);
    VVForm vv = jacobi_to_vv(e42, 6);
    CHECK(vv.weight() == rat(7, 2));
    JacobiForm back = vv_to_jacobi(vv, 4, 5);
    CHECK(back.series() == e42.series().truncated(5));

    // the vv Eisenstein over a Jacobi form lattice is the Jacobi Eisenstein series
    VVForm ve = vv_eisenstein(fqm_for_jacobi_index(2), rat(7, 2), 6);
    CHECK(ve == vv);
}

TEST_CASE("bases and dimensions")
{
    CHECK(jacobi_dim(4, 1) == 1);
    CHECK(jacobi_dim(10, 1) == 2);
    CHECK(jacobi_dim(4, 2) == 1);
    CHECK(jacobi_dim(6, 2) == 1);
    CHECK(jacobi_dim(4, 3) == 1);
    CHECK(jacobi_dim(6, 3) == 2);
    for (auto [k, m] : std::initializer_list<std::pair<int, std::int64_t>>{
             {4, 1}, {10, 1}, {12, 1}, {4, 2}, {6, 2}, {8, 2}, {4, 3}, {6, 3}, {8, 3}}) {
        auto basis = jacobi_vv_basis(fqm_for_jacobi_index(m), rat(2 * k - 1, 2), 8);
        CHECK(basis.size() == static_cast<std::size_t>(jacobi_dim(k, m)));
    }
    // Eisenstein series lie in the computed spaces
    auto basis42 = jacobi_vv_basis(fqm_for_jacobi_index(2), rat(7, 2), 8);
    REQUIRE(basis42.size() == 1);
    VVForm e = jacobi_to_vv(jacobi_eisenstein(4, 2, 10), 8);
    Rational scale = e.coeff_n(0, Rational(0)) / basis42[0].coeff_n(0, Rational(0));
    CHECK(basis42[0].scaled(scale) == e);
}

TEST_CASE("index raising")
{
    JacobiForm e41 = jacobi_eisenstein(4, 1, 12);
    JacobiForm raised = jacobi_hecke_v(e41, 2);
    CHECK(raised.index() == 2);
    CHECK(raised.coeff(0, 0) == sigma(2, 3));
    CHECK(raised.satisfies_index_law());
    CHECK(jacobi_hecke_v(e41, 1) == e41);
}

TEST_SUITE_END();
