#include <doctest.h>

#include <complex>
#include <set>

#include "hmf/genset.hpp"
#include "hmf/theta_lattice.hpp"
#include "hmf/vvspace.hpp"

using namespace hmf;

TEST_SUITE_BEGIN("weilrep");

TEST_CASE("discriminant forms")
{
    FQM f7 = fqm_for_field(-7);
    CHECK(f7.order() == 7);
    CHECK(f7.q(0) == 0);
    CHECK(f7.q(1) == rat(1, 7));
    CHECK(f7.q(3) == rat(2, 7));
    // input support pattern: exponents -q(gamma)*7 mod 7 = {3,5,6} and 0
    std::set<std::int64_t> support;
    for (std::int64_t g = 1; g < 7; ++g)
        support.insert(mod_pos(-g * g, 7));
    CHECK(support == std::set<std::int64_t>{3, 5, 6});

    FQM f11 = fqm_for_field(-11);
    std::set<std::int64_t> support11;
    for (std::int64_t g = 1; g < 11; ++g)
        support11.insert(mod_pos(-g * g, 11));
    CHECK(support11 == std::set<std::int64_t>{2, 6, 7, 8, 10});

    CHECK(fqm_for_jacobi_index(1).q(1) == rat(1, 4));
    CHECK(fqm_for_jacobi_index(2).q(1) == rat(1, 8));
    CHECK(fqm_for_jacobi_index(3).q(2) == rat(1, 3));
    CHECK_THROWS_AS(fqm_for_field(-5), usage_error);
}

TEST_CASE("weil matrices")
{
    for (const FQM& fqm : {fqm_for_jacobi_index(1), fqm_for_field(-7), fqm_for_field(-11)}) {
        WeilMatrices w = weil_matrices(fqm);
        std::int64_t L = w.root_order;
        auto n = static_cast<std::size_t>(w.N);
        // T diagonal with e^{-2 pi i Q}
        for (std::size_t g = 0; g < n; ++g) {
            Rational q = fqm.q(static_cast<std::int64_t>(g));
            Rational e = -q * rat(L);
            Cyclo want = Cyclo::root_power(L, e.get_num().get_si());
            CHECK(w.t[g][g] == want);
        }
        // (S T)^3 = S^2 as matrices: with S = s_tilde/sqrt(N),
        // (s_tilde T)^3 = sqrt(N) * s_tilde^2.
        auto st = cyclo_mat_mul(w.s_tilde, w.t);
        auto st3 = cyclo_mat_mul(cyclo_mat_mul(st, st), st);
        auto s2 = cyclo_mat_mul(w.s_tilde, w.s_tilde);
        Cyclo root = sqrt_as_cyclo(w.N, L);
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                ok = ok && (st3[i][j] == root * s2[i][j]);
        CHECK(ok);
        // S^2 = N * e^{pi i sig/2} * (gamma -> -gamma)
        Cyclo phase = Cyclo::root_power(L, mod_pos(fqm.signature(), 4) * (L / 4))
                          .scaled(rat(w.N));
        bool ok2 = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Cyclo want = (static_cast<std::int64_t>(j) ==
                              fqm.neg(static_cast<std::int64_t>(i)))
                                 ? phase
                                 : Cyclo(L);
                ok2 = ok2 && (s2[i][j] == want);
            }
        CHECK(ok2);
        // T has finite order dividing 2N
        auto tn = w.t;
        for (std::int64_t i = 1; i < 2 * w.N; ++i)
            tn = cyclo_mat_mul(tn, w.t);
        bool identity = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                identity = identity &&
                           (tn[i][j] == (i == j ? Cyclo::rational(L, 1) : Cyclo(L)));
        CHECK(identity);
    }
    // index-1 T = diag(1, e^{-pi i/2})
    WeilMatrices w1 = weil_matrices(fqm_for_jacobi_index(1));
    CHECK(w1.t[0][0] == Cyclo::rational(w1.root_order, 1));
    CHECK(w1.t[1][1] == Cyclo::root_power(w1.root_order, -w1.root_order / 4));
}

TEST_CASE("eisenstein rows")
{
    FQM f7 = fqm_for_field(-7);
    VVForm e4in = vv_eisenstein(f7, rat(3), 8);
    QSeries bb = bb_map(e4in);
    CHECK(bb.coeff(0) == 1);
    CHECK(bb.coeff(3) == 14);
    CHECK(bb.coeff(5) == 42);
    CHECK(bb.coeff(6) == 70);
    CHECK(bb.coeff(7) == 42);
    CHECK(bb.coeff(10) == 210);
    CHECK(bb.coeff(1) == 0);

    FQM f11 = fqm_for_field(-11);
    QSeries b4 = bb_map(vv_eisenstein(f11, rat(3), 8));
    CHECK(b4.coeff(2) == 2);
    CHECK(b4.coeff(6) == 20);
    CHECK(b4.coeff(7) == 32);
    CHECK(b4.coeff(8) == 34);
    QSeries b6 = bb_map(vv_eisenstein(f11, rat(5), 8));
    CHECK(b6.coeff(2) == rat(-22, 85));
    CHECK(b6.coeff(6) == rat(-1804, 85));
    CHECK(b6.coeff(7) == rat(-704, 17));

    CHECK_THROWS_AS(vv_eisenstein(f7, rat(4), 8), usage_error);
    CHECK_THROWS_AS(vv_eisenstein(f7, rat(1), 8), usage_error);
}

TEST_CASE("bb map and inverse")
{
    FQM f7 = fqm_for_field(-7);
    QSeries row(1, 11);
    row.set_coeff(3, rat(1));
    row.set_coeff(5, rat(-1));
    row.set_coeff(6, rat(-8));
    row.set_coeff(7, rat(7));
    row.set_coeff(10, rat(8));
    VVForm f = bb_invert(row, f7, rat(7));
    CHECK(f.coeff_n(2, rat(3, 7)) == rat(1, 2));
    CHECK(f.coeff_n(5, rat(3, 7)) == rat(1, 2));
    CHECK(f.coeff_n(0, rat(1)) == 7);
    CHECK(bb_map(f) == row);

    VVForm zero = VVForm::make(f7, rat(3), 5);
    CHECK(bb_map(zero).is_zero());

    // round trip on the d11 Eisenstein row
    FQM f11 = fqm_for_field(-11);
    VVForm e = vv_eisenstein(f11, rat(3), 6);
    CHECK(bb_invert(bb_map(e), f11, rat(3)) == e);

    // wrong parity and inadmissible support are rejected
    CHECK_THROWS_AS(bb_invert(row, f7, rat(6)), usage_error);
    QSeries bad(1, 5);
    bad.set_coeff(1, rat(1)); // 1 is a quadratic residue mod 7
    CHECK_THROWS_AS(bb_invert(bad, f7, rat(3)), math_error);
}

TEST_CASE("twisted map")
{
    const auto& fc = config().field(-7);
    VVForm b7in = generator_input(-7, "b7", 8);
    TwistedSeries t = twisted_map(b7in, 1, fc.twisted_iso_scale, fc.twisted_repset);
    REQUIRE(t.entries.size() >= 4);
    CHECK(t.entries[0] == TwistedEntry{3, rat(1), 5});
    CHECK(t.entries[1] == TwistedEntry{5, rat(3), 3});
    CHECK(t.entries[2] == TwistedEntry{6, rat(2), 1});
    CHECK(t.entries[3] == TwistedEntry{10, rat(-6), 5});

    const auto& fc11 = config().field(-11);
    VVForm b5in = generator_input(-11, "b5", 8);
    TwistedSeries t5 = twisted_map(b5in, 1, fc11.twisted_iso_scale, fc11.twisted_repset);
    REQUIRE(t5.entries.size() >= 5);
    CHECK(t5.entries[0] == TwistedEntry{2, rat(1), 8});
    CHECK(t5.entries[1] == TwistedEntry{6, rat(-5), 7});
    CHECK(t5.entries[2] == TwistedEntry{7, rat(4), 2});
    CHECK(t5.entries[3] == TwistedEntry{8, rat(10), 6});
    CHECK(t5.entries[4] == TwistedEntry{10, rat(-5), 1});

    VVForm zero = VVForm::make(fqm_for_field(-7), rat(6), 5);
    CHECK(twisted_map(zero, 1, 6, fc.twisted_repset).entries.empty());
    CHECK_THROWS_AS(twisted_map(b7in, 2, 6, fc.twisted_repset), usage_error);
    CHECK_THROWS_AS(twisted_map(vv_eisenstein(fqm_for_field(-7), rat(3), 5), 1, 6,
                                fc.twisted_repset),
                    usage_error);
}

TEST_CASE("serre derivative")
{
    FQM f7 = fqm_for_field(-7);
    VVForm zero = VVForm::make(f7, rat(3), 8);
    CHECK(zero.serre_derivative().is_zero());

    VVForm e3 = vv_eisenstein(f7, rat(3), 8);
    VVForm de3 = e3.serre_derivative();
    CHECK(de3.weight() == 5);
    CHECK(de3.coeff_n(0, Rational(0)) == rat(-3, 12));
    CHECK(vv_eisenstein(f7, rat(5), 8).weight2() + 4 == de3.weight2() + 4);
    CHECK(e3.weight() + 2 == de3.weight());
}

TEST_CASE("basis ranks match the Maass dimensions")
{
    for (auto d : {-7LL, -11LL}) {
        const auto& dims = field_tables(d).dims_maass;
        FQM fqm = fqm_for_field(d);
        for (int k = 2; k <= 20; ++k) {
            auto basis = vv_basis(fqm, rat(k - 1), 14);
            CHECK(basis.size() == static_cast<std::size_t>(dims[static_cast<std::size_t>(k)]));
        }
    }
}

TEST_CASE("basis elements respect the admissible support")
{
    // scalar avatars live on multiples of p and non-residues mod p
    FQM f7 = fqm_for_field(-7);
    std::set<std::int64_t> admissible{0, 3, 5, 6};
    for (int kappa : {7, 8, 9, 10}) {
        for (const auto& f : vv_basis(f7, rat(kappa), 10)) {
            if (f.epsilon() == 1) {
                QSeries bb = bb_map(f);
                for (const auto& [k, v] : bb.terms())
                    CHECK(admissible.count(mod_pos(k.first, 7)) == 1);
            } else {
                const auto& fc = config().field(-7);
                for (const auto& e :
                     twisted_map(f, 1, fc.twisted_iso_scale, fc.twisted_repset).entries)
                    CHECK(admissible.count(mod_pos(e.exponent, 7)) == 1);
            }
            for (std::int64_t g = 0; g < 7; ++g)
                for (const auto& [j, v] : f.component(g))
                    CHECK(v != 0); // no stored zeros
        }
    }
}

TEST_CASE("pinning")
{
    // pins reproduce the full printed rows (overdetermination is enforced inside)
    for (auto d : {-7LL, -11LL}) {
        const auto& tables = field_tables(d);
        const auto& fc = config().field(d);
        for (const auto& g : tables.gens) {
            VVForm f = generator_input(d, g.name, 8);
            if (g.eisenstein || !g.twisted) {
                QSeries bb = bb_map(f);
                if (g.eisenstein) {
                    CHECK(bb.coeff(0) == 1);
                } else {
                    for (const auto& [e, v] : g.q_seed)
                        CHECK(bb.coeff(e) == v);
                }
            } else {
                TwistedSeries t = twisted_map(f, 1, fc.twisted_iso_scale, fc.twisted_repset);
                for (const auto& want : g.tw_seed) {
                    bool found = false;
                    for (const auto& e : t.entries)
                        if (e.exponent == want.exponent) {
                            CHECK(e == want);
                            found = true;
                        }
                    CHECK(found);
                }
            }
        }
    }

    // zero seed pins the zero form
    auto basis = field_vv_basis(-7, 7, 8);
    PinSeed zero_seed;
    zero_seed.scalar = QSeries(1, 11);
    zero_seed.max_exponent = 10;
    CHECK(vv_pin(zero_seed, basis).is_zero());

    // a seed window too short to determine the combination is rejected
    PinSeed shorty;
    shorty.scalar = QSeries(1, 3);
    shorty.max_exponent = 2;
    CHECK_THROWS_AS(vv_pin(shorty, basis), math_error);

    // an inconsistent seed is rejected
    PinSeed bad;
    QSeries row(1, 11);
    row.set_coeff(3, rat(1));
    row.set_coeff(5, rat(-1));
    row.set_coeff(6, rat(-8));
    row.set_coeff(7, rat(7));
    row.set_coeff(10, rat(9)); // corrupted tail
    bad.scalar = row;
    bad.max_exponent = 10;
    CHECK_THROWS_AS(vv_pin(bad, basis), math_error);
}

TEST_CASE("theta seeds agree with the Eisenstein route")
{
    for (auto d : {-7LL, -11LL}) {
        FQM fqm = fqm_for_field(d);
        const auto& lat = seed_lattice_for_field(d);
        VVForm theta = lat.theta(8, fqm);
        VVForm eis = vv_eisenstein(fqm, rat(3), 8);
        // dim M_3 = 1: the two constructions are proportional; compare normalized
        Rational scale = theta.coeff_n(0, Rational(0));
        CHECK(theta.scaled(Rational(1) / scale) == eis);
    }
}

static std::vector<std::complex<double>> eval_vv(const VVForm& f, std::complex<double> tau)
{
    const double pi = 3.14159265358979323846;
    std::vector<std::complex<double>> out(static_cast<std::size_t>(f.fqm().order()), 0.0);
    for (std::int64_t g = 0; g < f.fqm().order(); ++g)
        for (const auto& [j, v] : f.component(g)) {
            double n = double(j) + f.alpha(g).get_d();
            out[static_cast<std::size_t>(g)] +=
                v.get_d() * std::exp(std::complex<double>(0, 2 * pi) * n * tau);
        }
    return out;
}

TEST_CASE("finite modularity under S at sample points")
{
    // The pinned data satisfies F(-1/tau) = tau^kappa S F(tau) with the stored
    // matrices (floating evaluation is used only here, never in production).
    using cplx = std::complex<double>;
    for (auto d : {-7LL, -11LL}) {
        FQM fqm = fqm_for_field(d);
        auto w = weil_matrices(fqm);
        auto n = static_cast<std::size_t>(w.N);
        for (int kappa : {3, d == -7 ? 6 : 4}) {
            auto basis = vv_basis(fqm, rat(kappa), 24);
            for (const auto& f : basis) {
                for (cplx tau : {cplx(0.21, 1.13), cplx(-0.4, 0.9), cplx(0.05, 1.4)}) {
                    auto ft = eval_vv(f, tau);
                    auto fs = eval_vv(f, -1.0 / tau);
                    cplx phase = std::pow(tau, double(kappa));
                    double worst = 0, scale = 1e-30;
                    for (std::size_t b = 0; b < n; ++b) {
                        cplx acc = 0;
                        for (std::size_t g = 0; g < n; ++g)
                            acc += w.s_tilde[b][g].to_complex() /
                                   std::sqrt(double(w.N)) * ft[g];
                        cplx want = phase * acc;
                        worst = std::max(worst, std::abs(fs[b] - want));
                        scale = std::max(scale, std::abs(want));
                    }
                    CHECK(worst / scale < 1e-8);
                }
            }
        }
    }
}

TEST_CASE("nearly holomorphic bases")
{
    FQM f7 = fqm_for_field(-7);
    auto nearly = vv_basis(f7, rat(-1), 8, std::nullopt, 1);
    CHECK(!nearly.empty());
    for (const auto& f : nearly) {
        CHECK(!f.is_holomorphic());
        CHECK(f.weight() == -1);
    }
}

TEST_SUITE_END();
