// Acceptance suite: runs every exit criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exact rational arithmetic means
// the tolerance is exact equality unless stated otherwise.
#include <chrono>
#include <set>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "hmf/divisors.hpp"
#include "hmf/genset.hpp"
#include "hmf/ledger.hpp"
#include "hmf/ring.hpp"

using namespace hmf;

namespace {

int failures = 0;

void run(int number, const std::string& label, const std::function<bool(std::string&)>& body)
{
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label << " ("
              << ms << " ms)";
    if (!detail.empty())
        std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok)
        ++failures;
}

bool check_series(const QSeries& got,
                  std::initializer_list<std::pair<std::int64_t, std::int64_t>> want,
                  std::int64_t zero_upto, std::string& detail)
{
    std::set<std::int64_t> printed;
    for (auto [e, v] : want) {
        printed.insert(e);
        if (got.coeff(e) != v) {
            detail = "coefficient mismatch at exponent " + std::to_string(e);
            return false;
        }
    }
    for (std::int64_t e = 0; e <= zero_upto; ++e)
        if (!printed.count(e) && got.coeff(e) != 0) {
            detail = "expected zero at exponent " + std::to_string(e);
            return false;
        }
    return true;
}

} // namespace

int main()
{
    const Config& cfg = config();

    run(1, "weight-5/2 identities to q^13", [&](std::string& detail) {
        QSeries c1 = theta_weight_52_combination(6, 4, 14);
        QSeries c2 = theta_weight_52_combination(3, 8, 14);
        QSeries c3 = theta_weight_52_combination(2, 12, 14);
        return check_series(c1, {{0, -1}, {1, 10}, {4, 70}, {5, 48}, {8, 120}, {9, 250}}, 9,
                            detail) &&
               check_series(c2, {{0, -1}, {1, 4}, {4, 22}, {8, 24}, {9, 100}}, 9, detail) &&
               check_series(c3, {{0, -1}, {1, 2}, {4, 14}, {9, 34}, {12, 24}}, 12, detail);
    });

    run(2, "input-form golden data (all printed coefficients of every row)",
        [&](std::string& detail) {
            for (auto d : {-7LL, -11LL}) {
                const auto& tables = field_tables(d);
                const auto& fc = cfg.field(d);
                for (const auto& g : tables.gens) {
                    VVForm f = generator_input(d, g.name, 8);
                    if (!g.twisted) {
                        QSeries bb = bb_map(f);
                        if (g.eisenstein && bb.coeff(0) != 1) {
                            detail = g.name + ": constant term";
                            return false;
                        }
                        for (const auto& [e, v] : g.q_seed)
                            if (bb.coeff(e) != v) {
                                detail = g.name + ": exponent " + std::to_string(e);
                                return false;
                            }
                    } else {
                        TwistedSeries t =
                            twisted_map(f, 1, fc.twisted_iso_scale, fc.twisted_repset);
                        for (const auto& want : g.tw_seed) {
                            bool ok = false;
                            for (const auto& e : t.entries)
                                if (e.exponent == want.exponent)
                                    ok = (e == want);
                            if (!ok) {
                                detail = g.name + ": exponent " +
                                         std::to_string(want.exponent);
                                return false;
                            }
                        }
                    }
                }
            }
            return true;
        });

    run(3, "Maass-row dimensions, 1 <= k <= 20, both fields", [&](std::string& detail) {
        for (auto d : {-7LL, -11LL}) {
            const auto& dims = field_tables(d).dims_maass;
            FQM fqm = fqm_for_field(d);
            for (int k = 1; k <= 20; ++k) {
                std::size_t rank =
                    (k < 2) ? 0 : vv_basis(fqm, rat(k - 1), 14).size();
                if (rank != static_cast<std::size_t>(dims[static_cast<std::size_t>(k)])) {
                    detail = "d=" + std::to_string(d) + " k=" + std::to_string(k);
                    return false;
                }
            }
        }
        return true;
    });

    run(4, "pullback golden data (quasi-regime cells, frozen normalizations)",
        [&](std::string& detail) {
            std::ostringstream excluded;
            for (auto d : {-7LL, -11LL}) {
                auto checks = check_reference_cells(d);
                int tested = 0;
                for (const auto& c : checks) {
                    if (!c.testable) {
                        excluded << "  excluded (non-quasi): d=" << d << " " << c.cell.row
                                 << " H" << c.cell.ell << " N" << c.cell.order << "\n";
                        continue;
                    }
                    ++tested;
                    if (!c.passed) {
                        detail = "d=" + std::to_string(d) + " " + c.cell.row + " H" +
                                 std::to_string(c.cell.ell) + " N" +
                                 std::to_string(c.cell.order) + ": " + c.note;
                        return false;
                    }
                    if (c.cell.anomaly != 1)
                        excluded << "  annotated source anomaly: d=" << d << " " << c.cell.row
                                 << " H" << c.cell.ell << " N" << c.cell.order
                                 << " (factor " << c.cell.anomaly << ")\n";
                }
                if (tested == 0) {
                    detail = "no testable cells";
                    return false;
                }
            }
            std::cout << excluded.str();
            return true;
        });

    run(5, "divisor orders of the distinguished products", [&](std::string& detail) {
        const GeneratorSet& g7 = generator_set(-7);
        const GeneratorSet& g11 = generator_set(-11);
        bool ok = vanishing_order(g7.at("b7"), 1, 1, 0, 6) == 3 &&
                  vanishing_order(g7.at("b7"), 2, 0, 1, 6) == 1 &&
                  vanishing_order(g11.at("b5"), 1, 1, 0, 6) == 5 &&
                  vanishing_order(g11.at("b5"), 3, 0, 1, 6) == 1;
        if (!ok)
            detail = "an order differs from 3H1+H2 / 5H1+H3";
        return ok;
    });

    run(6, "seven relations at trace bound 10, with perturbation control",
        [&](std::string& detail) {
            const GeneratorSet& g7 = generator_set(-7, 10);
            auto rels = load_relations(-7);
            if (rels.size() != 7) {
                detail = "expected seven stored relations";
                return false;
            }
            for (std::size_t i = 0; i < rels.size(); ++i)
                if (!relation_verify(rels[i], g7)) {
                    detail = "relation " + std::to_string(i + 1) + " fails";
                    return false;
                }
            // perturbing any single coefficient must fail
            for (std::size_t i = 0; i < rels.size(); ++i) {
                Relation pert = rels[i];
                pert.poly[0].coeff += rat(1, 3);
                if (relation_verify(pert, g7)) {
                    detail = "perturbed relation " + std::to_string(i + 1) + " still passes";
                    return false;
                }
            }
            return true;
        });

    run(7, "relation completeness for k <= 24 (rank accounting + ideal membership)",
        [&](std::string& detail) {
            const GeneratorSet& g7 = generator_set(-7, cfg.relation_trace_bound);
            const auto& sym = field_tables(-7).dims_sym;
            auto rels = load_relations(-7);
            for (int k = 4; k <= 24; ++k) {
                auto span = monomial_span(g7, k);
                if (span.rank != static_cast<std::size_t>(sym[static_cast<std::size_t>(k)])) {
                    detail = "rank at k=" + std::to_string(k);
                    return false;
                }
                auto found = relation_discover(g7, k);
                if (span.rank + found.size() != span.monomials.size()) {
                    detail = "rank-nullity at k=" + std::to_string(k);
                    return false;
                }
                if (!relations_generate_at_weight(rels, g7, k)) {
                    detail = "a weight-" + std::to_string(k) +
                             " relation is outside the stored ideal";
                    return false;
                }
            }
            return true;
        });

    run(8, "Hilbert series: closed forms and dimension tables to k = 40",
        [&](std::string& detail) {
            for (auto d : {-7LL, -11LL}) {
                HilbPair derived = hilb_derive(d);
                HilbPair closed = hilb_closed_forms(d);
                if (!derived.sym.equals_rational(closed.sym) ||
                    !derived.full.equals_rational(closed.full)) {
                    detail = "closed form mismatch for d=" + std::to_string(d);
                    return false;
                }
                const auto& ft = field_tables(d);
                DimensionTable t = dimension_table(d, 40, false);
                for (int k = 1; k <= 40; ++k) {
                    auto ks = static_cast<std::size_t>(k);
                    if (t.full[ks] != ft.dims_full[ks] || t.sym[ks] != ft.dims_sym[ks]) {
                        detail = "table cell d=" + std::to_string(d) + " k=" + std::to_string(k);
                        return false;
                    }
                }
            }
            return true;
        });

    run(9, "restriction relation suite with recorded scalars", [&](std::string& detail) {
        auto c3 = generator_catalog(3, 10, cfg.phi11_sign);
        auto prop = [&](const ParamExp& a, const ParamExp& b, const Rational& scalar) {
            return a == b.scaled(scalar);
        };
        bool ok =
            prop(c3.at("phi8") * c3.at("phi8"), c3.at("phi6") * c3.at("phi10"), rat(1)) &&
            prop(c3.at("phi6") * c3.at("phi11"), c3.at("phi8") * c3.at("phi9"), rat(1)) &&
            prop(c3.at("phi8") * c3.at("phi11"), c3.at("phi9") * c3.at("phi10"), rat(1));
        if (!ok) {
            detail = "a level-3 restriction relation fails";
            return false;
        }
        // The printed weight-20 relation needs a documented correction: with the
        // generators pinned by the source's own restriction cells, the exact
        // identity is phi10^2 = phi8 phi12 - 2592 phi6^2 phi8 (the defect lies
        // in <phi6> and <phi8>, so the ideal conclusions are unchanged).
        ParamExp corrected = c3.at("phi8") * c3.at("phi12") -
                             (c3.at("phi6") * c3.at("phi6") * c3.at("phi8")).scaled(rat(2592));
        if (!(c3.at("phi10") * c3.at("phi10") == corrected)) {
            detail = "the corrected weight-20 identity fails";
            return false;
        }
        std::cout << "  documented deviation: phi10^2 = phi8*phi12 - 2592*phi6^2*phi8 "
                     "(printed without the correction term)\n";
        auto c2 = generator_catalog(2, 10, cfg.phi11_sign);
        ParamExp target = c2.at("phi10") * c2.at("phi10");
        std::vector<ParamExp> basis{
            c2.at("phi8") * c2.at("E4") * c2.at("E4") * c2.at("E4"),
            c2.at("phi8") * c2.at("E6") * c2.at("E6"),
            c2.at("phi8") * c2.at("E4") * c2.at("phi8"),
            c2.at("phi8") * c2.at("phi12"),
        };
        if (!param_linear_solve(target, basis)) {
            detail = "phi10^2 is not a multiple of phi8 at this precision";
            return false;
        }
        return true;
    });

    run(10, "diagonal orders", [&](std::string& detail) {
        auto c1 = generator_catalog(1, 10, cfg.phi11_sign);
        auto c2 = generator_catalog(2, 10, cfg.phi11_sign);
        auto c3 = generator_catalog(3, 10, cfg.phi11_sign);
        auto is = [&](const ParamExp& f, int want) { return f.diagonal_order(8) == want; };
        bool ok = is(c1.at("psi10"), 2) && is(c2.at("phi8"), 4) && is(c2.at("phi10"), 2) &&
                  is(c2.at("phi11"), 1) && is(c3.at("phi6"), 6) && is(c3.at("phi9"), 3);
        if (!ok)
            detail = "a diagonal order differs";
        return ok;
    });

    run(11, "intersection consistency (double zero along the diagonal, quasi regime)",
        [&](std::string& detail) {
            // Checked on every slice up to the first nonvanishing order (N <= 4).
            // Beyond that order the statement is not true of the reference data
            // itself: the printed third pullback of the weight-9 row is a
            // multiple of the weight-12 lift, which has no diagonal zero.
            const GeneratorSet& gens = generator_set(-7);
            for (const auto& name : {"b7", "m9", "m10_2"}) {
                if (!pullback(gens.at(name), 2, 0, 1, 0).is_zero()) {
                    detail = std::string(name) + " does not vanish on the second divisor";
                    return false;
                }
                auto h1 = vanishing_order(gens.at(name), 1, 1, 0, 6);
                if (!h1) {
                    detail = std::string(name) + " has no slice data";
                    return false;
                }
                for (int N = 0; N <= std::min(*h1, 4); ++N) {
                    ParamExp slice = pullback(gens.at(name), 1, 1, 0, N);
                    if (slice.is_zero())
                        continue;
                    if (slice.diagonal_order(1).has_value()) {
                        detail = std::string(name) + " slice N=" + std::to_string(N) +
                                 " has diagonal order < 2";
                        return false;
                    }
                }
            }
            std::cout << "  note: restricted to the quasi regime; the source's own "
                         "P3 cell of the weight-9 row (72*psi12) has no diagonal zero\n";
            return true;
        });

    run(12, "randomized property suites (1000 cases each)", [&](std::string& detail) {
        struct Rng {
            std::uint64_t s = 0x2545F4914F6CDD1DULL;
            std::uint64_t next()
            {
                s ^= s << 13;
                s ^= s >> 7;
                s ^= s << 17;
                return s;
            }
            std::int64_t range(std::int64_t lo, std::int64_t hi)
            {
                return lo + static_cast<std::int64_t>(next() %
                                                      static_cast<std::uint64_t>(hi - lo + 1));
            }
        } rng;
        auto random_series = [&](int vars, std::int64_t prec, int terms) {
            QSeries f(vars, prec);
            for (int i = 0; i < terms; ++i)
                f.set_coeff(rng.range(0, prec - 1), vars == 2 ? rng.range(-3, 3) : 0,
                            rat(rng.range(-9, 9), rng.range(1, 4)));
            return f;
        };
        // ring axioms, division round trips, ledger round trips
        for (int i = 0; i < 1000; ++i) {
            QSeries a = random_series(1, 9, 4);
            QSeries b = random_series(1, 9, 4);
            QSeries c = random_series(1, 9, 4);
            if (!(a * b == b * a) || !((a * b) * c == a * (b * c)) ||
                !(a * (b + c) == a * b + a * c)) {
                detail = "ring axiom failure";
                return false;
            }
            QSeries unit = b;
            unit.set_coeff(0, rat(rng.range(1, 5)));
            QSeries q = ps_div(a, unit);
            if (!((q * unit).truncated(q.prec()) == a.truncated(q.prec()))) {
                detail = "division left-inverse failure";
                return false;
            }
            QSeries f = random_series(rng.range(0, 1) ? 1 : 2, 9, 4);
            if (!(qseries_from_ledger(to_ledger(f)) == f)) {
                detail = "ledger round-trip failure";
                return false;
            }
        }
        // restriction homomorphism and symmetry sign rule on random scaled
        // generator products at a small trace bound
        const GeneratorSet& gens = generator_set(-7, 5);
        auto random_gen = [&]() -> const HermExp& {
            return gens.at(gens.names[static_cast<std::size_t>(
                rng.range(0, static_cast<std::int64_t>(gens.names.size()) - 1))]);
        };
        for (int i = 0; i < 1000; ++i) {
            HermExp f = random_gen().scaled(rat(rng.range(-4, 4), rng.range(1, 3)));
            HermExp g = random_gen().scaled(rat(rng.range(-4, 4), rng.range(1, 3)));
            HermExp fg = f * g;
            if (!(pullback(fg, 2, 0, 1, 0) ==
                  pullback(f, 2, 0, 1, 0) * pullback(g, 2, 0, 1, 0))) {
                detail = "restriction homomorphism failure";
                return false;
            }
            if (symmetry_type(fg) == SymmetryType::neither) {
                detail = "symmetry sign rule failure";
                return false;
            }
        }
        // quasi-slice multiplicativity with the binomial factor on random
        // multiples of the vanishing generators
        std::vector<std::string> vanish{"b7", "m9", "m10_2", "m8"};
        const GeneratorSet& g7 = generator_set(-7, 6);
        for (int i = 0; i < 1000; ++i) {
            const HermExp& f0 = g7.at(vanish[static_cast<std::size_t>(rng.range(0, 3))]);
            const HermExp& g0 = g7.at(vanish[static_cast<std::size_t>(rng.range(0, 3))]);
            HermExp f = f0.scaled(rat(rng.range(1, 9), rng.range(1, 3)));
            HermExp g = g0.scaled(rat(-9, rng.range(1, 3)) / rat(rng.range(1, 9)));
            auto A = vanishing_order(f, 1, 1, 0, 6);
            auto B = vanishing_order(g, 1, 1, 0, 6);
            if (!A || !B) {
                detail = "unexpected nonvanishing generator";
                return false;
            }
            ParamExp lhs = pullback(f * g, 1, 1, 0, *A + *B);
            ParamExp rhs =
                (pullback(f, 1, 1, 0, *A) * pullback(g, 1, 1, 0, *B))
                    .scaled(Rational(binomial(static_cast<unsigned long>(*A + *B),
                                              static_cast<unsigned long>(*A))));
            if (!(lhs == rhs)) {
                detail = "quasi-slice multiplicativity failure";
                return false;
            }
        }
        return true;
    });

    std::cout << (failures ? "ACCEPTANCE: FAILED" : "ACCEPTANCE: ALL CRITERIA PASSED") << "\n";
    return failures ? 1 : 0;
}
