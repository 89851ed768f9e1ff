// Command-line front end: batch computations over the Hermitian modular form
// machinery with deterministic text output.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hmf/config.hpp"
#include "hmf/divisors.hpp"
#include "hmf/genset.hpp"
#include "hmf/ledger.hpp"
#include "hmf/ring.hpp"
#include "hmf/vvspace.hpp"

using namespace hmf;

namespace {

void write_out(const std::string& path, const std::string& content)
{
    if (path.empty())
        return;
    std::ofstream out(path);
    if (!out)
        throw usage_error("cannot open output file " + path);
    out << content;
}

std::int64_t case_to_disc(const std::string& c)
{
    if (c == "d7")
        return -7;
    if (c == "d11")
        return -11;
    throw usage_error("--case must be d7 or d11");
}

int cmd_vv(std::int64_t disc, int weight, std::int64_t prec, const std::string& name,
           bool basis, const std::string& out)
{
    FQM fqm = fqm_for_field(disc);
    std::int64_t jprec = (prec + fqm.order() - 1) / fqm.order() + 1;
    if (basis) {
        auto forms = field_vv_basis(disc, weight, jprec);
        std::ostringstream os;
        for (std::size_t i = 0; i < forms.size(); ++i)
            os << to_ledger(forms[i], "basis" + std::to_string(i));
        std::cout << "basis of rank " << forms.size() << " at weight " << weight << "\n";
        std::cout << os.str();
        write_out(out, os.str());
        return 0;
    }
    VVForm e = name.empty() ? vv_eisenstein(fqm, rat(weight), jprec)
                            : generator_input(disc, name, jprec);
    std::ostringstream os;
    if (e.epsilon() == 1) {
        QSeries series = bb_map(e).truncated(prec);
        std::cout << series.str() << "\n";
        os << to_ledger(series, name.empty() ? "eisenstein" : name);
    } else {
        const auto& fc = config().field(disc);
        TwistedSeries t = twisted_map(e, 1, fc.twisted_iso_scale, fc.twisted_repset);
        bool first = true;
        std::ostringstream line;
        for (const auto& entry : t.entries) {
            if (entry.exponent >= prec)
                break;
            if (!first)
                line << " + ";
            first = false;
            line << entry.value << "*chi(" << entry.argument << ")*q^" << entry.exponent;
        }
        std::cout << (first ? "0" : line.str()) << "\n";
        os << to_ledger(e, name);
    }
    write_out(out, os.str());
    return 0;
}

int cmd_lift(std::int64_t disc, const std::string& name, std::int64_t prec,
             const std::string& out)
{
    const GeneratorSet& gens = generator_set(disc, prec);
    const HermExp& f = gens.at(name);
    std::string ledger = to_ledger(f);
    std::cout << "lift " << name << ": weight " << f.weight() << ", "
              << (symmetry_type(f) == SymmetryType::symmetric ? "symmetric" : "skew")
              << ", trace bound " << prec << "\n";
    if (out.empty())
        std::cout << ledger;
    write_out(out, ledger);
    return 0;
}

int cmd_pullback(std::int64_t disc, const std::string& name, std::int64_t level, int order,
                 std::int64_t prec, bool raw, const std::string& out)
{
    const Config& cfg = config();
    const auto& fc = cfg.field(disc);
    auto it = fc.lambda.find(level);
    if (it == fc.lambda.end())
        throw usage_error("no frozen embedding for this level");
    const GeneratorSet& gens = generator_set(disc, prec);
    const HermExp& f = gens.at(name);
    ParamExp slice = pullback(f, level, it->second.first, it->second.second, order);
    if (!raw) {
        Rational factor = fc.slice_residual.at({level, order}) *
                          slice_weight_factor(f.weight(), order);
        slice = slice.scaled(Rational(1) / factor);
    }
    std::string ledger = to_ledger(slice, name);
    std::cout << "pullback of " << name << " to H" << level << ", order " << order
              << (raw ? " (raw slice)" : " (normalized)") << "\n";
    if (out.empty())
        std::cout << ledger;
    write_out(out, ledger);
    return 0;
}

int cmd_relations(const std::string& action, std::int64_t disc, std::int64_t prec, int weight,
                  const std::string& out)
{
    const GeneratorSet& gens = generator_set(disc, prec);
    std::ostringstream os;
    if (action == "verify") {
        auto rels = load_relations(disc);
        int ok = 0;
        for (const auto& r : rels) {
            bool pass = relation_verify(r, gens);
            ok += pass;
            os << "weight " << r.weight << " : " << poly_expr_str(r.poly) << " : "
               << (pass ? "pass" : "FAIL") << "\n";
        }
        os << ok << "/" << rels.size() << " pass\n";
        std::cout << os.str();
        write_out(out, os.str());
        return ok == static_cast<int>(rels.size()) ? 0 : 1;
    }
    if (action == "discover") {
        auto rels = relation_discover(gens, weight);
        for (const auto& r : rels)
            os << "weight " << r.weight << " : " << poly_expr_str(r.poly) << "\n";
        os << rels.size() << " relation(s) at weight " << weight << "\n";
        std::cout << os.str();
        write_out(out, os.str());
        return 0;
    }
    throw usage_error("relations action must be verify or discover");
}

int cmd_dims(std::int64_t disc, int kmax, bool maass, const std::string& out)
{
    DimensionTable t = dimension_table(disc, kmax, maass);
    const auto& ft = field_tables(disc);
    std::ostringstream os;
    auto row = [&](const char* label, const std::vector<int>& v) {
        os << label;
        for (int k = 1; k <= kmax; ++k)
            os << " " << v[static_cast<std::size_t>(k)];
        os << "\n";
    };
    os << "k    ";
    for (int k = 1; k <= kmax; ++k)
        os << " " << k;
    os << "\n";
    row("full ", t.full);
    row("sym  ", t.sym);
    if (maass)
        row("maass", t.maass);
    bool mismatch = false;
    for (int k = 1; k <= kmax && k < static_cast<int>(ft.dims_full.size()); ++k) {
        auto ks = static_cast<std::size_t>(k);
        mismatch = mismatch || t.full[ks] != ft.dims_full[ks] || t.sym[ks] != ft.dims_sym[ks];
        if (maass)
            mismatch = mismatch || t.maass[ks] != ft.dims_maass[ks];
    }
    os << (mismatch ? "MISMATCH against reference table\n" : "matches reference table\n");
    std::cout << os.str();
    write_out(out, os.str());
    return mismatch ? 1 : 0;
}

int cmd_intersections(std::int64_t disc, std::int64_t m, const std::string& out)
{
    HeegnerData h = heegner_intersection_data(disc, m);
    std::ostringstream os;
    os << "Phi_" << m << " = " << h.phi.str() << "\n";
    os << "pairing sums: " << h.alpha.str() << "\n";
    os << "H1.H" << h.pair_with << " = " << h.on_k1 << " H1 on the level-1 side, "
       << h.on_kpair << " H1 on the level-" << h.pair_with << " side\n";
    std::int64_t a = 12 / (2 * m);
    std::int64_t c = 4 * m;
    QSeries combo = theta_weight_52_combination(a, c, 14);
    bool ok = true;
    for (const auto& [key, v] : h.alpha.terms())
        ok = ok && combo.coeff(key.first) == v;
    os << "weight-5/2 identity (" << a << "*theta' - E2(" << c << "*tau)*theta): "
       << (ok ? "verified" : "MISMATCH") << "\n";
    std::cout << os.str();
    write_out(out, os.str());
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"graded rings of degree-two Hermitian modular forms over Q(sqrt(-7)) and Q(sqrt(-11))"};
    app.require_subcommand(1);

    std::int64_t disc = -7;
    std::string case_name;
    std::int64_t prec = 0;
    int weight = 3;
    int order = 0;
    std::int64_t level = 1;
    std::string out, name, action;
    bool basis = false, raw = false, no_maass = false;
    std::int64_t m = 1;
    int kmax = 20;

    auto add_disc = [&](CLI::App* cmd) {
        cmd->add_option("--disc", disc, "field discriminant (-7 or -11)")
            ->check(CLI::IsMember({-7, -11}));
    };

    auto* vv = app.add_subcommand("vv", "vector-valued input forms (scalar avatars)");
    add_disc(vv);
    vv->add_option("--weight", weight, "weight of the vv space (k-1)");
    vv->add_option("--prec", prec, "scalar exponent bound");
    vv->add_option("--name", name, "named generator input instead of the Eisenstein series");
    vv->add_flag("--basis", basis, "print a basis of the space");
    vv->add_option("--out", out, "write a ledger file");

    auto* lift = app.add_subcommand("lift", "Maass lift of a named generator");
    add_disc(lift);
    lift->add_option("--name", name, "generator name")->required();
    lift->add_option("--prec", prec, "trace bound");
    lift->add_option("--out", out, "write a ledger file");

    auto* pb = app.add_subcommand("pullback", "transverse slice along a Heegner divisor");
    add_disc(pb);
    pb->add_option("--name", name, "generator name")->required();
    pb->add_option("--level", level, "divisor discriminant (1, 2 or 3)");
    pb->add_option("--order", order, "Taylor order N");
    pb->add_option("--prec", prec, "trace bound");
    pb->add_flag("--raw", raw, "skip the frozen normalization");
    pb->add_option("--out", out, "write a ledger file");

    auto* rel = app.add_subcommand("relations", "verify stored relations / discover new ones");
    rel->add_option("action", action, "verify | discover")->required();
    rel->add_option("--case", case_name, "d7 or d11")->required();
    rel->add_option("--prec", prec, "trace bound");
    rel->add_option("--weight", weight, "weight for discovery")->default_val(17);
    rel->add_option("--out", out, "write results");

    auto* dims = app.add_subcommand("dims", "dimension table (full / symmetric / Maass rows)");
    dims->add_option("--case", case_name, "d7 or d11")->required();
    dims->add_option("--kmax", kmax, "largest weight")->check(CLI::Range(1, 40));
    dims->add_flag("--no-maass", no_maass, "skip the Maass row (faster)");
    dims->add_option("--out", out, "write the table");

    auto* inter = app.add_subcommand("intersections", "Heegner intersection data");
    add_disc(inter);
    inter->add_option("--m", m, "divisor discriminant")->check(CLI::IsMember({1, 2, 3}));
    inter->add_option("--out", out, "write results");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Config& cfg = config();
        if (prec == 0)
            prec = vv->parsed() ? 20 : cfg.trace_bound;
        if (!case_name.empty())
            disc = case_to_disc(case_name);
        if (vv->parsed())
            return cmd_vv(disc, weight, prec, name, basis, out);
        if (lift->parsed())
            return cmd_lift(disc, name, prec, out);
        if (pb->parsed())
            return cmd_pullback(disc, name, level, order, prec, raw, out);
        if (rel->parsed())
            return cmd_relations(action, disc, prec, weight, out);
        if (dims->parsed())
            return cmd_dims(disc, kmax, !no_maass, out);
        if (inter->parsed())
            return cmd_intersections(disc, m, out);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const math_error& e) {
        std::cerr << "mathematical failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
