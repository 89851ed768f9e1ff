#include "hmf/genset.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

namespace hmf {

namespace {

std::vector<std::string> tokenize(const std::string& line)
{
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t)
        toks.push_back(t);
    return toks;
}

} // namespace

PolyExpr parse_poly_expr(const std::string& text)
{
    // terms separated by + / - at top level; factors by '*'; powers by '^'
    PolyExpr expr;
    std::string t;
    std::vector<std::pair<std::string, int>> sign_split;
    int sign = 1;
    std::string cur;
    auto flush = [&]() {
        std::string s = cur;
        cur.clear();
        // trim
        while (!s.empty() && s.front() == ' ')
            s.erase(s.begin());
        while (!s.empty() && s.back() == ' ')
            s.pop_back();
        if (s.empty())
            return;
        if (s == "0")
            return;
        PolyTerm term;
        term.coeff = rat(sign);
        std::istringstream fs(s);
        std::string factor;
        while (std::getline(fs, factor, '*')) {
            while (!factor.empty() && factor.front() == ' ')
                factor.erase(factor.begin());
            while (!factor.empty() && factor.back() == ' ')
                factor.pop_back();
            if (factor.empty())
                continue;
            bool numeric = (factor.find_first_not_of("0123456789/") == std::string::npos);
            if (numeric) {
                term.coeff *= parse_rational(factor);
                continue;
            }
            int power = 1;
            auto caret = factor.find('^');
            if (caret != std::string::npos) {
                power = std::stoi(factor.substr(caret + 1));
                factor = factor.substr(0, caret);
            }
            term.factors.emplace_back(factor, power);
        }
        expr.push_back(std::move(term));
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if ((c == '+' || c == '-') && i > 0 && text[i - 1] == ' ') {
            flush();
            sign = (c == '-') ? -1 : 1;
        } else if (c == '-' && i == 0) {
            sign = -1;
        } else {
            cur += c;
        }
    }
    flush();
    return expr;
}

std::string poly_expr_str(const PolyExpr& e)
{
    if (e.empty())
        return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < e.size(); ++i) {
        const auto& t = e[i];
        Rational a = t.coeff;
        if (i == 0) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        bool wrote = false;
        if (a != 1 || t.factors.empty()) {
            os << a;
            wrote = true;
        }
        for (const auto& [name, pw] : t.factors) {
            if (wrote)
                os << "*";
            os << name;
            if (pw != 1)
                os << "^" << pw;
            wrote = true;
        }
    }
    return os.str();
}

const GenSpec& FieldTables::gen(const std::string& name) const
{
    for (const auto& g : gens)
        if (g.name == name)
            return g;
    throw usage_error("no generator named " + name);
}

namespace {

FieldTables load_tables(std::int64_t d)
{
    const Config& cfg = config();
    const FieldConfig& fc = cfg.field(d);
    FieldTables t;
    t.disc = d;

    std::ifstream in(cfg.data_dir + "/" + fc.generators_file);
    if (!in)
        throw usage_error("cannot open generator data for " + std::to_string(d));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        auto toks = tokenize(line);
        if (toks.empty())
            continue;
        if (toks[0] == "gen") {
            GenSpec g;
            std::size_t i = 1;
            g.name = toks[i++];
            while (i < toks.size()) {
                const std::string& key = toks[i];
                if (key == "weight") {
                    g.weight = std::stoi(toks[i + 1]);
                    i += 2;
                } else if (key == "kappa") {
                    g.kappa = std::stoi(toks[i + 1]);
                    i += 2;
                } else if (key == "kind") {
                    g.eisenstein = (toks[i + 1] == "eis");
                    i += 2;
                } else if (key == "scale") {
                    g.scale = parse_rational(toks[i + 1]);
                    i += 2;
                } else if (key == "maxE") {
                    g.max_exponent = std::stoll(toks[i + 1]);
                    i += 2;
                } else if (key == "seed") {
                    g.twisted = (toks[i + 1] == "chi");
                    i += 2;
                    while (i < toks.size() && toks[i].find(':') != std::string::npos) {
                        const std::string& entry = toks[i];
                        auto colon = entry.find(':');
                        std::int64_t E = std::stoll(entry.substr(0, colon));
                        std::string val = entry.substr(colon + 1);
                        if (g.twisted) {
                            auto at = val.find('@');
                            TwistedEntry te;
                            te.exponent = E;
                            te.value = parse_rational(val.substr(0, at));
                            te.argument = std::stoll(val.substr(at + 1));
                            g.tw_seed.push_back(te);
                        } else {
                            g.q_seed[E] = parse_rational(val);
                        }
                        ++i;
                    }
                } else {
                    throw usage_error("unknown generator attribute " + key);
                }
            }
            t.gens.push_back(std::move(g));
        } else if (toks[0] == "vvdim") {
            // vvdim kappa <k> : <dim>
            t.vvdims[std::stoi(toks[2])] = static_cast<std::size_t>(std::stoul(toks[4]));
        } else if (toks[0] == "cell") {
            CellSpec c;
            c.row = toks[1];
            c.ell = std::stoll(toks[2].substr(1));
            c.order = std::stoi(toks[3].substr(1));
            std::size_t i = 4;
            if (toks[i] == "anomaly") {
                c.anomaly = parse_rational(toks[i + 1]);
                i += 2;
            }
            if (toks[i] != ":")
                throw usage_error("malformed cell line: " + line);
            auto colon = line.find(" : ");
            c.value = parse_poly_expr(line.substr(colon + 3));
            t.cells.push_back(std::move(c));
        } else if (toks[0] == "divisor") {
            // divisor <name> : m1 H<D1> + m2 H<D2> ...
            DivisorSpec ds;
            ds.name = toks[1];
            for (std::size_t i = 3; i + 1 < toks.size() + 1; ++i) {
                if (toks[i] == "+")
                    continue;
                if (i + 1 < toks.size() && toks[i + 1][0] == 'H') {
                    ds.parts.emplace_back(std::stoi(toks[i]), std::stoll(toks[i + 1].substr(1)));
                    ++i;
                }
            }
            t.divisors.push_back(std::move(ds));
        }
    }

    // dimension rows
    std::ifstream din(cfg.data_dir + "/" + fc.dims_file);
    if (!din)
        throw usage_error("cannot open dimension data for " + std::to_string(d));
    while (std::getline(din, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0] == "k")
            continue;
        std::vector<int>* row = nullptr;
        if (toks[0] == "full")
            row = &t.dims_full;
        else if (toks[0] == "sym")
            row = &t.dims_sym;
        else if (toks[0] == "maass")
            row = &t.dims_maass;
        else
            continue;
        row->push_back(0); // index 0 unused
        for (std::size_t i = 1; i < toks.size(); ++i)
            row->push_back(std::stoi(toks[i]));
    }
    return t;
}

} // namespace

const FieldTables& field_tables(std::int64_t d)
{
    static std::mutex mu;
    static std::map<std::int64_t, FieldTables> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it == cache.end())
        it = cache.emplace(d, load_tables(d)).first;
    return it->second;
}

std::vector<VVForm> field_vv_basis(std::int64_t d, int kappa, std::int64_t jprec)
{
    const FieldTables& t = field_tables(d);
    if (jprec == 0)
        jprec = config().vv_jprec;
    std::optional<std::size_t> expect;
    auto it = t.vvdims.find(kappa);
    if (it != t.vvdims.end())
        expect = it->second;
    return vv_basis(fqm_for_field(d), rat(kappa), jprec, expect);
}

VVForm generator_input(std::int64_t d, const std::string& name, std::int64_t jprec)
{
    const Config& cfg = config();
    if (jprec == 0)
        jprec = cfg.vv_jprec;
    const FieldTables& t = field_tables(d);
    const GenSpec& g = t.gen(name);
    FQM fqm = fqm_for_field(d);
    if (g.eisenstein)
        return vv_eisenstein(fqm, rat(g.kappa), jprec);
    auto basis = field_vv_basis(d, g.kappa, jprec);
    PinSeed seed;
    seed.max_exponent = g.max_exponent;
    if (g.twisted) {
        seed.twisted = g.tw_seed;
        seed.iso_scale = cfg.field(d).twisted_iso_scale;
    } else {
        QSeries q(1, g.max_exponent + 1);
        for (const auto& [e, v] : g.q_seed)
            q.set_coeff(e, v);
        seed.scalar = q;
    }
    return vv_pin(seed, basis);
}

const HermExp& GeneratorSet::at(const std::string& name) const
{
    auto it = forms.find(name);
    if (it == forms.end())
        throw usage_error("no generator named " + name);
    return it->second;
}

int GeneratorSet::weight_of(const std::string& name) const { return at(name).weight(); }

const GeneratorSet& generator_set(std::int64_t d, std::int64_t trace_bound)
{
    const Config& cfg = config();
    if (trace_bound == 0)
        trace_bound = cfg.trace_bound;
    static std::mutex mu;
    static std::map<std::pair<std::int64_t, std::int64_t>, GeneratorSet> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(d, trace_bound);
    auto hit = cache.find(key);
    if (hit != cache.end())
        return hit->second;

    const FieldTables& t = field_tables(d);
    auto table = herm_index_table(d, trace_bound);
    std::int64_t need = (trace_bound / 2) * (trace_bound - trace_bound / 2) + 2;
    std::int64_t jprec = std::max(cfg.vv_jprec, need);
    GeneratorSet gs;
    gs.disc = d;
    gs.trace_bound = trace_bound;
    for (const auto& g : t.gens) {
        VVForm input = generator_input(d, g.name, jprec);
        HermExp lift = maass_lift(input, g.weight, table);
        if (g.eisenstein) {
            Rational c0 = lift.coeff(0, 0, 0, 0);
            lift = lift.scaled(Rational(1) / c0);
        } else {
            lift = lift.scaled(g.scale);
        }
        lift.set_name(g.name);
        gs.names.push_back(g.name);
        gs.forms.emplace(g.name, std::move(lift));
    }
    return cache.emplace(key, std::move(gs)).first->second;
}

ParamExp eval_poly_param(const PolyExpr& e, const GeneratorCatalog& cat, std::int64_t level,
                         int weight, std::int64_t prec)
{
    ParamExp acc(level, weight, prec);
    for (const auto& term : e) {
        ParamExp prod(level, 0, prec);
        bool started = false;
        for (const auto& [name, pw] : term.factors)
            for (int i = 0; i < pw; ++i) {
                prod = started ? prod * cat.at(name) : cat.at(name);
                started = true;
            }
        if (!started)
            throw usage_error("constant cell values are not supported");
        acc = acc + prod.scaled(term.coeff);
    }
    return acc;
}

HermExp eval_poly_herm(const PolyExpr& e, const GeneratorSet& gens)
{
    if (e.empty())
        throw usage_error("empty polynomial");
    HermExp acc;
    bool acc_started = false;
    for (const auto& term : e) {
        HermExp prod;
        bool started = false;
        for (const auto& [name, pw] : term.factors)
            for (int i = 0; i < pw; ++i) {
                prod = started ? prod * gens.at(name) : gens.at(name);
                started = true;
            }
        if (!started)
            throw usage_error("constant terms are not supported in relations");
        prod = prod.scaled(term.coeff);
        acc = acc_started ? acc + prod : prod;
        acc_started = true;
    }
    return acc;
}

std::vector<CellCheck> check_reference_cells(std::int64_t d, std::int64_t trace_bound)
{
    const Config& cfg = config();
    if (trace_bound == 0)
        trace_bound = cfg.trace_bound;
    const FieldTables& t = field_tables(d);
    const FieldConfig& fc = cfg.field(d);
    const GeneratorSet& gens = generator_set(d, trace_bound);
    std::map<std::int64_t, GeneratorCatalog> cats;
    for (const auto& [ell, lam] : fc.lambda)
        cats.emplace(ell, generator_catalog(ell, trace_bound, cfg.phi11_sign));

    std::vector<CellCheck> out;
    for (const auto& cell : t.cells) {
        CellCheck chk;
        chk.cell = cell;
        auto [lx, ly] = fc.lambda.at(cell.ell);
        const HermExp& row = gens.at(cell.row);
        // testable iff all lower raw slices vanish
        bool quasi = true;
        for (int j = 0; j < cell.order && quasi; ++j)
            quasi = pullback(row, cell.ell, lx, ly, j).is_zero();
        chk.testable = quasi;
        if (!quasi) {
            chk.note = "excluded: lower-order slices do not vanish";
            out.push_back(std::move(chk));
            continue;
        }
        ParamExp raw = pullback(row, cell.ell, lx, ly, cell.order);
        Rational residual = fc.slice_residual.at({cell.ell, cell.order});
        Rational factor =
            residual * slice_weight_factor(row.weight(), cell.order) * cell.anomaly;
        if (cell.value.empty()) {
            chk.passed = raw.is_zero();
            if (!chk.passed)
                chk.note = "printed zero but raw slice is nonzero";
        } else {
            ParamExp want = eval_poly_param(cell.value, cats.at(cell.ell), cell.ell,
                                            row.weight() + cell.order, trace_bound)
                                .scaled(factor);
            chk.passed = (raw == want);
            if (!chk.passed)
                chk.note = "raw slice differs from the normalized reference value";
        }
        if (cell.anomaly != 1)
            chk.note = "documented source anomaly factor " + [&] {
                std::ostringstream os;
                os << cell.anomaly;
                return os.str();
            }();
        out.push_back(std::move(chk));
    }
    return out;
}

} // namespace hmf
