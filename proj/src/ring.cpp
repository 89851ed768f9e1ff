#include "hmf/ring.hpp"

#include <algorithm>
#include <functional>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "hmf/linalg.hpp"
#include "hmf/vvspace.hpp"

namespace hmf {

std::vector<Monomial> monomials_of_weight(const std::vector<int>& weights, int k)
{
    std::vector<Monomial> out;
    Monomial cur(weights.size(), 0);
    // lexicographic enumeration by increasing exponent of the first generator
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (i >= weights.size())
            return;
        for (int e = 0; e * weights[i] <= rem; ++e) {
            cur[i] = e;
            rec(i + 1, rem - e * weights[i]);
        }
        cur[i] = 0;
    };
    rec(0, k);
    return out;
}

std::string monomial_str(const Monomial& m, const std::vector<std::string>& names)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!first)
            os << "*";
        first = false;
        os << names[i];
        if (m[i] > 1)
            os << "^" << m[i];
    }
    return first ? "1" : os.str();
}

namespace {

struct MonomialCache {
    std::map<Monomial, HermExp> cache;
    const GeneratorSet* gens = nullptr;

    const HermExp& eval(const Monomial& m)
    {
        auto it = cache.find(m);
        if (it != cache.end())
            return it->second;
        // split off the first nonzero exponent
        std::size_t i = 0;
        while (i < m.size() && m[i] == 0)
            ++i;
        if (i == m.size())
            throw usage_error("the empty monomial has no expansion");
        Monomial rest = m;
        rest[i] -= 1;
        bool rest_empty = std::all_of(rest.begin(), rest.end(), [](int e) { return e == 0; });
        const HermExp& g = gens->at(gens->names[i]);
        HermExp val = rest_empty ? g : g * eval(rest);
        return cache.emplace(m, std::move(val)).first->second;
    }
};

MonomialCache& monomial_cache(const GeneratorSet& gens)
{
    static std::mutex mu;
    static std::map<std::pair<std::int64_t, std::int64_t>, MonomialCache> caches;
    std::lock_guard<std::mutex> lock(mu);
    auto& c = caches[{gens.disc, gens.trace_bound}];
    c.gens = &gens;
    return c;
}

std::vector<int> generator_weights(const GeneratorSet& gens)
{
    std::vector<int> w;
    for (const auto& n : gens.names)
        w.push_back(gens.at(n).weight());
    return w;
}

int expected_sym_dim(std::int64_t d, int k)
{
    const auto& rows = field_tables(d).dims_sym;
    if (k >= 1 && k < static_cast<int>(rows.size()))
        return rows[static_cast<std::size_t>(k)];
    return -1;
}

} // namespace

MonomialSpan monomial_span(const GeneratorSet& gens, int k)
{
    MonomialSpan span;
    span.weight = k;
    span.monomials = monomials_of_weight(generator_weights(gens), k);
    int expect = expected_sym_dim(gens.disc, k);
    auto& cache = monomial_cache(gens);

    std::vector<const HermExp*> vals;
    vals.reserve(span.monomials.size());
    for (const auto& m : span.monomials)
        vals.push_back(&cache.eval(m));

    // grow the column window until the rank stabilizes (or hits the target)
    std::int64_t cut = std::min<std::int64_t>(4, gens.trace_bound);
    std::size_t rank = 0;
    while (true) {
        std::vector<QVec> rows;
        rows.reserve(vals.size());
        for (auto* v : vals)
            rows.push_back(v->to_qvec_trace(cut));
        rank = rank_of_rows(rows);
        bool done = (expect >= 0 && rank == static_cast<std::size_t>(expect)) ||
                    cut >= gens.trace_bound;
        if (done) {
            span.rows = std::move(rows);
            break;
        }
        cut += 2;
        if (cut > gens.trace_bound)
            cut = gens.trace_bound;
    }
    span.rank = rank;
    span.column_trace = cut;
    return span;
}

std::vector<Relation> relation_discover(const GeneratorSet& gens, int k)
{
    MonomialSpan span = monomial_span(gens, k);
    auto kernel = kernel_of_rows(span.rows);
    std::vector<Relation> out;
    for (const auto& v : kernel) {
        Relation rel;
        rel.weight = k;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0)
                continue;
            PolyTerm term;
            term.coeff = v[i];
            for (std::size_t g = 0; g < gens.names.size(); ++g)
                if (span.monomials[i][g] > 0)
                    term.factors.emplace_back(gens.names[g], span.monomials[i][g]);
            rel.poly.push_back(std::move(term));
        }
        // certify at full precision
        if (!relation_verify(rel, gens))
            throw math_error("discovered nullspace vector fails at full precision");
        out.push_back(std::move(rel));
    }
    return out;
}

bool relation_verify(const Relation& rel, const GeneratorSet& gens)
{
    return eval_poly_herm(rel.poly, gens).is_zero();
}

std::vector<Relation> load_relations(std::int64_t d)
{
    const Config& cfg = config();
    const FieldConfig& fc = cfg.field(d);
    if (fc.relations_file.empty())
        throw usage_error("no stored relation file for this field");
    std::ifstream in(cfg.data_dir + "/" + fc.relations_file);
    if (!in)
        throw usage_error("cannot open relation data");
    std::vector<Relation> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream is(line);
        std::string kw;
        int w;
        std::string colon;
        is >> kw >> w >> colon;
        if (kw != "rel")
            continue;
        Relation rel;
        rel.weight = w;
        auto pos = line.find(" : ");
        rel.poly = parse_poly_expr(line.substr(pos + 3));
        out.push_back(std::move(rel));
    }
    return out;
}

std::optional<PolyExpr> express_in_generators(const HermExp& f, const GeneratorSet& gens)
{
    if (symmetry_type(f) == SymmetryType::neither)
        throw usage_error("expression applies to graded-symmetric expansions");
    int k = f.weight();
    MonomialSpan span = monomial_span(gens, k);
    auto& cache = monomial_cache(gens);
    auto sol = solve_in_span(span.rows, f.to_qvec_trace(span.column_trace));
    if (!sol)
        return std::nullopt;
    // verify at full precision
    HermExp check;
    bool started = false;
    PolyExpr expr;
    for (std::size_t i = 0; i < sol->size(); ++i) {
        if ((*sol)[i] == 0)
            continue;
        HermExp part = cache.eval(span.monomials[i]).scaled((*sol)[i]);
        check = started ? check + part : part;
        started = true;
        PolyTerm term;
        term.coeff = (*sol)[i];
        for (std::size_t g = 0; g < gens.names.size(); ++g)
            if (span.monomials[i][g] > 0)
                term.factors.emplace_back(gens.names[g], span.monomials[i][g]);
        expr.push_back(std::move(term));
    }
    if (!started)
        return f.is_zero() ? std::optional<PolyExpr>(PolyExpr{}) : std::nullopt;
    if (!(check == f)) {
        // the pruned solve was too optimistic: redo on the full window
        std::vector<QVec> rows;
        for (const auto& m : span.monomials)
            rows.push_back(cache.eval(m).to_qvec());
        auto full = solve_in_span(rows, f.to_qvec());
        if (!full)
            return std::nullopt;
        expr.clear();
        for (std::size_t i = 0; i < full->size(); ++i) {
            if ((*full)[i] == 0)
                continue;
            PolyTerm term;
            term.coeff = (*full)[i];
            for (std::size_t g = 0; g < gens.names.size(); ++g)
                if (span.monomials[i][g] > 0)
                    term.factors.emplace_back(gens.names[g], span.monomials[i][g]);
            expr.push_back(std::move(term));
        }
    }
    return expr;
}

bool relations_generate_at_weight(const std::vector<Relation>& ideal_gens,
                                  const GeneratorSet& gens, int k)
{
    // weight-k slice of the ideal: rel * monomial for every generator relation
    auto weights = generator_weights(gens);
    auto target_monos = monomials_of_weight(weights, k);
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < target_monos.size(); ++i)
        index[target_monos[i]] = i;

    auto poly_to_vec = [&](const PolyExpr& poly, const Monomial& shift) {
        QVec v(target_monos.size(), Rational(0));
        for (const auto& term : poly) {
            Monomial m = shift;
            for (const auto& [name, pw] : term.factors) {
                auto it = std::find(gens.names.begin(), gens.names.end(), name);
                m[static_cast<std::size_t>(it - gens.names.begin())] += pw;
            }
            v[index.at(m)] += term.coeff;
        }
        return v;
    };

    std::vector<QVec> ideal_rows;
    for (const auto& rel : ideal_gens) {
        if (rel.weight > k)
            continue;
        for (const auto& m : monomials_of_weight(weights, k - rel.weight))
            ideal_rows.push_back(poly_to_vec(rel.poly, m));
    }
    Echelon ideal_ech(target_monos.size());
    for (const auto& r : ideal_rows)
        ideal_ech.insert(r);

    auto discovered = relation_discover(gens, k);
    for (const auto& rel : discovered) {
        QVec v = poly_to_vec(rel.poly, Monomial(weights.size(), 0));
        QVec copy = v;
        if (ideal_ech.reduce(copy))
            return false; // a discovered relation outside the ideal slice
    }
    return true;
}

namespace {

IntPoly poly_of(std::initializer_list<std::pair<std::int64_t, long>> terms)
{
    IntPoly p;
    for (auto& [e, c] : terms)
        if (c != 0)
            p[e] = c;
    return p;
}

} // namespace

HilbPair hilb_derive(std::int64_t d)
{
    using HS = HilbSeries;
    std::vector<std::int64_t> sp4{4, 6, 10, 12};
    if (d == -7) {
        std::vector<std::int64_t> k2{4, 6, 8, 12};
        HS k2_even = HS::graded_free(k2, poly_of({{0, 1}, {10, 1}}));
        HS k2_odd = HS::graded_free(k2, poly_of({{11, 1}, {21, 1}}));
        HS im_even = HS::graded_free(sp4, poly_of({{18, 1}, {20, 1}})) +
                     HS::graded_free(k2, poly_of({{0, 1}, {10, 2}, {20, 1}}));
        HS r1 = im_even - k2_odd.shifted(7);
        HS r2 = HS::graded_free(sp4, poly_of({{9, 1}})) + k2_odd;
        HS h_even = (r1 + r2.shifted(7)).with_extra_den(14);
        HS h_odd = h_even.shifted(7) + r2;
        HS sym = h_even + h_odd;
        HS skew_even = HS::graded_free(sp4, poly_of({{30, 1}, {32, 1}, {34, 1}})) +
                       h_even.shifted(28);
        HS skew_odd = HS::graded_free(sp4, poly_of({{33, 1}, {35, 1}})) +
                      HS::graded_free(k2, poly_of({{31, 1}, {41, 1}})) + skew_even.shifted(7);
        return {sym, sym + skew_even + skew_odd};
    }
    if (d == -11) {
        std::vector<std::int64_t> k3{4, 6, 6, 12};
        HS k3_odd = HS::graded_free(k3, poly_of({{9, 1}, {11, 1}, {19, 1}}));
        HS im_even = HS::graded_free(sp4, poly_of({{16, 1}, {18, 1}, {20, 1}})) +
                     HS::graded_free(k3, poly_of({{0, 1}, {8, 2}, {10, 2}, {18, 1}}));
        HS r1 = im_even - k3_odd.shifted(5);
        HS r2 = HS::graded_free(sp4, poly_of({{7, 1}, {9, 1}})) + k3_odd;
        HS h_even = (r1 + r2.shifted(5)).with_extra_den(10);
        HS h_odd = h_even.shifted(5) + r2;
        HS sym = h_even + h_odd;
        HS skew_even =
            HS::graded_free(sp4, poly_of({{26, 1}, {28, 1}, {30, 1}, {32, 1}, {34, 1}})) +
            h_even.shifted(24);
        HS skew_odd = HS::graded_free(sp4, poly_of({{31, 1}, {33, 1}, {35, 1}})) +
                      HS::graded_free(k3, poly_of({{27, 1}, {29, 1}, {37, 1}})) +
                      skew_even.shifted(5);
        return {sym, sym + skew_even + skew_odd};
    }
    throw usage_error("unsupported field discriminant");
}

HilbPair hilb_closed_forms(std::int64_t d)
{
    using HS = HilbSeries;
    if (d == -7) {
        HS sym = HS::graded_free(
            {6, 7, 8, 10, 12},
            poly_of({{0, 1}, {4, 1}, {8, 1}, {9, 1}, {10, 1}, {11, 1}, {12, 1}, {13, 1},
                     {14, 1}, {15, 1}, {16, 1}, {18, 1}, {19, 1}, {20, 1}, {22, 1}, {23, 1},
                     {24, 1}, {27, 1}, {30, -1}, {34, -1}}));
        HS full = HS::graded_free(
            {4, 6, 7, 10, 12},
            poly_of({{0, 1}, {8, 1}, {9, 1}, {10, 1}, {11, 1}, {16, 1}, {18, 1}, {19, 1},
                     {24, 1}, {27, 1}, {32, 2}, {33, 1}, {34, 1}, {35, 2}, {42, -1}, {43, 1}}));
        return {sym, full};
    }
    if (d == -11) {
        HS sym = HS::graded_free(
            {4, 6, 6, 10, 12},
            poly_of({{0, 1}, {5, 1}, {7, 1}, {8, 2}, {9, 2}, {10, 2}, {11, 1}, {12, 1},
                     {13, 1}, {14, 1}, {15, 1}, {16, 1}, {17, 1}, {18, 1}, {19, 1}, {23, 1},
                     {29, -1}}));
        HS full = HS::graded_free(
            {4, 5, 6, 6, 12},
            poly_of({{0, 1},  {7, 1},  {8, 2},  {9, 2},  {10, 2},  {11, 1},  {13, -1},
                     {14, -1}, {15, -1}, {17, 1},  {18, 2},  {19, 2},  {20, 1},  {22, -1},
                     {23, -1}, {24, -1}, {25, -1}, {26, 1},  {27, 2},  {28, 2},  {29, 2},
                     {30, 2},  {31, 1},  {36, -1}, {37, 1}}));
        return {sym, full};
    }
    throw usage_error("unsupported field discriminant");
}

DimensionTable dimension_table(std::int64_t d, int kmax, bool with_maass)
{
    DimensionTable t;
    HilbPair h = hilb_derive(d);
    auto full = h.full.expand(kmax);
    auto sym = h.sym.expand(kmax);
    t.full.resize(static_cast<std::size_t>(kmax) + 1);
    t.sym.resize(static_cast<std::size_t>(kmax) + 1);
    t.maass.assign(static_cast<std::size_t>(kmax) + 1, 0);
    for (int k = 0; k <= kmax; ++k) {
        t.full[static_cast<std::size_t>(k)] = static_cast<int>(full[static_cast<std::size_t>(k)].get_si());
        t.sym[static_cast<std::size_t>(k)] = static_cast<int>(sym[static_cast<std::size_t>(k)].get_si());
    }
    if (with_maass) {
        FQM fqm = fqm_for_field(d);
        for (int k = 2; k <= kmax; ++k)
            t.maass[static_cast<std::size_t>(k)] =
                static_cast<int>(vv_basis(fqm, rat(k - 1), 14).size());
    }
    return t;
}

} // namespace hmf
