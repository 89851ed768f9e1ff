#include "hmf/ledger.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace hmf {

namespace {

constexpr const char* kVersion = "1";

struct Parsed {
    std::map<std::string, std::string> header;
    std::vector<std::vector<std::string>> records;
};

Parsed parse(const std::string& text)
{
    Parsed p;
    std::istringstream in(text);
    std::string line;
    bool body = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        if (line == "begin") {
            body = true;
            continue;
        }
        if (line == "end")
            break;
        if (!body) {
            auto colon = line.find(": ");
            if (colon == std::string::npos)
                throw usage_error("malformed ledger header line: " + line);
            p.header[line.substr(0, colon)] = line.substr(colon + 2);
        } else {
            std::istringstream ls(line);
            std::vector<std::string> toks;
            std::string t;
            while (ls >> t)
                toks.push_back(t);
            p.records.push_back(std::move(toks));
        }
    }
    return p;
}

std::string header_get(const Parsed& p, const std::string& key)
{
    auto it = p.header.find(key);
    if (it == p.header.end())
        throw usage_error("ledger is missing header field " + key);
    return it->second;
}

void emit_header(std::ostringstream& os, const std::string& kind, const std::string& name)
{
    os << "format-version: " << kVersion << "\n";
    os << "kind: " << kind << "\n";
    if (!name.empty())
        os << "name: " << name << "\n";
}

std::string rat_str(const Rational& v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

std::string ledger_kind(const std::string& text) { return header_get(parse(text), "kind"); }

std::string to_ledger(const QSeries& f, const std::string& name)
{
    std::ostringstream os;
    emit_header(os, "qseries", name);
    os << "vars: " << f.vars() << "\n";
    os << "prec: " << f.prec() << "\n";
    os << "begin\n";
    for (const auto& [k, v] : f.terms()) {
        os << k.first;
        if (f.vars() == 2)
            os << " " << k.second;
        os << " : " << rat_str(v) << "\n";
    }
    os << "end\n";
    return os.str();
}

QSeries qseries_from_ledger(const std::string& text)
{
    Parsed p = parse(text);
    if (header_get(p, "kind") != "qseries")
        throw usage_error("ledger kind mismatch");
    int vars = std::stoi(header_get(p, "vars"));
    std::int64_t prec = std::stoll(header_get(p, "prec"));
    QSeries f(vars, prec);
    for (const auto& r : p.records) {
        if (vars == 1)
            f.set_coeff(std::stoll(r[0]), parse_rational(r[2]));
        else
            f.set_coeff(std::stoll(r[0]), std::stoll(r[1]), parse_rational(r[3]));
    }
    return f;
}

std::string to_ledger(const VVForm& f, const std::string& name)
{
    std::ostringstream os;
    emit_header(os, "vvform", name);
    const FQM& q = f.fqm();
    if (q.signature() == 2)
        os << "fqm: field " << -q.order() << "\n";
    else
        os << "fqm: jacobi " << q.order() / 2 << "\n";
    os << "weight2: " << f.weight2() << "\n";
    os << "jprec: " << f.jprec() << "\n";
    os << "begin\n";
    for (std::int64_t g = 0; g < q.order(); ++g) {
        Rational a = f.alpha(g);
        for (const auto& [j, v] : f.component(g)) {
            Rational n = Rational(static_cast<long>(j)) + a;
            os << g << " " << rat_str(n) << " : " << rat_str(v) << "\n";
        }
    }
    os << "end\n";
    return os.str();
}

VVForm vvform_from_ledger(const std::string& text)
{
    Parsed p = parse(text);
    if (header_get(p, "kind") != "vvform")
        throw usage_error("ledger kind mismatch");
    std::istringstream fs(header_get(p, "fqm"));
    std::string family;
    std::int64_t param;
    fs >> family >> param;
    FQM q = (family == "field") ? fqm_for_field(param) : fqm_for_jacobi_index(param);
    int w2 = std::stoi(header_get(p, "weight2"));
    std::int64_t jprec = std::stoll(header_get(p, "jprec"));
    VVForm f(q, w2, jprec);
    for (const auto& r : p.records) {
        std::int64_t g = std::stoll(r[0]);
        Rational n = parse_rational(r[1]);
        Rational jq = n - f.alpha(g);
        if (jq.get_den() != 1)
            throw usage_error("ledger exponent misaligned with component offsets");
        f.set_coeff_single(g, jq.get_num().get_si(), parse_rational(r[3]));
    }
    return f;
}

std::string to_ledger(const JacobiForm& f, const std::string& name)
{
    std::ostringstream os;
    emit_header(os, "jacobi", name);
    os << "weight: " << f.weight() << "\n";
    os << "index: " << f.index() << "\n";
    os << "prec: " << f.prec() << "\n";
    os << "begin\n";
    for (const auto& [k, v] : f.series().terms())
        os << k.first << " " << k.second << " : " << rat_str(v) << "\n";
    os << "end\n";
    return os.str();
}

JacobiForm jacobi_from_ledger(const std::string& text)
{
    Parsed p = parse(text);
    if (header_get(p, "kind") != "jacobi")
        throw usage_error("ledger kind mismatch");
    JacobiForm f(std::stoi(header_get(p, "weight")), std::stoll(header_get(p, "index")),
                 std::stoll(header_get(p, "prec")));
    for (const auto& r : p.records)
        f.set_coeff(std::stoll(r[0]), std::stoll(r[1]), parse_rational(r[3]));
    return f;
}

std::string to_ledger(const ParamExp& f, const std::string& name)
{
    std::ostringstream os;
    emit_header(os, "param", name);
    os << "level: " << f.level() << "\n";
    os << "weight: " << f.weight() << "\n";
    os << "prec: " << f.prec() << "\n";
    os << "begin\n";
    for (const auto& [k, v] : f.terms())
        os << k.n << " " << k.r << " " << k.m << " : " << rat_str(v) << "\n";
    os << "end\n";
    return os.str();
}

ParamExp param_from_ledger(const std::string& text)
{
    Parsed p = parse(text);
    if (header_get(p, "kind") != "param")
        throw usage_error("ledger kind mismatch");
    ParamExp f(std::stoll(header_get(p, "level")), std::stoi(header_get(p, "weight")),
               std::stoll(header_get(p, "prec")));
    for (const auto& r : p.records)
        f.set_coeff(std::stoll(r[0]), std::stoll(r[1]), std::stoll(r[2]), parse_rational(r[4]));
    return f;
}

std::string to_ledger(const HermExp& f)
{
    std::ostringstream os;
    emit_header(os, "herm", f.name());
    os << "d: " << f.disc() << "\n";
    os << "weight: " << f.weight() << "\n";
    os << "prec: " << f.table().bound() << "\n";
    SymmetryType s = symmetry_type(f);
    os << "symmetry: "
       << (s == SymmetryType::symmetric ? "symmetric" : s == SymmetryType::skew ? "skew" : "neither")
       << "\n";
    os << "begin\n";
    const auto& idx = f.table().indices();
    // table order is deterministic; emit sorted by (a, x, y, b) as stored
    for (std::size_t i = 0; i < idx.size(); ++i) {
        Rational v = rat(f.raw_num()[i], f.raw_den());
        if (v != 0)
            os << idx[i].a << " " << idx[i].x << " " << idx[i].y << " " << idx[i].b << " : "
               << rat_str(v) << "\n";
    }
    os << "end\n";
    return os.str();
}

HermExp herm_from_ledger(const std::string& text)
{
    Parsed p = parse(text);
    if (header_get(p, "kind") != "herm")
        throw usage_error("ledger kind mismatch");
    std::int64_t d = std::stoll(header_get(p, "d"));
    std::int64_t bound = std::stoll(header_get(p, "prec"));
    HermExp f(herm_index_table(d, bound), std::stoi(header_get(p, "weight")));
    auto it = p.header.find("name");
    if (it != p.header.end())
        f.set_name(it->second);
    for (const auto& r : p.records)
        f.set_coeff(std::stoll(r[0]), std::stoll(r[1]), std::stoll(r[2]), std::stoll(r[3]),
                    parse_rational(r[5]));
    f.normalize();
    return f;
}

} // namespace hmf
