#include "hmf/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

#include "hmf/bernoulli.hpp"

namespace hmf {

namespace {

std::int64_t isqrt64(std::int64_t n)
{
    if (n < 0)
        return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(double(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

} // namespace

HermIndexTable::HermIndexTable(std::int64_t d, std::int64_t bound) : d_(d), p_(-d), bound_(bound)
{
    if (d != -7 && d != -11)
        throw usage_error("unsupported field discriminant");
    blocks_.resize(static_cast<std::size_t>((bound + 1) * (bound + 1)));
    for (std::int64_t a = 0; a <= bound; ++a)
        for (std::int64_t b = 0; a + b <= bound; ++b) {
            Block& blk = blocks_[static_cast<std::size_t>(a * (bound + 1) + b)];
            std::int64_t ab = a * b;
            blk.ymin = -isqrt64(4 * ab);
            blk.ymax = -blk.ymin;
            for (std::int64_t y = blk.ymin; y <= blk.ymax; ++y) {
                std::int64_t s = isqrt64(p_ * (4 * ab - y * y));
                Row row;
                row.xmin = ceil_div(-y - s, 2);
                row.xmax = floor_div(-y + s, 2);
                row.start = list_.size();
                for (std::int64_t x = row.xmin; x <= row.xmax; ++x)
                    list_.push_back(Idx{static_cast<std::int32_t>(a), static_cast<std::int32_t>(x),
                                        static_cast<std::int32_t>(y), static_cast<std::int32_t>(b)});
                blk.rows.push_back(row);
            }
        }
}

std::int64_t HermIndexTable::norm_num(std::int64_t x, std::int64_t y) const
{
    return x * x + x * y + y * y * (1 - d_) / 4;
}

std::int64_t HermIndexTable::fqm_label(std::int64_t x, std::int64_t y) const
{
    return mod_pos(x - y * (d_ - 1) / 2, p_);
}

std::size_t HermIndexTable::position(std::int64_t a, std::int64_t x, std::int64_t y,
                                     std::int64_t b) const
{
    if (a < 0 || b < 0 || a + b > bound_)
        return npos;
    const Block& blk = blocks_[static_cast<std::size_t>(a * (bound_ + 1) + b)];
    if (y < blk.ymin || y > blk.ymax)
        return npos;
    const Row& row = blk.rows[static_cast<std::size_t>(y - blk.ymin)];
    if (x < row.xmin || x > row.xmax)
        return npos;
    return row.start + static_cast<std::size_t>(x - row.xmin);
}

std::shared_ptr<const HermIndexTable> herm_index_table(std::int64_t d, std::int64_t bound)
{
    static std::map<std::pair<std::int64_t, std::int64_t>, std::shared_ptr<const HermIndexTable>>
        cache;
    auto key = std::make_pair(d, bound);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    auto t = std::make_shared<const HermIndexTable>(d, bound);
    cache[key] = t;
    return t;
}

HermExp::HermExp(std::shared_ptr<const HermIndexTable> table, int weight)
    : table_(std::move(table)), weight_(weight), num_(table_->size(), Int(0))
{
}

bool HermExp::is_zero() const
{
    for (const auto& v : num_)
        if (v != 0)
            return false;
    return true;
}

Rational HermExp::coeff(std::int64_t a, std::int64_t x, std::int64_t y, std::int64_t b) const
{
    std::size_t pos = table_->position(a, x, y, b);
    if (pos == HermIndexTable::npos)
        return Rational(0);
    return rat(num_[pos], den_);
}

void HermExp::set_coeff(std::int64_t a, std::int64_t x, std::int64_t y, std::int64_t b,
                        const Rational& v)
{
    std::size_t pos = table_->position(a, x, y, b);
    if (pos == HermIndexTable::npos)
        throw usage_error("index outside the support window");
    // bring to a common denominator with the new value
    Int vden = v.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), vden.get_mpz_t());
    Int extra = vden / g;
    if (extra != 1) {
        for (auto& c : num_)
            c *= extra;
        den_ *= extra;
    }
    num_[pos] = v.get_num() * (den_ / vden);
}

void HermExp::normalize()
{
    Int g = den_;
    for (const auto& c : num_) {
        if (c == 0)
            continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            return;
    }
    if (g == 1 || g == 0)
        return;
    den_ /= g;
    for (auto& c : num_)
        c /= g;
}

HermExp HermExp::operator+(const HermExp& o) const
{
    if (table_ != o.table_ || weight_ != o.weight_)
        throw usage_error("field/weight mismatch in addition");
    HermExp r(table_, weight_);
    Int g;
    mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
    Int fa = o.den_ / g, fb = den_ / g;
    r.den_ = den_ * fa;
    for (std::size_t i = 0; i < num_.size(); ++i)
        r.num_[i] = num_[i] * fa + o.num_[i] * fb;
    r.normalize();
    return r;
}

HermExp HermExp::operator-(const HermExp& o) const { return *this + o.scaled(Rational(-1)); }

HermExp HermExp::scaled(const Rational& c) const
{
    HermExp r(table_, weight_);
    if (c == 0)
        return r;
    r.den_ = den_ * c.get_den();
    for (std::size_t i = 0; i < num_.size(); ++i)
        r.num_[i] = num_[i] * c.get_num();
    r.normalize();
    return r;
}

HermExp HermExp::operator*(const HermExp& o) const
{
    if (table_ != o.table_)
        throw usage_error("field mismatch in multiplication");
    const auto& tab = *table_;
    HermExp r(table_, weight_ + o.weight_);
    r.den_ = den_ * o.den_;
    std::vector<std::size_t> nza, nzb;
    for (std::size_t i = 0; i < num_.size(); ++i)
        if (num_[i] != 0)
            nza.push_back(i);
    for (std::size_t i = 0; i < o.num_.size(); ++i)
        if (o.num_[i] != 0)
            nzb.push_back(i);
    const auto& idx = tab.indices();
    std::int64_t bound = tab.bound();
    for (auto i : nza) {
        const auto& u = idx[i];
        std::int64_t ta = u.a + u.b;
        const Int& cu = num_[i];
        for (auto j : nzb) {
            const auto& v = idx[j];
            if (ta + v.a + v.b > bound)
                continue;
            std::size_t pos = tab.position(u.a + v.a, u.x + v.x, u.y + v.y, u.b + v.b);
            if (pos == HermIndexTable::npos)
                throw math_error("product index left the support table");
            mpz_addmul(r.num_[pos].get_mpz_t(), cu.get_mpz_t(), o.num_[j].get_mpz_t());
        }
    }
    r.normalize();
    return r;
}

bool HermExp::operator==(const HermExp& o) const
{
    if (table_ != o.table_)
        return false;
    // compare as exact rationals
    for (std::size_t i = 0; i < num_.size(); ++i)
        if (num_[i] * o.den_ != o.num_[i] * den_)
            return false;
    return true;
}

QVec HermExp::to_qvec() const
{
    QVec v(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i)
        v[i] = rat(num_[i], den_);
    return v;
}

QVec HermExp::to_qvec_trace(std::int64_t cut) const
{
    QVec v;
    const auto& idx = table_->indices();
    for (std::size_t i = 0; i < num_.size(); ++i)
        if (idx[i].a + idx[i].b <= cut)
            v.push_back(rat(num_[i], den_));
    return v;
}

std::string HermExp::str() const
{
    std::ostringstream os;
    const auto& idx = table_->indices();
    for (std::size_t i = 0; i < num_.size(); ++i)
        if (num_[i] != 0)
            os << idx[i].a << " " << idx[i].x << " " << idx[i].y << " " << idx[i].b << " : "
               << rat(num_[i], den_) << "\n";
    return os.str();
}

SymmetryType symmetry_type(const HermExp& f)
{
    const auto& tab = f.table();
    const auto& idx = tab.indices();
    int sign = (f.weight() % 2 == 0) ? 1 : -1; // (-1)^k
    bool sym = true, skew = true;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        auto [cx, cy] = HermIndexTable::conj(idx[i].x, idx[i].y);
        Rational lhs = f.coeff(idx[i].a, cx, cy, idx[i].b);
        Rational rhs = f.coeff(idx[i].a, idx[i].x, idx[i].y, idx[i].b) * rat(sign);
        if (lhs != rhs)
            sym = false;
        if (lhs != -rhs)
            skew = false;
        if (!sym && !skew)
            return SymmetryType::neither;
    }
    if (sym)
        return SymmetryType::symmetric; // zero reports symmetric
    return SymmetryType::skew;
}

HermExp maass_lift(const VVForm& f, int k, const std::shared_ptr<const HermIndexTable>& table)
{
    if (!f.is_holomorphic())
        throw usage_error("the Maass lift takes holomorphic inputs");
    const auto& tab = *table;
    if (f.fqm().order() != tab.p())
        throw usage_error("input lives on the wrong discriminant form");
    Rational c0 = f.coeff_n(0, Rational(0));
    if (k % 2 && c0 != 0)
        throw usage_error("odd lift weight requires vanishing constant term");
    std::int64_t need = (tab.bound() / 2) * (tab.bound() - tab.bound() / 2) + 1;
    if (f.jprec() < need)
        throw usage_error("lift needs more input precision");

    HermExp out(table, k);
    const auto& idx = tab.indices();
    for (std::size_t i = 0; i < idx.size(); ++i) {
        std::int64_t a = idx[i].a, x = idx[i].x, y = idx[i].y, b = idx[i].b;
        if (a == 0 && b == 0) {
            if (c0 != 0)
                out.set_coeff(0, 0, 0, 0, -bernoulli(static_cast<unsigned>(k)) / rat(2 * k) * c0);
            continue;
        }
        std::int64_t content = gcd64(gcd64(a, b), gcd64(x, y));
        Rational acc(0);
        for (std::int64_t n = 1; n <= content; ++n) {
            if (content % n)
                continue;
            // c_F((ab - N(t))/n^2, [t/n])
            Rational nv = rat(a * b * tab.p() - tab.norm_num(x, y), tab.p() * n * n);
            Rational c = f.coeff_n(tab.fqm_label(x / n, y / n), nv);
            if (c != 0)
                acc += Rational(int_pow(Int(static_cast<long>(n)), static_cast<unsigned>(k - 1))) * c;
        }
        if (acc != 0)
            out.set_coeff(a, x, y, b, acc);
    }
    out.normalize();
    return out;
}

ParamExp pullback(const HermExp& f, std::int64_t ell, std::int64_t lx, std::int64_t ly, int N)
{
    const auto& tab = f.table();
    std::int64_t cnorm = (1 - tab.disc()) / 4;
    if (lx * lx + lx * ly + cnorm * ly * ly != ell)
        throw usage_error("lambda does not have the requested norm");
    ParamExp out(ell, f.weight() + N, tab.bound());
    std::map<ParamExp::Key, Rational> acc;
    const auto& idx = tab.indices();
    for (std::size_t i = 0; i < idx.size(); ++i) {
        Rational c = rat(f.raw_num()[i], f.raw_den());
        if (c == 0)
            continue;
        std::int64_t x = idx[i].x, y = idx[i].y;
        std::int64_t r = y * lx - x * ly;
        std::int64_t iota = 2 * x * lx + x * ly + y * lx + y * ly * (1 - tab.disc()) / 2;
        Rational term = c;
        for (int t = 0; t < N; ++t)
            term *= rat(iota);
        if (term != 0)
            acc[ParamExp::Key{idx[i].a, r, idx[i].b}] += term;
    }
    for (const auto& [key, v] : acc)
        if (v != 0)
            out.set_coeff(key.n, key.r, key.m, v);
    return out;
}

std::optional<int> vanishing_order(const HermExp& f, std::int64_t ell, std::int64_t lx,
                                   std::int64_t ly, int maxN)
{
    for (int N = 0; N <= maxN; ++N)
        if (!pullback(f, ell, lx, ly, N).is_zero())
            return N;
    return std::nullopt;
}

namespace {

using TermKey = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>; // (s, a, x, y)

TermKey term_key(const HermIndexTable::Idx& u)
{
    return {static_cast<std::int64_t>(u.a) + u.b, u.a, u.x, u.y};
}

} // namespace

HermExp herm_divide(const HermExp& f, const HermExp& g)
{
    if (f.table_ptr() != g.table_ptr())
        throw usage_error("field mismatch in division");
    if (g.is_zero())
        throw math_error("division by the zero expansion");
    const auto& tab = f.table();
    const auto& idx = tab.indices();

    // sparse views ordered by the additive term order (trace, a, x, y)
    std::map<TermKey, Rational> r_map, g_map;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        Rational fv = rat(f.raw_num()[i], f.raw_den());
        if (fv != 0)
            r_map[term_key(idx[i])] = fv;
        Rational gv = rat(g.raw_num()[i], g.raw_den());
        if (gv != 0)
            g_map[term_key(idx[i])] = gv;
    }
    auto g0 = g_map.begin();
    TermKey tau0 = g0->first;
    Rational cg = g0->second;
    std::int64_t s0 = std::get<0>(tau0);

    HermExp h(f.table_ptr(), f.weight() - g.weight());
    std::int64_t bound = tab.bound();
    while (!r_map.empty()) {
        auto it = r_map.begin();
        auto [s, a, x, y] = it->first;
        Rational c = it->second / cg;
        std::int64_t da = a - std::get<1>(tau0);
        std::int64_t dx = x - std::get<2>(tau0);
        std::int64_t dy = y - std::get<3>(tau0);
        std::int64_t db = (s - a) - (s0 - std::get<1>(tau0));
        if (da < 0 || db < 0 || tab.position(da, dx, dy, db) == HermIndexTable::npos)
            throw math_error("inexact division: remainder term " + std::to_string(a) + "," +
                             std::to_string(x) + "," + std::to_string(y) + "," +
                             std::to_string(s - a) + " is not divisible");
        h.set_coeff(da, dx, dy, db, h.coeff(da, dx, dy, db) + c);
        // subtract c * q^{dif} * G
        for (const auto& [gk, gv] : g_map) {
            auto [gs, ga, gx, gy] = gk;
            std::int64_t na = ga + da, nx = gx + dx, ny = gy + dy, nb = (gs - ga) + db;
            if (na + nb > bound)
                continue;
            TermKey nk{na + nb, na, nx, ny};
            auto rit = r_map.find(nk);
            Rational nv = (rit == r_map.end() ? Rational(0) : rit->second) - c * gv;
            if (nv == 0) {
                if (rit != r_map.end())
                    r_map.erase(rit);
            } else {
                r_map[nk] = nv;
            }
        }
    }
    h.normalize();
    return h;
}

} // namespace hmf
