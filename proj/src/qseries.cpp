#include "hmf/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "hmf/bernoulli.hpp"

namespace hmf {

QSeries::QSeries(int vars, std::int64_t prec) : vars_(vars), prec_(prec)
{
    if (vars != 1 && vars != 2)
        throw usage_error("QSeries supports one or two variables");
}

QSeries QSeries::one(int vars, std::int64_t prec)
{
    QSeries s(vars, prec);
    s.set_coeff(0, 0, Rational(1));
    return s;
}

QSeries QSeries::monomial(std::int64_t e0, const Rational& c, std::int64_t prec)
{
    QSeries s(1, prec);
    s.set_coeff(e0, 0, c);
    return s;
}

QSeries QSeries::monomial2(std::int64_t e0, std::int64_t e1, const Rational& c, std::int64_t prec)
{
    QSeries s(2, prec);
    s.set_coeff(e0, e1, c);
    return s;
}

Rational QSeries::coeff(std::int64_t e0, std::int64_t e1) const
{
    auto it = c_.find({e0, e1});
    return it == c_.end() ? Rational(0) : it->second;
}

void QSeries::set_coeff(std::int64_t e0, std::int64_t e1, const Rational& v)
{
    if (vars_ == 1 && e1 != 0)
        throw usage_error("second exponent on a one-variable series");
    if (e0 >= prec_)
        return;
    if (v == 0)
        c_.erase({e0, e1});
    else
        c_[{e0, e1}] = v;
}

std::int64_t QSeries::low_exponent() const
{
    if (c_.empty())
        throw math_error("low_exponent of the zero series");
    return c_.begin()->first.first;
}

QSeries QSeries::truncated(std::int64_t prec) const
{
    QSeries r(vars_, std::min(prec, prec_));
    for (const auto& [k, v] : c_)
        if (k.first < r.prec_)
            r.c_.emplace(k, v);
    return r;
}

QSeries QSeries::dilated(std::int64_t t) const
{
    if (t < 1)
        throw usage_error("dilation factor must be >= 1");
    QSeries r(vars_, prec_ * t);
    for (const auto& [k, v] : c_)
        r.c_.emplace(Key{k.first * t, k.second}, v);
    return r;
}

QSeries QSeries::qdq() const
{
    QSeries r(vars_, prec_);
    for (const auto& [k, v] : c_)
        if (k.first != 0)
            r.c_.emplace(k, v * rat(k.first));
    return r;
}

QSeries QSeries::shifted(std::int64_t e0, std::int64_t e1) const
{
    QSeries r(vars_, prec_ + e0);
    for (const auto& [k, v] : c_)
        r.c_.emplace(Key{k.first + e0, k.second + e1}, v);
    return r;
}

QSeries QSeries::scaled(const Rational& c) const
{
    QSeries r(vars_, prec_);
    if (c == 0)
        return r;
    for (const auto& [k, v] : c_)
        r.c_.emplace(k, v * c);
    return r;
}

QSeries QSeries::swapped() const
{
    if (vars_ != 2)
        throw usage_error("swapped() needs a two-variable series");
    QSeries r(2, prec_);
    for (const auto& [k, v] : c_)
        if (k.second < prec_)
            r.c_.emplace(Key{k.second, k.first}, v);
    return r;
}

void QSeries::check_compatible(const QSeries& a, const QSeries& b)
{
    if (a.vars_ != b.vars_)
        throw usage_error("variable count mismatch");
}

QSeries operator+(const QSeries& a, const QSeries& b)
{
    QSeries::check_compatible(a, b);
    QSeries r(a.vars_, std::min(a.prec_, b.prec_));
    for (const auto& [k, v] : a.c_)
        if (k.first < r.prec_)
            r.c_[k] = v;
    for (const auto& [k, v] : b.c_) {
        if (k.first >= r.prec_)
            continue;
        auto it = r.c_.find(k);
        if (it == r.c_.end()) {
            r.c_.emplace(k, v);
        } else {
            it->second += v;
            if (it->second == 0)
                r.c_.erase(it);
        }
    }
    return r;
}

QSeries QSeries::operator-() const
{
    QSeries r(vars_, prec_);
    for (const auto& [k, v] : c_)
        r.c_.emplace(k, -v);
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b)
{
    QSeries::check_compatible(a, b);
    std::int64_t prec = std::min(a.prec_, b.prec_);
    // With Laurent lows the product is reliable to min prec plus the partner's
    // low exponent.
    if (!a.c_.empty() && !b.c_.empty())
        prec = std::min(a.prec_ + b.low_exponent(), b.prec_ + a.low_exponent());
    QSeries r(a.vars_, prec);
    if (a.c_.empty() || b.c_.empty())
        return r;
    for (const auto& [ka, va] : a.c_) {
        for (const auto& [kb, vb] : b.c_) {
            std::int64_t e0 = ka.first + kb.first;
            if (e0 >= prec)
                break; // kb iterates in increasing e0
            auto key = QSeries::Key{e0, ka.second + kb.second};
            auto it = r.c_.find(key);
            if (it == r.c_.end()) {
                r.c_.emplace(key, va * vb);
            } else {
                it->second += va * vb;
                if (it->second == 0)
                    r.c_.erase(it);
            }
        }
    }
    return r;
}

bool QSeries::operator==(const QSeries& o) const
{
    // Equality as truncated series on the common precision window.
    std::int64_t p = std::min(prec_, o.prec_);
    auto ta = truncated(p);
    auto tb = o.truncated(p);
    return ta.c_ == tb.c_;
}

QSeries ps_div(const QSeries& a, const QSeries& b)
{
    if (a.vars() != b.vars())
        throw usage_error("variable count mismatch");
    if (b.is_zero())
        throw math_error("division by the zero series");

    std::int64_t vb = b.low_exponent();
    // Leading truncation slice of b must be a unit: a single monomial.
    QSeries::Key lead_key{0, 0};
    Rational lead;
    {
        int slice_terms = 0;
        for (const auto& [k, v] : b.terms()) {
            if (k.first != vb)
                break;
            ++slice_terms;
            lead_key = k;
            lead = v;
        }
        if (slice_terms != 1)
            throw math_error("divisor has a non-invertible leading term");
    }

    std::int64_t prec = std::min(a.prec(), b.prec()) - vb;
    QSeries rem = a;
    QSeries quot(a.vars(), prec);
    // Sparse long division against the leading monomial of b.
    while (!rem.is_zero()) {
        auto t = rem.terms().begin();
        std::int64_t e0 = t->first.first - lead_key.first;
        if (e0 >= prec)
            break;
        std::int64_t e1 = t->first.second - lead_key.second;
        Rational c = t->second / lead;
        quot.set_coeff(e0, e1, quot.coeff(e0, e1) + c);
        QSeries term = (a.vars() == 1) ? QSeries::monomial(e0, c, prec)
                                       : QSeries::monomial2(e0, e1, c, prec);
        rem = rem - term * b;
    }
    return quot;
}

QSeries tensor_product(const QSeries& f, const QSeries& g)
{
    if (f.vars() != 1 || g.vars() != 1)
        throw usage_error("tensor_product takes one-variable series");
    QSeries r(2, f.prec());
    for (const auto& [kf, vf] : f.terms())
        for (const auto& [kg, vg] : g.terms())
            r.set_coeff(kf.first, kg.first, vf * vg);
    return r;
}

Int sigma(std::int64_t n, unsigned k)
{
    if (n <= 0)
        throw usage_error("sigma(n) needs n >= 1");
    Int total = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d)
            continue;
        total += int_pow(Int(static_cast<long>(d)), k);
        std::int64_t e = n / d;
        if (e != d)
            total += int_pow(Int(static_cast<long>(e)), k);
    }
    return total;
}

Int divisor_count(std::int64_t n) { return sigma(n, 0); }

QSeries eisenstein_series(unsigned k, std::int64_t prec)
{
    if (k < 2 || k % 2 != 0)
        throw usage_error("Eisenstein weight must be even and >= 2");
    QSeries e(1, prec);
    e.set_coeff(0, Rational(1));
    Rational factor = rat(-2 * static_cast<long>(k)) / bernoulli(k);
    for (std::int64_t n = 1; n < prec; ++n)
        e.set_coeff(n, factor * Rational(sigma(n, k - 1)));
    return e;
}

QSeries delta_series(std::int64_t prec)
{
    // q prod (1-q^n)^24: pentagonal-number expansion of prod(1-q^n), then ^24
    // as (((x^2)^2)^2)^3.
    QSeries x(1, prec);
    for (std::int64_t j = 0;; ++j) {
        std::int64_t g1 = j * (3 * j - 1) / 2;
        std::int64_t g2 = j * (3 * j + 1) / 2;
        if (g1 >= prec && g2 >= prec && j > 0)
            break;
        Rational s = (j % 2 == 0) ? Rational(1) : Rational(-1);
        if (g1 < prec)
            x.set_coeff(g1, x.coeff(g1) + s);
        if (j > 0 && g2 < prec)
            x.set_coeff(g2, x.coeff(g2) + s);
    }
    QSeries x2 = x * x;
    QSeries x4 = x2 * x2;
    QSeries x8 = x4 * x4;
    QSeries x24 = x8 * x8 * x8;
    return x24.shifted(1).truncated(prec);
}

QSeries theta_series(std::int64_t prec)
{
    QSeries t(1, prec);
    t.set_coeff(0, Rational(1));
    for (std::int64_t n = 1; n * n < prec; ++n)
        t.set_coeff(n * n, Rational(2));
    return t;
}

QSeries classical_series(const std::string& name, std::int64_t prec)
{
    if (prec < 1)
        throw usage_error("prec must be >= 1");
    if (name == "Delta")
        return delta_series(prec);
    if (name == "Theta")
        return theta_series(prec);
    if (name.size() > 1 && name[0] == 'E') {
        unsigned long k = 0;
        try {
            k = std::stoul(name.substr(1));
        } catch (...) {
            throw usage_error("unknown series name: " + name);
        }
        return eisenstein_series(static_cast<unsigned>(k), prec);
    }
    throw usage_error("unknown series name: " + name);
}

std::string QSeries::str(const std::string& v0, const std::string& v1) const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : c_) {
        Rational av = v > 0 ? v : Rational(-v);
        if (first) {
            if (v < 0)
                os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        bool unit = (av == 1);
        bool has_var = (k.first != 0) || (vars_ == 2 && k.second != 0);
        if (!unit || !has_var)
            os << av;
        if (k.first != 0) {
            if (!unit)
                os << "*";
            os << v0;
            if (k.first != 1)
                os << "^" << k.first;
        }
        if (vars_ == 2 && k.second != 0) {
            if (!unit || k.first != 0)
                os << "*";
            os << v1;
            if (k.second != 1)
                os << "^" << k.second;
        }
    }
    return os.str();
}

} // namespace hmf
