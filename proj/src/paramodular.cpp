#include "hmf/paramodular.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hmf/bernoulli.hpp"

namespace hmf {

Rational ParamExp::coeff(std::int64_t n, std::int64_t r, std::int64_t m) const
{
    auto it = c_.find(Key{n, r, m});
    return it == c_.end() ? Rational(0) : it->second;
}

void ParamExp::set_coeff(std::int64_t n, std::int64_t r, std::int64_t m, const Rational& v)
{
    if (n < 0 || m < 0 || n + m > prec_)
        return;
    if (4 * n * m * level_ - r * r < 0 && v != 0)
        throw math_error("coefficient outside the semipositive support cone");
    if (v == 0)
        c_.erase(Key{n, r, m});
    else
        c_[Key{n, r, m}] = v;
}

ParamExp ParamExp::operator+(const ParamExp& o) const
{
    if (level_ != o.level_ || weight_ != o.weight_)
        throw usage_error("level/weight mismatch in addition");
    ParamExp r(level_, weight_, std::min(prec_, o.prec_));
    for (const auto& [k, v] : c_)
        if (k.n + k.m <= r.prec_)
            r.c_[k] = v;
    for (const auto& [k, v] : o.c_) {
        if (k.n + k.m > r.prec_)
            continue;
        auto it = r.c_.find(k);
        if (it == r.c_.end())
            r.c_.emplace(k, v);
        else {
            it->second += v;
            if (it->second == 0)
                r.c_.erase(it);
        }
    }
    return r;
}

ParamExp ParamExp::operator-(const ParamExp& o) const { return *this + o.scaled(Rational(-1)); }

ParamExp ParamExp::scaled(const Rational& s) const
{
    ParamExp r(level_, weight_, prec_);
    if (s == 0)
        return r;
    for (const auto& [k, v] : c_)
        r.c_.emplace(k, v * s);
    return r;
}

ParamExp ParamExp::operator*(const ParamExp& o) const
{
    if (level_ != o.level_)
        throw usage_error("level mismatch in multiplication");
    ParamExp r(level_, weight_ + o.weight_, std::min(prec_, o.prec_));
    for (const auto& [ka, va] : c_)
        for (const auto& [kb, vb] : o.c_) {
            std::int64_t n = ka.n + kb.n, m = ka.m + kb.m;
            if (n + m > r.prec_)
                continue;
            Key key{n, ka.r + kb.r, m};
            auto it = r.c_.find(key);
            if (it == r.c_.end())
                r.c_.emplace(key, va * vb);
            else {
                it->second += va * vb;
                if (it->second == 0)
                    r.c_.erase(it);
            }
        }
    return r;
}

bool ParamExp::operator==(const ParamExp& o) const
{
    std::int64_t p = std::min(prec_, o.prec_);
    if (level_ != o.level_)
        return false;
    auto window = [&](const ParamExp& f) {
        std::map<Key, Rational> w;
        for (const auto& [k, v] : f.c_)
            if (k.n + k.m <= p)
                w.emplace(k, v);
        return w;
    };
    return window(*this) == window(o);
}

JacobiForm ParamExp::fourier_jacobi(std::int64_t m) const
{
    if (m < 0 || m > prec_)
        throw usage_error("slice index out of range");
    std::int64_t idx = std::max<std::int64_t>(m * level_, 1);
    JacobiForm phi(weight_, idx, prec_ - m + 1);
    for (const auto& [k, v] : c_)
        if (k.m == m)
            phi.set_coeff(k.n, k.r, v);
    return phi;
}

QSeries ParamExp::diagonal_taylor(int N) const
{
    QSeries out(2, prec_ + 1);
    for (const auto& [k, v] : c_) {
        Rational rp(1);
        for (int i = 0; i < N; ++i)
            rp *= rat(k.r);
        if (rp == 0)
            continue;
        Rational cur = out.coeff(k.n, k.m);
        out.set_coeff(k.n, k.m, cur + rp * v);
    }
    return out;
}

std::optional<int> ParamExp::diagonal_order(int maxN) const
{
    for (int N = 0; N <= maxN; ++N)
        if (!diagonal_taylor(N).is_zero())
            return N;
    return std::nullopt;
}

QVec ParamExp::to_qvec() const
{
    QVec v;
    for (std::int64_t n = 0; n <= prec_; ++n)
        for (std::int64_t m = 0; n + m <= prec_; ++m) {
            std::int64_t rmax =
                static_cast<std::int64_t>(std::sqrt(double(4 * n * m * level_)) + 0.5);
            while (rmax * rmax > 4 * n * m * level_)
                --rmax;
            while ((rmax + 1) * (rmax + 1) <= 4 * n * m * level_)
                ++rmax;
            for (std::int64_t r = -rmax; r <= rmax; ++r)
                v.push_back(coeff(n, r, m));
        }
    return v;
}

std::string ParamExp::str() const
{
    std::ostringstream os;
    for (const auto& [k, v] : c_)
        os << k.n << " " << k.r << " " << k.m << " : " << v << "\n";
    return os.str();
}

ParamExp gritsenko_lift(const JacobiForm& phi, std::int64_t prec)
{
    if (!phi.is_holomorphic())
        throw usage_error("the arithmetic lift takes holomorphic Jacobi forms");
    int k = phi.weight();
    if (k < 2)
        throw usage_error("lift weight must be >= 2");
    std::int64_t l = phi.index();
    Rational c0 = phi.coeff(0, 0);
    ParamExp out(l, k, prec);
    if (phi.is_zero())
        return out;
    if (c0 != 0 && k % 2)
        throw usage_error("odd-weight lift input must have vanishing constant term");
    // boundary terms from -B_k/2k c0 (E_k(tau) + E_k(w) - 1)
    if (c0 != 0) {
        Rational head = -bernoulli(static_cast<unsigned>(k)) / rat(2 * k) * c0;
        out.set_coeff(0, 0, 0, head);
        for (std::int64_t n = 1; n <= prec; ++n) {
            Rational s = c0 * Rational(sigma(n, static_cast<unsigned>(k - 1)));
            out.set_coeff(n, 0, 0, s);
            out.set_coeff(0, 0, n, s);
        }
    }
    // interior: c(n,r,m) = sum_{d | (n,r,m)} d^{k-1} c_phi(nm/d^2, r/d)
    for (std::int64_t n = 1; n <= prec; ++n)
        for (std::int64_t m = 1; n + m <= prec; ++m) {
            std::int64_t rmax =
                static_cast<std::int64_t>(std::sqrt(double(4 * n * m * l)) + 0.5);
            while (rmax * rmax > 4 * n * m * l)
                --rmax;
            while ((rmax + 1) * (rmax + 1) <= 4 * n * m * l)
                ++rmax;
            for (std::int64_t r = -rmax; r <= rmax; ++r) {
                Rational acc(0);
                std::int64_t g = gcd64(gcd64(n, r), m);
                for (std::int64_t dd = 1; dd <= g; ++dd) {
                    if (g % dd)
                        continue;
                    if ((n * m) % (dd * dd))
                        continue;
                    std::int64_t nn = n * m / (dd * dd);
                    if (nn >= phi.prec())
                        throw usage_error("lift needs more Jacobi precision");
                    acc += Rational(int_pow(Int(static_cast<long>(dd)),
                                            static_cast<unsigned>(k - 1))) *
                           phi.coeff(nn, r / dd);
                }
                if (acc != 0)
                    out.set_coeff(n, r, m, acc);
            }
        }
    return out;
}

const ParamExp& GeneratorCatalog::at(const std::string& name) const
{
    auto it = forms.find(name);
    if (it == forms.end())
        throw usage_error("no catalog form named " + name);
    return it->second;
}

GeneratorCatalog generator_catalog(std::int64_t level, std::int64_t prec, int phi11_sign)
{
    if (level < 1 || level > 3)
        throw usage_error("catalogs exist for levels 1, 2, 3");
    GeneratorCatalog cat;
    cat.level = level;
    // Jacobi coefficients are consumed at n*m <= (prec/2)^2.
    std::int64_t jprec = (prec / 2 + 1) * (prec / 2 + 1) + 1;

    auto add = [&](const std::string& name, const JacobiForm& phi) {
        cat.names.push_back(name);
        cat.forms.emplace(name, gritsenko_lift(phi, prec));
    };
    auto add_eis = [&](const std::string& name, int k) {
        JacobiForm e = jacobi_eisenstein(k, level, jprec);
        ParamExp lift = gritsenko_lift(e, prec);
        Rational head = -bernoulli(static_cast<unsigned>(k)) / rat(2 * k);
        cat.names.push_back(name);
        cat.forms.emplace(name, lift.scaled(Rational(1) / head));
    };

    add_eis("E4", 4);
    add_eis("E6", 6);
    if (level == 1) {
        add("psi10", jacobi_phi_10_1(jprec));
        add("psi12", jacobi_phi_12_1(jprec));
        cat.registered_only["psi35"] = 35;
    } else if (level == 2) {
        add("phi8", jacobi_phi_8_2(jprec));
        add("phi10", jacobi_phi_10_2(jprec));
        add("phi11", jacobi_phi_11_2(jprec, phi11_sign));
        add("phi12", jacobi_phi_12_2(jprec));
        cat.registered_only["f12"] = 12;
    } else {
        add("phi6", jacobi_phi_6_3(jprec));
        add("phi8", jacobi_phi_8_3(jprec));
        add("phi9", jacobi_phi_9_3(jprec, phi11_sign));
        add("phi10", jacobi_phi_10_3(jprec));
        add("phi11", jacobi_phi_11_3(jprec, phi11_sign));
        add("phi12", jacobi_phi_12_3(jprec));
        cat.registered_only["f12"] = 12;
    }
    return cat;
}

std::optional<QVec> param_linear_solve(const ParamExp& target, const std::vector<ParamExp>& basis)
{
    if (basis.empty())
        return target.is_zero() ? std::optional<QVec>(QVec{}) : std::nullopt;
    std::vector<QVec> rows;
    rows.reserve(basis.size());
    for (const auto& f : basis)
        rows.push_back(f.to_qvec());
    return solve_in_span(rows, target.to_qvec());
}

} // namespace hmf
