#include "hmf/jacobi.hpp"

#include <algorithm>
#include <cmath>

#include "hmf/bernoulli.hpp"
#include "hmf/linalg.hpp"

namespace hmf {

JacobiForm::JacobiForm(int weight, std::int64_t index, std::int64_t prec)
    : weight_(weight), index_(index), series_(2, prec)
{
    if (index < 1)
        throw usage_error("Jacobi index must be >= 1");
}

JacobiForm::JacobiForm(int weight, std::int64_t index, QSeries series)
    : weight_(weight), index_(index), series_(std::move(series))
{
    if (series_.vars() != 2)
        throw usage_error("Jacobi forms are two-variable series");
}

bool JacobiForm::is_holomorphic() const
{
    for (const auto& [k, v] : series_.terms())
        if (4 * k.first * index_ - k.second * k.second < 0)
            return false;
    return true;
}

bool JacobiForm::is_cusp() const
{
    for (const auto& [k, v] : series_.terms())
        if (4 * k.first * index_ - k.second * k.second <= 0)
            return false;
    return true;
}

bool JacobiForm::satisfies_index_law() const
{
    // c(n,r) must depend only on (4nm - r^2, r mod 2m).
    std::map<std::pair<std::int64_t, std::int64_t>, Rational> seen;
    for (const auto& [k, v] : series_.terms()) {
        std::int64_t disc = 4 * k.first * index_ - k.second * k.second;
        std::int64_t cls = mod_pos(k.second, 2 * index_);
        auto key = std::make_pair(disc, cls);
        auto it = seen.find(key);
        if (it == seen.end())
            seen.emplace(key, v);
        else if (it->second != v)
            return false;
    }
    // every in-window representative of a nonzero class must carry the value
    for (const auto& [key, v] : seen) {
        if (v == 0)
            continue;
        auto [disc, cls] = key;
        for (std::int64_t r = cls - 2 * index_ * prec(); r <= cls + 2 * index_ * prec();
             r += 2 * index_) {
            if ((disc + r * r) % (4 * index_))
                continue;
            std::int64_t n = (disc + r * r) / (4 * index_);
            if (n >= 0 && n < prec() && coeff(n, r) != v)
                return false;
        }
    }
    return true;
}

JacobiForm JacobiForm::operator+(const JacobiForm& o) const
{
    if (weight_ != o.weight_ || index_ != o.index_)
        throw usage_error("Jacobi weight/index mismatch in addition");
    return JacobiForm(weight_, index_, series_ + o.series_);
}

JacobiForm JacobiForm::operator-(const JacobiForm& o) const
{
    return *this + o.scaled(Rational(-1));
}

JacobiForm JacobiForm::scaled(const Rational& c) const
{
    return JacobiForm(weight_, index_, series_.scaled(c));
}

JacobiForm JacobiForm::mul(const JacobiForm& o) const
{
    return JacobiForm(weight_ + o.weight_, index_ + o.index_, series_ * o.series_);
}

JacobiForm JacobiForm::mul_scalar(const QSeries& f, int scalar_weight) const
{
    if (f.vars() != 1)
        throw usage_error("mul_scalar takes a one-variable series");
    QSeries f2(2, f.prec());
    for (const auto& [k, v] : f.terms())
        f2.set_coeff(k.first, 0, v);
    return JacobiForm(weight_ + scalar_weight, index_, series_ * f2);
}

bool JacobiForm::operator==(const JacobiForm& o) const
{
    return weight_ == o.weight_ && index_ == o.index_ && series_ == o.series_;
}

JacobiForm jacobi_eisenstein(int k, std::int64_t m, std::int64_t prec)
{
    if (k < 4 || k % 2)
        throw usage_error("Jacobi Eisenstein weight must be even, >= 4");
    if (m < 1 || m > 3)
        throw usage_error("Jacobi Eisenstein index supported for m = 1, 2, 3");
    if (m == 1) {
        Rational h0 = cohen_h(static_cast<unsigned>(k - 1), 0);
        JacobiForm e(k, 1, prec);
        for (std::int64_t n = 0; n < prec; ++n) {
            std::int64_t rmax = static_cast<std::int64_t>(std::sqrt(double(4 * n))) + 1;
            for (std::int64_t r = -rmax; r <= rmax; ++r) {
                std::int64_t disc = 4 * n - r * r;
                if (disc < 0)
                    continue;
                Rational h = cohen_h(static_cast<unsigned>(k - 1), disc);
                if (h != 0)
                    e.set_coeff(n, r, h / h0);
            }
        }
        return e;
    }
    JacobiForm e1 = jacobi_eisenstein(k, 1, prec * m);
    JacobiForm raised = jacobi_hecke_v(e1, m);
    return raised.scaled(Rational(1) / Rational(sigma(m, static_cast<unsigned>(k - 1))));
}

JacobiForm jacobi_hecke_v(const JacobiForm& phi, std::int64_t l)
{
    if (l < 1)
        throw usage_error("V_l needs l >= 1");
    if (l == 1)
        return phi;
    std::int64_t m = phi.index();
    std::int64_t prec = phi.prec() / l;
    int k = phi.weight();
    JacobiForm out(k, m * l, prec);
    for (std::int64_t n = 0; n < prec; ++n) {
        std::int64_t rmax = static_cast<std::int64_t>(std::sqrt(double(4 * n * m * l))) + 1;
        for (std::int64_t r = -rmax; r <= rmax; ++r) {
            Rational acc(0);
            for (std::int64_t a = 1; a <= l; ++a) {
                if (l % a || n % a || mod_pos(r, a))
                    continue;
                std::int64_t nn = n * l / (a * a);
                if ((n * l) % (a * a))
                    continue;
                acc += Rational(int_pow(Int(static_cast<long>(a)), static_cast<unsigned>(k - 1))) *
                       phi.coeff(nn, r / a);
            }
            if (acc != 0)
                out.set_coeff(n, r, acc);
        }
    }
    return out;
}

JacobiForm jacobi_div_delta(const JacobiForm& phi, bool require_holomorphic)
{
    std::int64_t prec = phi.prec();
    QSeries delta1 = delta_series(prec);
    QSeries delta2(2, prec);
    for (const auto& [k, v] : delta1.terms())
        delta2.set_coeff(k.first, 0, v);
    QSeries quot = ps_div(phi.series(), delta2);
    if (require_holomorphic && !quot.is_zero() && quot.low_exponent() < 0)
        throw math_error("division by Delta leaves a nearly-holomorphic remainder");
    // exactness within the quotient precision
    QSeries back = quot * delta2;
    QSeries rem = phi.series().truncated(back.prec()) - back;
    if (!rem.is_zero())
        throw math_error("division by Delta is not exact");
    return JacobiForm(phi.weight() - 12, phi.index(), quot);
}

JacobiForm jacobi_zderiv(const JacobiForm& phi)
{
    QSeries d(2, phi.prec());
    for (const auto& [k, v] : phi.series().terms())
        if (k.second != 0)
            d.set_coeff(k.first, k.second, v * rat(k.second));
    return JacobiForm(phi.weight() + 1, phi.index(), d);
}

VVForm jacobi_to_vv(const JacobiForm& phi, std::int64_t jprec)
{
    std::int64_t m = phi.index();
    FQM fqm = fqm_for_jacobi_index(m);
    Rational weight = rat(2 * phi.weight() - 1, 2);
    VVForm f = VVForm::make(fqm, weight, jprec);
    for (const auto& [k, v] : phi.series().terms()) {
        std::int64_t gamma = mod_pos(k.second, 2 * m);
        Rational n = rat(k.first) - rat(k.second * k.second, 4 * m);
        Rational jq = n - f.alpha(gamma);
        if (jq.get_den() != 1)
            throw math_error("Jacobi exponent misaligned with component offsets");
        std::int64_t j = jq.get_num().get_si();
        if (j < jprec)
            f.set_coeff_single(gamma, j, v);
    }
    return f;
}

JacobiForm vv_to_jacobi(const VVForm& f, int weight, std::int64_t prec)
{
    std::int64_t m = f.fqm().order() / 2;
    JacobiForm phi(weight, m, prec);
    for (std::int64_t n = 0; n < prec; ++n) {
        std::int64_t rmax = static_cast<std::int64_t>(std::sqrt(double(4 * n * m))) + 2 * m + 1;
        for (std::int64_t r = -rmax; r <= rmax; ++r) {
            Rational nv = rat(n) - rat(r * r, 4 * m);
            Rational c = f.coeff_n(mod_pos(r, 2 * m), nv);
            if (c != 0)
                phi.set_coeff(n, r, c);
        }
    }
    return phi;
}

namespace {

QSeries scalar_to_two_var(const QSeries& f)
{
    QSeries g(2, f.prec());
    for (const auto& [k, v] : f.terms())
        g.set_coeff(k.first, 0, v);
    return g;
}

} // namespace

JacobiForm jacobi_phi_10_1(std::int64_t prec)
{
    JacobiForm e41 = jacobi_eisenstein(4, 1, prec);
    JacobiForm e61 = jacobi_eisenstein(6, 1, prec);
    QSeries e4 = eisenstein_series(4, prec);
    QSeries e6 = eisenstein_series(6, prec);
    JacobiForm num = e41.mul_scalar(e6, 6) - e61.mul_scalar(e4, 4);
    return num.scaled(rat(1, 144));
}

JacobiForm jacobi_phi_12_1(std::int64_t prec)
{
    JacobiForm e41 = jacobi_eisenstein(4, 1, prec);
    JacobiForm e61 = jacobi_eisenstein(6, 1, prec);
    QSeries e4 = eisenstein_series(4, prec);
    QSeries e6 = eisenstein_series(6, prec);
    JacobiForm num = e41.mul_scalar(e4 * e4, 8) - e61.mul_scalar(e6, 6);
    return num.scaled(rat(1, 144));
}

JacobiForm weak_jacobi_m2_1(std::int64_t prec)
{
    return jacobi_div_delta(jacobi_phi_10_1(prec + 2), false);
}

JacobiForm weak_jacobi_0_1(std::int64_t prec)
{
    return jacobi_div_delta(jacobi_phi_12_1(prec + 2), false);
}

JacobiForm jacobi_phi_8_2(std::int64_t prec)
{
    JacobiForm e41 = jacobi_eisenstein(4, 1, prec);
    JacobiForm e42 = jacobi_eisenstein(4, 2, prec);
    QSeries e4 = eisenstein_series(4, prec);
    JacobiForm num = e42.mul_scalar(e4, 4) - e41.mul(e41);
    return num.scaled(rat(1, 12));
}

JacobiForm jacobi_phi_10_2(std::int64_t prec)
{
    JacobiForm e42 = jacobi_eisenstein(4, 2, prec);
    JacobiForm e41 = jacobi_eisenstein(4, 1, prec);
    JacobiForm e61 = jacobi_eisenstein(6, 1, prec);
    QSeries e6 = eisenstein_series(6, prec);
    JacobiForm num = e42.mul_scalar(e6, 6) - e41.mul(e61);
    return num.scaled(rat(1, 12));
}

JacobiForm jacobi_phi_11_2(std::int64_t prec, int phi11_sign)
{
    JacobiForm e41 = jacobi_eisenstein(4, 1, prec);
    JacobiForm e61 = jacobi_eisenstein(6, 1, prec);
    JacobiForm num = jacobi_zderiv(e41).mul(e61) - e41.mul(jacobi_zderiv(e61));
    return num.scaled(rat(phi11_sign, 144));
}

JacobiForm jacobi_phi_12_2(std::int64_t prec)
{
    JacobiForm e42 = jacobi_eisenstein(4, 2, prec);
    JacobiForm e62 = jacobi_eisenstein(6, 2, prec);
    QSeries e4 = eisenstein_series(4, prec);
    QSeries e6 = eisenstein_series(6, prec);
    JacobiForm num = e42.mul_scalar(e4 * e4, 8) - e62.mul_scalar(e6, 6);
    return num.scaled(rat(1, 24));
}

JacobiForm jacobi_phi_6_3(std::int64_t prec)
{
    return jacobi_div_delta(jacobi_phi_10_1(prec + 2).mul(jacobi_phi_8_2(prec + 2)));
}

JacobiForm jacobi_phi_8_3(std::int64_t prec)
{
    JacobiForm e43 = jacobi_eisenstein(4, 3, prec);
    JacobiForm e41 = jacobi_eisenstein(4, 1, prec);
    JacobiForm e42 = jacobi_eisenstein(4, 2, prec);
    QSeries e4 = eisenstein_series(4, prec);
    JacobiForm num = e43.mul_scalar(e4, 4) - e41.mul(e42);
    return num.scaled(rat(1, 2));
}

JacobiForm jacobi_phi_9_3(std::int64_t prec, int phi11_sign)
{
    return jacobi_div_delta(jacobi_phi_10_1(prec + 2).mul(jacobi_phi_11_2(prec + 2, phi11_sign)));
}

JacobiForm jacobi_phi_10_3(std::int64_t prec)
{
    return jacobi_div_delta(jacobi_phi_10_2(prec + 2).mul(jacobi_phi_12_1(prec + 2)));
}

JacobiForm jacobi_phi_11_3(std::int64_t prec, int phi11_sign)
{
    return jacobi_div_delta(jacobi_phi_11_2(prec + 2, phi11_sign).mul(jacobi_phi_12_1(prec + 2)));
}

JacobiForm jacobi_phi_12_3(std::int64_t prec)
{
    JacobiForm e41 = jacobi_eisenstein(4, 1, prec);
    JacobiForm e42 = jacobi_eisenstein(4, 2, prec);
    JacobiForm e43 = jacobi_eisenstein(4, 3, prec);
    JacobiForm e61 = jacobi_eisenstein(6, 1, prec);
    JacobiForm e62 = jacobi_eisenstein(6, 2, prec);
    QSeries e4 = eisenstein_series(4, prec);
    JacobiForm first = e41.mul(e42).mul_scalar(e4, 4) + e43.mul_scalar(e4 * e4, 8);
    return first.scaled(rat(1, 2)) - e61.mul(e62);
}

int jacobi_dim(int k, std::int64_t m)
{
    if (k < 4 || k % 2)
        throw usage_error("jacobi_dim covers even k >= 4");
    int d = dim_mk_level1(k);
    for (std::int64_t j = 1; j <= m; ++j)
        d += dim_sk_level1(k + static_cast<int>(2 * j));
    return d;
}

std::vector<VVForm> jacobi_vv_basis(const FQM& fqm, const Rational& weight, std::int64_t jprec)
{
    std::int64_t m = fqm.order() / 2;
    Rational kq = weight + rat(1, 2);
    if (kq.get_den() != 1)
        throw usage_error("Jacobi-side weight must be k - 1/2");
    long k = kq.get_num().get_si();
    if (k % 2 || k < 4)
        throw usage_error("Jacobi bases are built for even weight k >= 4");

    std::int64_t prec = jprec + m + 1;
    JacobiForm a = weak_jacobi_m2_1(prec); // weight -2, index 1
    JacobiForm b = weak_jacobi_0_1(prec);  // weight 0, index 1
    QSeries e4 = eisenstein_series(4, prec);
    QSeries e6 = eisenstein_series(6, prec);
    QSeries delta = delta_series(prec);

    // weight-w level-one monomial basis E4^a E6^b Delta^c, b <= 1
    auto level_one_basis = [&](int w) {
        std::vector<QSeries> out;
        if (w < 0 || w % 2)
            return out;
        for (int c = 0; 12 * c <= w; ++c)
            for (int bb = 0; bb <= 1; ++bb) {
                int rem = w - 12 * c - 6 * bb;
                if (rem < 0 || rem % 4)
                    continue;
                int aa = rem / 4;
                QSeries t = QSeries::one(1, prec);
                for (int i = 0; i < aa; ++i)
                    t = t * e4;
                for (int i = 0; i < bb; ++i)
                    t = t * e6;
                for (int i = 0; i < c; ++i)
                    t = t * delta;
                out.push_back(t);
            }
        return out;
    };

    // pool of weak forms of weight k, index m: a^ia b^ib f with f level one
    std::vector<JacobiForm> pool;
    for (std::int64_t ia = 0; ia <= m; ++ia) {
        std::int64_t ib = m - ia;
        bool started = false;
        JacobiForm acc;
        for (std::int64_t i = 0; i < ia; ++i) {
            acc = started ? acc.mul(a) : a;
            started = true;
        }
        for (std::int64_t i = 0; i < ib; ++i) {
            acc = started ? acc.mul(b) : b;
            started = true;
        }
        int wt = static_cast<int>(k) + 2 * static_cast<int>(ia);
        for (const auto& f : level_one_basis(wt))
            pool.push_back(acc.mul_scalar(f, wt));
    }

    // singular coordinates: 4nm - r^2 < 0 support appearing in the pool
    std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> sing_index;
    for (const auto& f : pool)
        for (const auto& [key, v] : f.series().terms())
            if (4 * key.first * m - key.second * key.second < 0 && key.first < jprec)
                sing_index.emplace(key, 0);
    std::size_t w = 0;
    for (auto& [key, idx] : sing_index)
        idx = w++;

    std::vector<QVec> rows;
    for (const auto& f : pool) {
        QVec row(w, Rational(0));
        for (const auto& [key, v] : f.series().terms()) {
            auto it = sing_index.find(key);
            if (it != sing_index.end())
                row[it->second] = v;
        }
        rows.push_back(std::move(row));
    }
    auto kernel = kernel_of_rows(rows);

    std::vector<VVForm> out;
    Echelon ech(static_cast<std::size_t>(fqm.order() * jprec));
    for (const auto& coeffs : kernel) {
        JacobiForm g(static_cast<int>(k), m, QSeries(2, prec));
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (coeffs[i] != 0)
                g = g + pool[i].scaled(coeffs[i]);
        if (g.is_zero())
            continue;
        VVForm f = jacobi_to_vv(g, jprec);
        if (ech.insert(f.to_qvec(0, jprec)))
            out.push_back(std::move(f));
    }
    return out;
}

} // namespace hmf
