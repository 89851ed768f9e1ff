#include "hmf/fqm.hpp"

#include <cmath>
#include <numeric>

namespace hmf {

FQM::FQM(std::int64_t order, std::vector<Rational> qvals, int signature)
    : n_(order), sig_(mod_pos(signature, 8)), qvals_(std::move(qvals))
{
    if (n_ < 1 || qvals_.size() != static_cast<std::size_t>(n_))
        throw usage_error("FQM needs one Q-value per group element");
    for (std::int64_t g = 0; g < n_; ++g)
        if (q(g) != q(neg(g)))
            throw usage_error("Q(-gamma) must equal Q(gamma)");
}

Rational FQM::bilinear(std::int64_t beta, std::int64_t gamma) const
{
    Rational b = q(beta + gamma) - q(beta) - q(gamma);
    // reduce mod 1 into [0,1)
    Int num = b.get_num(), den = b.get_den();
    Int flo;
    mpz_fdiv_q(flo.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return b - Rational(flo);
}

FQM fqm_for_field(std::int64_t d)
{
    if (d != -7 && d != -11)
        throw usage_error("unsupported field discriminant");
    std::int64_t p = -d;
    std::vector<Rational> qv(static_cast<std::size_t>(p));
    for (std::int64_t k = 0; k < p; ++k)
        qv[static_cast<std::size_t>(k)] = rat(mod_pos(k * k, p), p);
    return FQM(p, std::move(qv), 2);
}

FQM fqm_for_jacobi_index(std::int64_t m)
{
    if (m < 1)
        throw usage_error("Jacobi index must be >= 1");
    std::int64_t n = 2 * m;
    std::vector<Rational> qv(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k)
        qv[static_cast<std::size_t>(k)] = rat(mod_pos(k * k, 4 * m), 4 * m);
    return FQM(n, std::move(qv), 1);
}

std::vector<Int> cyclotomic_poly(std::int64_t L)
{
    // (x^L - 1) / prod_{d | L, d < L} Phi_d, computed recursively.
    static std::map<std::int64_t, std::vector<Int>> cache;
    auto it = cache.find(L);
    if (it != cache.end())
        return it->second;
    std::vector<Int> num(static_cast<std::size_t>(L) + 1, Int(0));
    num.front() = -1;
    num.back() = 1;
    for (std::int64_t d = 1; d < L; ++d) {
        if (L % d)
            continue;
        auto phi_d = cyclotomic_poly(d);
        // exact polynomial division num /= phi_d
        std::vector<Int> quot(num.size() - phi_d.size() + 1, Int(0));
        for (std::size_t i = quot.size(); i-- > 0;) {
            Int c = num[i + phi_d.size() - 1] / phi_d.back();
            quot[i] = c;
            if (c != 0)
                for (std::size_t j = 0; j < phi_d.size(); ++j)
                    num[i + j] -= c * phi_d[j];
        }
        num = std::move(quot);
    }
    cache[L] = num;
    return num;
}

void Cyclo::add_term(std::int64_t e, const Rational& v)
{
    if (v == 0)
        return;
    e = mod_pos(e, order_);
    auto it = c_.find(e);
    if (it == c_.end())
        c_.emplace(e, v);
    else {
        it->second += v;
        if (it->second == 0)
            c_.erase(it);
    }
}

void Cyclo::reduce()
{
    auto phi = cyclotomic_poly(order_);
    std::int64_t deg = static_cast<std::int64_t>(phi.size()) - 1;
    // reduce exponents >= deg by the monic relation zeta^deg = -sum phi_j zeta^j
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            if (it->first < deg)
                break;
            std::int64_t e = it->first;
            Rational v = it->second;
            c_.erase(e);
            for (std::int64_t j = 0; j < deg; ++j)
                if (phi[static_cast<std::size_t>(j)] != 0)
                    add_term(e - deg + j, -v * Rational(phi[static_cast<std::size_t>(j)]));
            changed = true;
            break;
        }
    }
}

Cyclo Cyclo::root_power(std::int64_t order, std::int64_t e)
{
    Cyclo c(order);
    c.add_term(e, Rational(1));
    c.reduce();
    return c;
}

Cyclo Cyclo::rational(std::int64_t order, const Rational& v)
{
    Cyclo c(order);
    c.add_term(0, v);
    return c;
}

Cyclo Cyclo::operator+(const Cyclo& o) const
{
    if (order_ != o.order_)
        throw usage_error("cyclotomic order mismatch");
    Cyclo r = *this;
    for (const auto& [e, v] : o.c_)
        r.add_term(e, v);
    return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + o.scaled(Rational(-1)); }

Cyclo Cyclo::operator*(const Cyclo& o) const
{
    if (order_ != o.order_)
        throw usage_error("cyclotomic order mismatch");
    Cyclo r(order_);
    for (const auto& [ea, va] : c_)
        for (const auto& [eb, vb] : o.c_)
            r.add_term(ea + eb, va * vb);
    r.reduce();
    return r;
}

Cyclo Cyclo::scaled(const Rational& s) const
{
    Cyclo r(order_);
    if (s == 0)
        return r;
    for (const auto& [e, v] : c_)
        r.c_.emplace(e, v * s);
    return r;
}

bool Cyclo::operator==(const Cyclo& o) const { return order_ == o.order_ && c_ == o.c_; }

std::complex<double> Cyclo::to_complex() const
{
    std::complex<double> z(0.0, 0.0);
    const double pi = 3.14159265358979323846;
    for (const auto& [e, v] : c_)
        z += v.get_d() * std::exp(std::complex<double>(0.0, 2.0 * pi * double(e) / double(order_)));
    return z;
}

Cyclo sqrt_as_cyclo(std::int64_t n, std::int64_t L)
{
    if (n < 1)
        throw usage_error("sqrt_as_cyclo needs n >= 1");
    Cyclo acc = Cyclo::rational(L, Rational(1));
    // peel square factors, then express sqrt of each remaining prime
    std::int64_t m = n;
    for (std::int64_t p = 2; p * p <= m; ++p)
        while (m % (p * p) == 0) {
            acc = acc * Cyclo::rational(L, rat(p));
            m /= p * p;
        }
    for (std::int64_t p = 2; p <= m; ++p) {
        if (m % p)
            continue;
        m /= p;
        if (p == 2) {
            if (L % 8)
                throw usage_error("sqrt(2) needs zeta_8");
            // sqrt(2) = zeta_8 + zeta_8^{-1}
            Cyclo s = Cyclo::root_power(L, L / 8) + Cyclo::root_power(L, L - L / 8);
            acc = acc * s;
        } else {
            if (L % p)
                throw usage_error("sqrt(p) needs zeta_p");
            // Gauss sum: sum_k (k|p) zeta_p^k equals sqrt(p) for p=1 mod 4,
            // i*sqrt(p) for p=3 mod 4.
            Cyclo g(L);
            for (std::int64_t k = 1; k < p; ++k) {
                int chi = kronecker(k, p);
                g = g + Cyclo::root_power(L, k * (L / p)).scaled(rat(chi));
            }
            if (p % 4 == 3) {
                if (L % 4)
                    throw usage_error("sqrt(p), p = 3 mod 4, needs i");
                Cyclo minus_i = Cyclo::root_power(L, 3 * (L / 4));
                g = g * minus_i;
            }
            acc = acc * g;
        }
    }
    return acc;
}

WeilMatrices weil_matrices(const FQM& fqm)
{
    WeilMatrices w;
    w.N = fqm.order();
    w.root_order = std::lcm<std::int64_t>(8, 2 * fqm.order());
    std::int64_t L = w.root_order;
    auto n = static_cast<std::size_t>(w.N);
    w.t.assign(n, std::vector<Cyclo>(n, Cyclo(L)));
    w.s_tilde.assign(n, std::vector<Cyclo>(n, Cyclo(L)));
    auto root_of_fraction = [L](const Rational& x) {
        // e^{2 pi i x} with x = a/b, b | L
        Int num = x.get_num(), den = x.get_den();
        if (L % den.get_si())
            throw usage_error("root order does not divide lcm(8,2N)");
        std::int64_t e = num.get_si() * (L / den.get_si());
        return Cyclo::root_power(L, e);
    };
    for (std::size_t g = 0; g < n; ++g)
        w.t[g][g] = root_of_fraction(-fqm.q(static_cast<std::int64_t>(g)));
    // The stored signature tag measures the positive-definite lattice; the
    // representation acting on the input forms carries the conjugate phase
    // e^{-pi i (-sig)/4} = e^{2 pi i sig/8} (the group relations below fail
    // with the other orientation).
    Cyclo phase = Cyclo::root_power(L, mod_pos(fqm.signature(), 8) * (L / 8));
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t g = 0; g < n; ++g) {
            Cyclo e = root_of_fraction(fqm.bilinear(static_cast<std::int64_t>(b),
                                                    static_cast<std::int64_t>(g)));
            w.s_tilde[b][g] = phase * e;
        }
    return w;
}

std::vector<std::vector<Cyclo>> cyclo_mat_mul(const std::vector<std::vector<Cyclo>>& a,
                                              const std::vector<std::vector<Cyclo>>& b)
{
    std::size_t n = a.size();
    std::int64_t L = a[0][0].order();
    std::vector<std::vector<Cyclo>> r(n, std::vector<Cyclo>(n, Cyclo(L)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[k][j].is_zero())
                    continue;
                r[i][j] = r[i][j] + a[i][k] * b[k][j];
            }
        }
    return r;
}

} // namespace hmf
