#include "hmf/bernoulli.hpp"

#include <algorithm>

#include "hmf/qseries.hpp"

namespace hmf {

Rational bernoulli(unsigned n)
{
    static std::vector<Rational> cache{Rational(1), rat(-1, 2)};
    while (cache.size() <= n) {
        // sum_{k=0}^{m} C(m+1,k) B_k = 0  =>  B_m
        unsigned m = static_cast<unsigned>(cache.size());
        Rational acc(0);
        for (unsigned k = 0; k < m; ++k)
            acc += Rational(binomial(m + 1, k)) * cache[k];
        Rational bm = -acc / Rational(binomial(m + 1, m));
        bm.canonicalize();
        cache.push_back(bm);
    }
    return cache[n];
}

Rational bernoulli_poly(unsigned n, const Rational& x)
{
    Rational acc(0);
    Rational xp(1);
    // B_n(x) = sum_k C(n,k) B_{n-k} x^k
    for (unsigned k = 0; k <= n; ++k) {
        acc += Rational(binomial(n, k)) * bernoulli(n - k) * xp;
        xp *= x;
    }
    return acc;
}

bool is_fundamental_discriminant(std::int64_t D)
{
    if (D == 1)
        return true;
    auto squarefree = [](std::int64_t m) {
        if (m < 0)
            m = -m;
        for (std::int64_t p = 2; p * p <= m; ++p)
            if (m % (p * p) == 0)
                return false;
        return true;
    };
    std::int64_t r = mod_pos(D, 4);
    if (r == 1)
        return squarefree(D);
    if (r == 0) {
        std::int64_t m = D / 4;
        std::int64_t rm = mod_pos(m, 4);
        return (rm == 2 || rm == 3) && squarefree(m);
    }
    return false;
}

Rational bernoulli_chi(unsigned n, std::int64_t D)
{
    if (D == 1)
        return bernoulli(n);
    if (!is_fundamental_discriminant(D))
        throw usage_error("bernoulli_chi needs a fundamental discriminant");
    std::int64_t f = D > 0 ? D : -D;
    Rational acc(0);
    for (std::int64_t a = 1; a <= f; ++a) {
        int chi = kronecker(D, a);
        if (chi == 0)
            continue;
        acc += rat(chi) * bernoulli_poly(n, rat(a, f));
    }
    Rational scale(int_pow(Int(static_cast<long>(f)), n >= 1 ? n - 1 : 0));
    return acc * scale;
}

int moebius(std::int64_t n)
{
    if (n < 1)
        throw usage_error("moebius needs n >= 1");
    int mu = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        mu = -mu;
    }
    if (n > 1)
        mu = -mu;
    return mu;
}

Rational cohen_h(unsigned r, std::int64_t N)
{
    if (r == 0)
        throw usage_error("cohen_h needs r >= 1");
    if (N < 0)
        return Rational(0);
    if (N == 0)
        return -bernoulli(2 * r) / rat(2 * static_cast<long>(r));
    std::int64_t M = (r % 2 == 0) ? N : -N;
    std::int64_t m4 = mod_pos(M, 4);
    if (m4 != 0 && m4 != 1)
        return Rational(0);
    // M = D f^2 with D fundamental (possibly D = 1).
    std::int64_t f = 1;
    std::int64_t abs_m = N;
    for (std::int64_t g = 1; g * g <= abs_m; ++g)
        if (abs_m % (g * g) == 0) {
            std::int64_t D = M / (g * g);
            if (is_fundamental_discriminant(D))
                f = std::max(f, g);
        }
    std::int64_t D = M / (f * f);

    Rational L = (D == 1) ? -bernoulli(r) / rat(static_cast<long>(r))
                          : -bernoulli_chi(r, D) / rat(static_cast<long>(r));
    Rational acc(0);
    for (std::int64_t d = 1; d <= f; ++d) {
        if (f % d)
            continue;
        int mu = moebius(d);
        if (mu == 0)
            continue;
        int chi = (D == 1) ? 1 : kronecker(D, d);
        if (chi == 0)
            continue;
        Rational term = rat(mu * chi) * Rational(int_pow(Int(static_cast<long>(d)), r - 1)) *
                        Rational(sigma(f / d, 2 * r - 1));
        acc += term;
    }
    return L * acc;
}

int dim_mk_level1(int k)
{
    if (k < 0 || k % 2)
        return 0;
    if (k % 12 == 2)
        return k / 12;
    return k / 12 + 1;
}

int dim_sk_level1(int k)
{
    if (k < 4 || k % 2)
        return 0;
    int m = dim_mk_level1(k);
    return m > 0 ? m - 1 : 0;
}

} // namespace hmf
