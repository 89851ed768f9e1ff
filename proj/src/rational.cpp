#include "hmf/rational.hpp"

namespace hmf {

Rational parse_rational(const std::string& s)
{
    if (s.empty())
        throw usage_error("empty rational literal");
    try {
        Rational r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw usage_error("malformed rational literal: " + s);
    }
}

Int int_pow(const Int& base, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int binomial(unsigned long n, unsigned long k)
{
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int kronecker(std::int64_t a, std::int64_t n)
{
    mpz_class za(static_cast<long>(a)), zn(static_cast<long>(n));
    return mpz_kronecker(za.get_mpz_t(), zn.get_mpz_t());
}

} // namespace hmf
