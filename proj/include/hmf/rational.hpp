#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace hmf {

using Int = mpz_class;
using Rational = mpq_class;

// Mathematical failure (inexact division, rank deficiency, ...) as opposed to
// a malformed request. The CLI maps usage_error -> exit 2, math_error -> exit 1.
struct math_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational rat(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Int& num, const Int& den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "a/b" or "a". Throws usage_error on malformed input.
Rational parse_rational(const std::string& s);

Int int_pow(const Int& base, unsigned long e);
Int binomial(unsigned long n, unsigned long k);

// Floor division / nonnegative remainder for int64 (n mod m in [0, m)).
inline std::int64_t mod_pos(std::int64_t n, std::int64_t m)
{
    std::int64_t r = n % m;
    return r < 0 ? r + m : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b);

// Kronecker symbol (a|n) for n != 0.
int kronecker(std::int64_t a, std::int64_t n);

} // namespace hmf
