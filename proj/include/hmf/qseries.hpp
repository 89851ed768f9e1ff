#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hmf/rational.hpp"

namespace hmf {

// Truncated Fourier/power series in one or two variables with exact rational
// coefficients. The first exponent is the truncation coordinate: every stored
// exponent satisfies e0 < prec. Exponents may be negative (Laurent behavior);
// for two-variable series the second coordinate is always Laurent.
class QSeries {
public:
    using Key = std::pair<std::int64_t, std::int64_t>;

    QSeries() : vars_(1), prec_(0) {}
    QSeries(int vars, std::int64_t prec);

    static QSeries zero(int vars, std::int64_t prec) { return QSeries(vars, prec); }
    static QSeries one(int vars, std::int64_t prec);
    static QSeries monomial(std::int64_t e0, const Rational& c, std::int64_t prec);
    static QSeries monomial2(std::int64_t e0, std::int64_t e1, const Rational& c, std::int64_t prec);

    int vars() const { return vars_; }
    std::int64_t prec() const { return prec_; }
    bool is_zero() const { return c_.empty(); }
    std::size_t term_count() const { return c_.size(); }

    Rational coeff(std::int64_t e0, std::int64_t e1 = 0) const;
    void set_coeff(std::int64_t e0, const Rational& v) { set_coeff(e0, 0, v); }
    void set_coeff(std::int64_t e0, std::int64_t e1, const Rational& v);

    const std::map<Key, Rational>& terms() const { return c_; }

    // Lowest exponent in the truncation coordinate; throws math_error if zero.
    std::int64_t low_exponent() const;

    QSeries truncated(std::int64_t prec) const;
    // Substitutes q -> q^t in the truncation variable (t >= 1).
    QSeries dilated(std::int64_t t) const;
    // Coefficient-wise multiply by the truncation exponent: (2 pi i)^{-1} d/dtau.
    QSeries qdq() const;
    // Multiplies by a single monomial q^e0 (second variable shift s1 for 2-var).
    QSeries shifted(std::int64_t e0, std::int64_t e1 = 0) const;
    QSeries scaled(const Rational& c) const;
    // Swaps the two variables and re-truncates (two-variable series only).
    QSeries swapped() const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    QSeries operator-() const;
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    bool operator==(const QSeries& o) const;

    std::string str(const std::string& v0 = "q", const std::string& v1 = "z") const;

private:
    int vars_;
    std::int64_t prec_;
    std::map<Key, Rational> c_; // no stored zeros

    static void check_compatible(const QSeries& a, const QSeries& b);
};

// a/b up to the common truncation. b must have an invertible lowest term: for
// one variable a nonzero rational, for two variables a single monomial in its
// lowest truncation slice. The quotient picks up the exponent shift of the
// leading terms, so nearly-holomorphic quotients like 1/Delta are representable.
QSeries ps_div(const QSeries& a, const QSeries& b);

// Tensor product f(q1) * g(q2) of two one-variable series as a two-variable series.
QSeries tensor_product(const QSeries& f, const QSeries& g);

Int sigma(std::int64_t n, unsigned k); // divisor power sum
Int divisor_count(std::int64_t n);

// Level-one series: E2, E4, E6, general even-weight Ek, Delta, Theta.
QSeries eisenstein_series(unsigned k, std::int64_t prec);
QSeries delta_series(std::int64_t prec);
QSeries theta_series(std::int64_t prec);

// Lookup by name: "E2", "E4", "E6", "E<k>", "Delta", "Theta".
QSeries classical_series(const std::string& name, std::int64_t prec);

} // namespace hmf
