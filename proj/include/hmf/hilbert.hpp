#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hmf/rational.hpp"

namespace hmf {

using IntPoly = std::map<std::int64_t, Int>; // exponent -> coefficient, no zeros

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_neg(const IntPoly& a);
IntPoly poly_one_minus_tn(std::int64_t d);
std::string poly_str(const IntPoly& p, const std::string& var = "t");

// Rational function num / prod_i (1 - t^{d_i}), stored as given (no cancellation).
class HilbSeries {
public:
    HilbSeries() = default;
    explicit HilbSeries(IntPoly num, std::vector<std::int64_t> den = {});
    static HilbSeries zero() { return HilbSeries(); }
    static HilbSeries constant(const Int& c);
    static HilbSeries monomial(std::int64_t n, const Int& c = 1);
    // 1 / prod (1 - t^{d_i})
    static HilbSeries graded_free(const std::vector<std::int64_t>& degrees,
                                  IntPoly num = {{0, 1}});

    const IntPoly& num() const { return num_; }
    const std::vector<std::int64_t>& den() const { return den_; }

    HilbSeries operator+(const HilbSeries& o) const;
    HilbSeries operator-(const HilbSeries& o) const;
    HilbSeries operator*(const HilbSeries& o) const;
    HilbSeries operator-() const;
    HilbSeries shifted(std::int64_t n) const; // * t^n
    HilbSeries with_extra_den(std::int64_t d) const; // / (1 - t^d)

    // Taylor coefficients dim_0..dim_kmax, exact integers.
    std::vector<Int> expand(std::int64_t kmax) const;

    // Equality as rational functions (cross-multiplied polynomial identity).
    bool equals_rational(const HilbSeries& o) const;

    std::string str() const;

private:
    IntPoly num_;
    std::vector<std::int64_t> den_; // sorted factor degrees d_i >= 1
    IntPoly den_poly() const;
};

std::vector<Int> hilb_expand(const HilbSeries& h, std::int64_t kmax);

} // namespace hmf
