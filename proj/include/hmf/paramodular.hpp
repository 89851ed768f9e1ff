#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hmf/jacobi.hpp"
#include "hmf/linalg.hpp"
#include "hmf/qseries.hpp"

namespace hmf {

// Fourier expansion of a Siegel/paramodular form of level l: coefficients
// c(n, r, m) with the third slot pre-divided by l, so Fourier-Jacobi slices at
// fixed m are Jacobi forms of index m*l. Support satisfies 4nml - r^2 >= 0.
// Indices are kept for n + m <= prec.
class ParamExp {
public:
    struct Key {
        std::int64_t n, r, m;
        auto operator<=>(const Key&) const = default;
    };

    ParamExp() = default;
    ParamExp(std::int64_t level, int weight, std::int64_t prec)
        : level_(level), weight_(weight), prec_(prec)
    {
    }

    std::int64_t level() const { return level_; }
    int weight() const { return weight_; }
    std::int64_t prec() const { return prec_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<Key, Rational>& terms() const { return c_; }

    Rational coeff(std::int64_t n, std::int64_t r, std::int64_t m) const;
    void set_coeff(std::int64_t n, std::int64_t r, std::int64_t m, const Rational& v);

    ParamExp operator+(const ParamExp& o) const;
    ParamExp operator-(const ParamExp& o) const;
    ParamExp scaled(const Rational& c) const;
    ParamExp operator*(const ParamExp& o) const; // same level, weights add
    bool operator==(const ParamExp& o) const;

    // Fourier-Jacobi slice at the given m (a Jacobi form of index m*level).
    JacobiForm fourier_jacobi(std::int64_t m) const;

    // Restriction to the diagonal weighted by r^N: (n,m) -> sum_r r^N c(n,r,m),
    // a two-variable series in (q1, q2).
    QSeries diagonal_taylor(int N) const;
    // Least N <= maxN with nonzero diagonal_taylor; nullopt if all vanish.
    std::optional<int> diagonal_order(int maxN) const;

    QVec to_qvec() const; // dense over the sorted support lattice of this prec/level
    std::string str() const;

private:
    std::int64_t level_ = 1;
    int weight_ = 0;
    std::int64_t prec_ = 0;
    std::map<Key, Rational> c_;
};

// Arithmetic (Gritsenko) lift of a holomorphic Jacobi form of index l = level,
// weight k >= 2. Eisenstein-type inputs produce the boundary Eisenstein terms
// with constant -B_k/2k c(0,0).
ParamExp gritsenko_lift(const JacobiForm& phi, std::int64_t prec);

// Named generators of M_*(K(level)) for level 1, 2, 3, built as Gritsenko
// lifts (plus the normalized Eisenstein series E4, E6). Names and weights of
// the excluded lift-of-nearly-holomorphic generators are registered alongside.
struct GeneratorCatalog {
    std::int64_t level = 1;
    std::vector<std::string> names; // in catalog order
    std::map<std::string, ParamExp> forms;
    std::map<std::string, int> registered_only; // name -> weight (psi35 / f12)

    const ParamExp& at(const std::string& name) const;
};

GeneratorCatalog generator_catalog(std::int64_t level, std::int64_t prec, int phi11_sign);

// Expresses target as a linear combination of the given forms (coefficient
// vectors over the common support); nullopt certifies failure at this precision.
std::optional<QVec> param_linear_solve(const ParamExp& target, const std::vector<ParamExp>& basis);

} // namespace hmf
