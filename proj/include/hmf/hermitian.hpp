#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hmf/paramodular.hpp"
#include "hmf/vvform.hpp"

namespace hmf {

// Enumeration of the Fourier support of Hermitian expansions over the field of
// discriminant d: indices (a, t, b) with a, b >= 0, a + b <= trace bound, and
// t = (x + y w)/sqrt(d) in the codifferent with norm N(t) <= ab. Shared by all
// expansions of a given (d, bound).
class HermIndexTable {
public:
    struct Idx {
        std::int32_t a, x, y, b;
    };

    HermIndexTable(std::int64_t d, std::int64_t bound);

    std::int64_t disc() const { return d_; }
    std::int64_t p() const { return p_; }
    std::int64_t bound() const { return bound_; }
    const std::vector<Idx>& indices() const { return list_; }
    std::size_t size() const { return list_.size(); }

    // position of (a, x, y, b), or npos when outside the support/window
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t position(std::int64_t a, std::int64_t x, std::int64_t y, std::int64_t b) const;

    // |d| * N(t) = x^2 + xy + y^2 (1-d)/4
    std::int64_t norm_num(std::int64_t x, std::int64_t y) const;
    // class of t in the discriminant group: x - y(d-1)/2 mod |d|
    std::int64_t fqm_label(std::int64_t x, std::int64_t y) const;
    // codifferent conjugation in these coordinates
    static std::pair<std::int64_t, std::int64_t> conj(std::int64_t x, std::int64_t y)
    {
        return {-(x + y), y};
    }

private:
    std::int64_t d_, p_, bound_;
    std::vector<Idx> list_;
    // per (a,b): base offset and per-y rows
    struct Row {
        std::int64_t xmin, xmax;
        std::size_t start;
    };
    struct Block {
        std::int64_t ymin, ymax;
        std::vector<Row> rows;
    };
    std::vector<Block> blocks_; // indexed by a * (bound+1) + b
};

std::shared_ptr<const HermIndexTable> herm_index_table(std::int64_t d, std::int64_t bound);

// Fourier expansion of a Hermitian modular form, stored densely over the index
// table with a common denominator.
class HermExp {
public:
    HermExp() = default;
    HermExp(std::shared_ptr<const HermIndexTable> table, int weight);

    const HermIndexTable& table() const { return *table_; }
    std::shared_ptr<const HermIndexTable> table_ptr() const { return table_; }
    std::int64_t disc() const { return table_->disc(); }
    int weight() const { return weight_; }
    const std::string& name() const { return name_; }
    void set_name(const std::string& n) { name_ = n; }

    bool is_zero() const;
    Rational coeff(std::int64_t a, std::int64_t x, std::int64_t y, std::int64_t b) const;
    void set_coeff(std::int64_t a, std::int64_t x, std::int64_t y, std::int64_t b,
                   const Rational& v);

    HermExp operator+(const HermExp& o) const;
    HermExp operator-(const HermExp& o) const;
    HermExp scaled(const Rational& c) const;
    HermExp operator*(const HermExp& o) const; // same field; weights add
    bool operator==(const HermExp& o) const;

    // flattened rational coefficients in table order (for linear algebra)
    QVec to_qvec() const;
    // restriction of the vector to indices of trace <= cut
    QVec to_qvec_trace(std::int64_t cut) const;

    std::string str() const;

    const Int& raw_den() const { return den_; }
    const std::vector<Int>& raw_num() const { return num_; }
    void normalize(); // divide out gcd(num, den)

private:
    std::shared_ptr<const HermIndexTable> table_;
    int weight_ = 0;
    Int den_ = 1;
    std::vector<Int> num_;
    std::string name_;
};

enum class SymmetryType { symmetric, skew, neither };

// Graded symmetry under transposition: c(a, conj t, b) = +-(-1)^k c(a, t, b).
SymmetryType symmetry_type(const HermExp& f);

// Maass lift of a holomorphic vector-valued input of weight k - 1; odd k
// requires c(0,0) = 0. Coefficient law: c(a,t,b) = sum over n dividing the
// content of (a,t,b) of n^{k-1} c_F((ab - N(t))/n^2, [t/n]); boundary terms
// come from -B_k/2k c(0,0)(E_k(tau) + E_k(w) - 1).
HermExp maass_lift(const VVForm& f, int k, const std::shared_ptr<const HermIndexTable>& table);

// Transverse Taylor slice of order N along the norm-l embedding given by
// lambda = lx + ly*w: paramodular coefficients
//   c(n, r, m) = sum over t with Tr(t conj(lambda)) = r of iota(t)^N c(n,t,m)
// with iota(t) = Tr(t conj(lambda) sqrt(d)).
ParamExp pullback(const HermExp& f, std::int64_t ell, std::int64_t lx, std::int64_t ly, int N);

// Least N <= maxN with a nonzero order-N slice along the divisor (nullopt when
// all slices vanish at this precision).
std::optional<int> vanishing_order(const HermExp& f, std::int64_t ell, std::int64_t lx,
                                   std::int64_t ly, int maxN);

// Exact division in the expansion ring; throws math_error when F is not
// divisible by G within the working precision (a meaningful outcome).
HermExp herm_divide(const HermExp& f, const HermExp& g);

} // namespace hmf
