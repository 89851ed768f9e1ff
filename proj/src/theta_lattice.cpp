#include "hmf/theta_lattice.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>

namespace hmf {

namespace {

using Mat = std::vector<std::vector<std::int64_t>>;

Mat a6_gram()
{
    Mat g(6, std::vector<std::int64_t>(6, 0));
    for (int i = 0; i < 6; ++i) {
        g[i][i] = 2;
        if (i + 1 < 6) {
            g[i][i + 1] = -1;
            g[i + 1][i] = -1;
        }
    }
    return g;
}

// D5 with basis e1-e2, e2-e3, e3-e4, e4-e5, e4+e5, glued to a norm-44 vector f
// by g = (1/2,...,1/2) + f/4; det 11.
Mat l11_gram()
{
    Mat g(6, std::vector<std::int64_t>(6, 0));
    // D5 block
    int cartan[5][5] = {
        {2, -1, 0, 0, 0},
        {-1, 2, -1, 0, 0},
        {0, -1, 2, -1, -1},
        {0, 0, -1, 2, 0},
        {0, 0, -1, 0, 2},
    };
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            g[i][j] = cartan[i][j];
    // glue vector: <glue, u_i> = <s, u_i>, s = (1/2,...,1/2)
    // u1..u4 are differences (pairing 0), u5 = e4 + e5 has <s,u5> = 1... recompute below.
    // With the basis ordering above: u1=e1-e2, u2=e2-e3, u3=e3-e4, u4=e4-e5, u5=e4+e5.
    std::int64_t glue_pairings[5] = {0, 0, 0, 0, 1};
    for (int i = 0; i < 5; ++i) {
        g[5][i] = glue_pairings[i];
        g[i][5] = glue_pairings[i];
    }
    g[5][5] = 4; // <s + f/4, s + f/4> = 5/4 + 44/16 = 4
    return g;
}

Int det6(const Mat& g)
{
    // Bareiss on a copy
    std::vector<std::vector<Int>> a(6, std::vector<Int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            a[i][j] = g[i][j];
    Int prev = 1;
    for (int k = 0; k < 5; ++k) {
        if (a[k][k] == 0)
            throw math_error("unexpected zero pivot in Gram determinant");
        for (int i = k + 1; i < 6; ++i)
            for (int j = k + 1; j < 6; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return a[5][5];
}

Mat adjugate6(const Mat& g, const Int& det)
{
    // p * G^{-1} via cofactors (6x6, exact).
    auto minor_det = [&](int row, int col) {
        std::vector<std::vector<Int>> a;
        for (int i = 0; i < 6; ++i) {
            if (i == row)
                continue;
            std::vector<Int> r;
            for (int j = 0; j < 6; ++j)
                if (j != col)
                    r.emplace_back(g[i][j]);
            a.push_back(std::move(r));
        }
        // 5x5 determinant by expansion (exact, small)
        std::function<Int(std::vector<std::vector<Int>>&)> det_rec =
            [&](std::vector<std::vector<Int>>& m) -> Int {
            std::size_t n = m.size();
            if (n == 1)
                return m[0][0];
            Int acc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (m[0][c] == 0)
                    continue;
                std::vector<std::vector<Int>> sub;
                for (std::size_t i = 1; i < n; ++i) {
                    std::vector<Int> r;
                    for (std::size_t j = 0; j < n; ++j)
                        if (j != c)
                            r.push_back(m[i][j]);
                    sub.push_back(std::move(r));
                }
                Int s = det_rec(sub);
                acc += ((c % 2) ? -m[0][c] : m[0][c]) * s;
            }
            return acc;
        };
        return det_rec(a);
    };
    Mat adj(6, std::vector<std::int64_t>(6, 0));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            Int c = minor_det(j, i);
            if ((i + j) % 2)
                c = -c;
            adj[i][j] = c.get_si();
        }
    (void)det;
    return adj;
}

} // namespace

SeedLattice::SeedLattice(std::int64_t field_disc)
{
    p_ = -field_disc;
    gram_ = (p_ == 7) ? a6_gram() : l11_gram();
    Int det = det6(gram_);
    if (det != Int(static_cast<long>(p_)))
        throw math_error("seed lattice has the wrong determinant");
    adj_ = adjugate6(gram_, det);

    // Isotropic pairs (a, b): equal norms, orthogonal. Search short vectors in
    // basis coordinates deterministically.
    std::vector<std::vector<std::int64_t>> shorts;
    for (int i0 = -2; i0 <= 2; ++i0)
        for (int i1 = -2; i1 <= 2; ++i1)
            for (int i2 = -2; i2 <= 2; ++i2)
                for (int i3 = -2; i3 <= 2; ++i3)
                    for (int i4 = -2; i4 <= 2; ++i4)
                        for (int i5 = -2; i5 <= 2; ++i5) {
                            std::vector<std::int64_t> v{i0, i1, i2, i3, i4, i5};
                            bool nz = false;
                            for (auto x : v)
                                nz = nz || x != 0;
                            if (!nz)
                                continue;
                            // first nonzero positive, to take one of each +-pair
                            for (auto x : v) {
                                if (x == 0)
                                    continue;
                                nz = x > 0;
                                break;
                            }
                            if (!nz)
                                continue;
                            std::int64_t n2 = 0;
                            for (int i = 0; i < 6; ++i)
                                for (int j = 0; j < 6; ++j)
                                    n2 += v[i] * gram_[i][j] * v[j];
                            if (n2 <= 8)
                                shorts.push_back(std::move(v));
                        }
    auto dot = [&](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
        std::int64_t s = 0;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                s += a[i] * gram_[i][j] * b[j];
        return s;
    };
    std::sort(shorts.begin(), shorts.end());
    // prefer pairs whose supports overlap: those have a nonvanishing
    // Aut-invariant component in odd degrees
    auto overlap = [](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
        for (int i = 0; i < 6; ++i)
            if (x[static_cast<std::size_t>(i)] != 0 && y[static_cast<std::size_t>(i)] != 0)
                return true;
        return false;
    };
    for (int want_overlap = 1; want_overlap >= 0; --want_overlap)
        for (std::size_t i = 0; i < shorts.size() && pairs_.size() < 4; ++i)
            for (std::size_t j = i + 1; j < shorts.size() && pairs_.size() < 4; ++j)
                if (dot(shorts[i], shorts[i]) == dot(shorts[j], shorts[j]) &&
                    dot(shorts[i], shorts[j]) == 0 &&
                    overlap(shorts[i], shorts[j]) == (want_overlap == 1))
                    pairs_.emplace_back(shorts[i], shorts[j]);
    if (pairs_.size() < 2)
        throw math_error("not enough isotropic pairs for harmonic seeds");
    singles_ = {
        {1, 0, 0, 0, 0, 0},
        {1, 1, 0, 0, 0, 0},
        {0, 1, 1, 1, 0, 0},
        {1, 0, 1, 0, 1, 0},
        {1, 1, 1, 1, 1, 1},
    };

    setup_labels(fqm_for_field(field_disc));
}

void SeedLattice::setup_labels(const FQM& fqm)
{
    // Coset label of a dual point m: the image of adj*m mod p is a line in
    // (Z/p)^6; fix the first coordinate functional that is nonzero on it.
    // Find a generator class: any m0 with adj*m0 != 0 mod p.
    label_row_.assign(6, 0);
    int row = -1;
    std::array<std::int64_t, 6> gen_m{};
    for (int basis = 0; basis < 6 && row < 0; ++basis) {
        std::array<std::int64_t, 6> m{};
        m[static_cast<std::size_t>(basis)] = 1;
        for (int i = 0; i < 6 && row < 0; ++i) {
            std::int64_t val = mod_pos(adj_[i][basis], p_);
            if (val != 0) {
                row = i;
                gen_m = m;
            }
        }
    }
    if (row < 0)
        throw math_error("could not locate the discriminant group generator");
    for (int j = 0; j < 6; ++j)
        label_row_[j] = mod_pos(adj_[row][j], p_);
    // normalize so the chosen generator gets label 1
    std::int64_t raw = 0;
    for (int j = 0; j < 6; ++j)
        raw = mod_pos(raw + label_row_[j] * gen_m[static_cast<std::size_t>(j)], p_);
    std::int64_t inv = 0;
    for (std::int64_t t = 1; t < p_; ++t)
        if (mod_pos(t * raw, p_) == 1)
            inv = t;
    label_unit_ = inv;

    // Q of the generator class: Q(x) = m^T adj m / (2p) for the dual point of
    // the generator.
    std::int64_t n2 = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            n2 += gen_m[static_cast<std::size_t>(i)] * adj_[i][j] * gen_m[static_cast<std::size_t>(j)];
    // q_gen = n2/(2p) mod 1, for the class labeled 1... the class labeled 1 is
    // gen scaled by nothing (label_unit_ normalizes the label, not the class).
    // Search the fqm relabeling sigma with fqm.q(sigma * k) = -Q_L(class k) for
    // all k; it is determined by k = 1.
    Rational qgen = rat(mod_pos(n2, 2 * p_), 2 * p_);
    // class labeled k corresponds to lattice class k * gen, with
    // Q_L = k^2 * qgen mod 1.
    std::int64_t sigma = 0;
    for (std::int64_t s = 1; s < p_ && sigma == 0; ++s) {
        bool ok = true;
        for (std::int64_t k = 1; k < p_ && ok; ++k) {
            Rational lhs = fqm.q(mod_pos(s * k, p_));
            Rational qlk = qgen * rat(mod_pos(k * k, p_) % p_);
            // reduce mod 1
            Int flo;
            mpz_fdiv_q(flo.get_mpz_t(), qlk.get_num().get_mpz_t(), qlk.get_den().get_mpz_t());
            qlk -= Rational(flo);
            Rational target = qlk == 0 ? Rational(0) : Rational(1) - qlk; // -Q_L mod 1
            ok = (lhs == target);
        }
        if (ok)
            sigma = s;
    }
    if (sigma == 0)
        throw math_error("discriminant form of the seed lattice does not match");
    iso_scale_ = sigma;
}

void SeedLattice::ensure_enumerated(std::int64_t qmax) const
{
    if (enumerated_to_ >= qmax)
        return;
    points_.clear();
    // Enumerate dual points m with m^T adj m <= 2 p qmax by exact recursive
    // descent; double arithmetic only suggests scan ranges (slack 2), each
    // candidate is checked exactly in integers.
    std::int64_t bound = 2 * p_ * qmax;
    // Cholesky of adj (rational, exact) for range estimates.
    double chol[6][6] = {};
    {
        double a[6][6];
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                a[i][j] = static_cast<double>(adj_[i][j]);
        for (int k = 0; k < 6; ++k) {
            chol[k][k] = a[k][k];
            for (int j = k + 1; j < 6; ++j)
                chol[k][j] = a[k][j] / a[k][k];
            for (int i = k + 1; i < 6; ++i)
                for (int j = k + 1; j < 6; ++j)
                    a[i][j] -= a[i][k] * a[k][j] / a[k][k];
        }
    }
    std::array<std::int64_t, 6> m{};
    auto norm2 = [&](const std::array<std::int64_t, 6>& v) {
        std::int64_t s = 0;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                s += v[static_cast<std::size_t>(i)] * adj_[i][j] * v[static_cast<std::size_t>(j)];
        return s;
    };
    // recursive scan with double-estimated boxes
    std::function<void(int, double)> rec = [&](int level, double remaining) {
        if (level < 0) {
            std::int64_t n2 = norm2(m);
            if (n2 > bound)
                return;
            bool all_zero = true;
            for (auto x : m)
                all_zero = all_zero && x == 0;
            if (all_zero)
                return;
            std::int64_t lab = 0;
            for (int j = 0; j < 6; ++j)
                lab = mod_pos(lab + label_row_[j] * m[static_cast<std::size_t>(j)], p_);
            lab = mod_pos(lab * label_unit_, p_);
            Point pt;
            for (int j = 0; j < 6; ++j)
                pt.m[static_cast<std::size_t>(j)] = static_cast<std::int16_t>(m[static_cast<std::size_t>(j)]);
            pt.norm2p = static_cast<std::int32_t>(n2);
            pt.label = static_cast<std::int8_t>(lab);
            points_.push_back(pt);
            return;
        }
        double center = 0;
        for (int j = level + 1; j < 6; ++j)
            center += chol[level][j] * static_cast<double>(m[static_cast<std::size_t>(j)]);
        double radius = std::sqrt(std::max(0.0, remaining) / chol[level][level]) + 2.0;
        auto lo = static_cast<std::int64_t>(std::floor(-center - radius));
        auto hi = static_cast<std::int64_t>(std::ceil(-center + radius));
        for (std::int64_t x = lo; x <= hi; ++x) {
            m[static_cast<std::size_t>(level)] = x;
            double used = chol[level][level] * (x + center) * (x + center);
            rec(level - 1, remaining - used);
        }
        m[static_cast<std::size_t>(level)] = 0;
    };
    rec(5, static_cast<double>(bound));
    enumerated_to_ = qmax;
}

void SeedLattice::ensure_buckets() const
{
    if (buckets_level_ >= enumerated_to_)
        return;
    pair_buckets_.assign(pairs_.size(), {});
    single_buckets_.assign(singles_.size(), {});
    for (const auto& pt : points_) {
        for (std::size_t t = 0; t < pairs_.size(); ++t) {
            std::int64_t u = 0, v = 0;
            for (int j = 0; j < 6; ++j) {
                u += pairs_[t].first[static_cast<std::size_t>(j)] * pt.m[static_cast<std::size_t>(j)];
                v += pairs_[t].second[static_cast<std::size_t>(j)] * pt.m[static_cast<std::size_t>(j)];
            }
            ++pair_buckets_[t][{pt.label, pt.norm2p, u, v}];
        }
        for (std::size_t t = 0; t < singles_.size(); ++t) {
            std::int64_t u = 0;
            for (int j = 0; j < 6; ++j)
                u += singles_[t][static_cast<std::size_t>(j)] * pt.m[static_cast<std::size_t>(j)];
            ++single_buckets_[t][{pt.label, pt.norm2p, u}];
        }
    }
    buckets_level_ = enumerated_to_;
}

std::vector<VVForm> SeedLattice::theta_seeds(int nu, std::int64_t jprec, const FQM& fqm) const
{
    ensure_enumerated(jprec + 1);
    ensure_buckets();
    std::vector<VVForm> out;

    auto write_form = [&](const std::map<std::pair<std::int64_t, std::int64_t>, Rational>& acc) {
        VVForm f = VVForm::make(fqm, rat(3 + nu), jprec);
        for (const auto& [key, val] : acc) {
            if (val == 0)
                continue;
            auto [label, n2p] = key;
            std::int64_t fl = mod_pos(iso_scale_ * label, p_);
            Rational n = rat(n2p, 2 * p_);
            Rational jq = n - f.alpha(fl);
            if (jq.get_den() != 1)
                throw math_error("theta exponent misaligned with component offsets");
            std::int64_t j = jq.get_num().get_si();
            if (j < jprec)
                f.set_coeff_single(fl, j, val);
        }
        if (!f.is_zero())
            out.push_back(std::move(f));
    };

    // Pair seeds: Re/Im of (<a,x> + i <b,x>)^nu with a, b orthogonal of equal
    // norm (the linear form is isotropic, so its powers are harmonic).
    for (const auto& buckets : pair_buckets_) {
        std::map<std::pair<std::int64_t, std::int64_t>, Rational> acc_re, acc_im;
        if (nu == 0)
            acc_re[{0, 0}] += 1; // zero vector
        for (const auto& [key, count] : buckets) {
            Int pr(1), pi(0);
            for (int t = 0; t < nu; ++t) {
                Int nr = pr * key[2] - pi * key[3];
                Int ni = pr * key[3] + pi * key[2];
                pr = std::move(nr);
                pi = std::move(ni);
            }
            auto slot = std::make_pair(key[0], key[1]);
            if (pr != 0)
                acc_re[slot] += Rational(pr) * rat(count);
            if (pi != 0)
                acc_im[slot] += Rational(pi) * rat(count);
        }
        write_form(acc_re);
        write_form(acc_im);
    }

    // Single-vector seeds: the harmonic projection of <w,x>^nu, i.e.
    // sum_j a_j N(x)^j <w,x>^{nu-2j} where the a_j solve the recurrence from
    //   Delta(N^j l^t) = (4j(j-1) + 2j dim + 4jt) N^{j-1} l^t
    //                    + t(t-1) |w|^2 N^j l^{t-2}.
    for (std::size_t s = 0; s < singles_.size(); ++s) {
        const auto& w = singles_[s];
        std::int64_t w2 = 0;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                w2 += w[static_cast<std::size_t>(i)] * gram_[i][j] * w[static_cast<std::size_t>(j)];
        std::vector<Rational> aj{Rational(1)};
        for (int j = 0; 2 * (j + 1) <= nu; ++j) {
            std::int64_t t = nu - 2 * j;
            std::int64_t tn = nu - 2 * (j + 1);
            Rational num = rat(t * (t - 1)) * rat(w2) * aj.back();
            Rational den = rat(4 * (j + 1) * j + 12 * (j + 1) + 4 * (j + 1) * tn);
            aj.push_back(-num / den);
        }
        std::map<std::pair<std::int64_t, std::int64_t>, Rational> acc;
        if (nu == 0)
            acc[{0, 0}] += 1;
        for (const auto& [key, count] : single_buckets_[s]) {
            Rational nx = rat(key[1], p_); // N(x) = norm2p / p
            Rational lu(Int(static_cast<long>(key[2])));
            Rational val(0);
            Rational npow(1);
            for (std::size_t j = 0; j < aj.size(); ++j) {
                std::int64_t t = nu - 2 * static_cast<std::int64_t>(j);
                Rational lpow(1);
                for (std::int64_t i = 0; i < t; ++i)
                    lpow *= lu;
                val += aj[j] * npow * lpow;
                npow *= nx;
            }
            if (val != 0)
                acc[{key[0], key[1]}] += val * rat(count);
        }
        write_form(acc);
    }
    return out;
}

VVForm SeedLattice::theta(std::int64_t jprec, const FQM& fqm) const
{
    auto seeds = theta_seeds(0, jprec, fqm);
    if (seeds.empty())
        throw math_error("plain theta series came out zero");
    return seeds.front();
}

const SeedLattice& seed_lattice_for_field(std::int64_t d)
{
    static const SeedLattice a6(-7);
    static const SeedLattice l11(-11);
    if (d == -7)
        return a6;
    if (d == -11)
        return l11;
    throw usage_error("unsupported field discriminant");
}

} // namespace hmf
