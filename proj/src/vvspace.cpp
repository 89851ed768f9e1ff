#include "hmf/vvspace.hpp"

#include <map>
#include <tuple>

#include "hmf/bernoulli.hpp"
#include "hmf/jacobi.hpp"
#include "hmf/theta_lattice.hpp"

namespace hmf {

QSeries eisenstein_minus_space(std::int64_t p, int kappa, std::int64_t prec)
{
    if (kappa < 3 || kappa % 2 == 0)
        throw usage_error("minus-space Eisenstein needs odd weight >= 3");
    // The two Eisenstein series of weight kappa for the quadratic character
    // mod p differ by sigma sums with chi on the divisor vs the codivisor;
    // their difference kills all nonzero quadratic-residue exponents.
    Rational bk = bernoulli_chi(static_cast<unsigned>(kappa), -p);
    Rational factor = rat(-2 * kappa) / bk;
    QSeries e(1, prec);
    e.set_coeff(0, Rational(1));
    for (std::int64_t n = 1; n < prec; ++n) {
        Int s1(0), s2(0);
        for (std::int64_t d = 1; d <= n; ++d) {
            if (n % d)
                continue;
            Int dk = int_pow(Int(static_cast<long>(d)), static_cast<unsigned>(kappa - 1));
            int chi_d = kronecker(-p, d);
            int chi_nd = kronecker(-p, n / d);
            if (chi_d)
                s1 += Int(chi_d) * dk;
            if (chi_nd)
                s2 += Int(chi_nd) * dk;
        }
        Rational c = factor * Rational(s1 - s2);
        e.set_coeff(n, c);
    }
    return e;
}

VVForm vv_eisenstein(const FQM& fqm, const Rational& weight, std::int64_t jprec)
{
    if (fqm.signature() == 2) {
        Rational w2 = weight * 2;
        if (w2.get_den() != 1 || mod_pos(w2.get_num().get_si(), 2) != 0)
            throw usage_error("field Eisenstein weight must be an integer");
        std::int64_t kappa = w2.get_num().get_si() / 2;
        if (kappa < 3 || kappa % 2 == 0)
            throw usage_error("inadmissible weight/parity for the Eisenstein series");
        std::int64_t p = fqm.order();
        QSeries scalar = eisenstein_minus_space(p, static_cast<int>(kappa), p * jprec);
        return bb_invert(scalar, fqm, weight);
    }
    if (fqm.signature() == 1) {
        // Jacobi index m = order/2; weight kappa = k - 1/2.
        std::int64_t m = fqm.order() / 2;
        Rational k = weight + rat(1, 2);
        if (k.get_den() != 1)
            throw usage_error("Jacobi-side weight must be half-integral");
        long kk = k.get_num().get_si();
        if (kk < 4 || kk % 2)
            throw usage_error("inadmissible weight/parity for the Eisenstein series");
        JacobiForm e = jacobi_eisenstein(static_cast<int>(kk), m, jprec + m);
        return jacobi_to_vv(e, jprec);
    }
    throw usage_error("unsupported FQM signature");
}

namespace {

struct BasisKey {
    std::int64_t d;
    int weight2;
    std::int64_t jprec;
    int pole;
    bool operator<(const BasisKey& o) const
    {
        return std::tie(d, weight2, jprec, pole) < std::tie(o.d, o.weight2, o.jprec, o.pole);
    }
};

std::vector<VVForm> field_basis(const FQM& fqm, std::int64_t d, int kappa, std::int64_t jprec)
{
    static std::map<BasisKey, std::vector<VVForm>> cache;
    BasisKey key{d, kappa, jprec, 0};
    auto hit = cache.find(key);
    if (hit != cache.end())
        return hit->second;

    std::vector<VVForm> basis;
    if (kappa >= 3) {
        std::vector<VVForm> pool;
        auto push_products = [&](const std::vector<VVForm>& lower, const QSeries& g, int gw) {
            for (const auto& f : lower)
                pool.push_back(f.mul_scalar(g, gw));
        };
        if (kappa % 2 == 1)
            pool.push_back(vv_eisenstein(fqm, rat(kappa), jprec));
        if (kappa - 4 >= 3)
            push_products(field_basis(fqm, d, kappa - 4, jprec), eisenstein_series(4, jprec), 4);
        if (kappa - 6 >= 3)
            push_products(field_basis(fqm, d, kappa - 6, jprec), eisenstein_series(6, jprec), 6);
        for (const auto& f : field_basis(fqm, d, kappa - 2, jprec))
            pool.push_back(f.serre_derivative());
        if (kappa - 12 >= 3)
            push_products(field_basis(fqm, d, kappa - 12, jprec), delta_series(jprec), 12);
        if (kappa >= 3) {
            const auto& lat = seed_lattice_for_field(d);
            for (auto& s : lat.theta_seeds(kappa - 3, jprec, fqm))
                pool.push_back(std::move(s));
        }
        Echelon ech(static_cast<std::size_t>(fqm.order() * jprec));
        for (const auto& f : pool)
            if (ech.insert(f.to_qvec(0, jprec)))
                basis.push_back(f);
    }
    cache[key] = basis;
    return basis;
}

} // namespace

std::vector<VVForm> vv_basis(const FQM& fqm, const Rational& weight, std::int64_t jprec,
                             std::optional<std::size_t> expected_rank, int pole_order)
{
    std::vector<VVForm> basis;
    if (fqm.signature() == 2) {
        Rational w2 = weight * 2;
        if (w2.get_den() != 1 || mod_pos(w2.get_num().get_si(), 2) != 0)
            throw usage_error("field-case weight must be an integer");
        std::int64_t d = -fqm.order();
        int kappa = static_cast<int>(w2.get_num().get_si() / 2);
        if (pole_order > 0) {
            auto high = field_basis(fqm, d, kappa + 12 * pole_order, jprec + pole_order + 1);
            for (const auto& f : high)
                basis.push_back(f.div_delta_power(pole_order).truncated(jprec));
        } else {
            basis = field_basis(fqm, d, kappa, jprec);
        }
    } else if (fqm.signature() == 1) {
        if (pole_order > 0)
            throw usage_error("nearly-holomorphic bases are only built for the field case");
        basis = jacobi_vv_basis(fqm, weight, jprec);
    } else {
        throw usage_error("unsupported FQM signature");
    }
    if (expected_rank && basis.size() != *expected_rank)
        throw math_error("rank deficiency: basis construction reached " +
                         std::to_string(basis.size()) + " of expected " +
                         std::to_string(*expected_rank));
    return basis;
}

namespace {

// Flattened coordinates (gamma, j) with p*(j + alpha_gamma) <= max_exponent.
std::vector<std::pair<std::int64_t, std::int64_t>> seed_window(const VVForm& shape,
                                                               std::int64_t max_exponent)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> coords;
    std::int64_t p = shape.fqm().order();
    for (std::int64_t g = 0; g < p; ++g) {
        Rational a = shape.alpha(g);
        for (std::int64_t j = 0;; ++j) {
            Rational e = (Rational(static_cast<long>(j)) + a) * rat(p);
            if (e > rat(max_exponent))
                break;
            coords.emplace_back(g, j);
        }
    }
    return coords;
}

} // namespace

VVForm vv_pin(const PinSeed& seed, const std::vector<VVForm>& basis)
{
    if (basis.empty())
        throw usage_error("vv_pin needs a nonempty basis");
    const VVForm& shape = basis.front();
    const FQM& fqm = shape.fqm();
    std::int64_t p = fqm.order();

    auto coords = seed_window(shape, seed.max_exponent);
    // target values per coordinate
    std::map<std::pair<std::int64_t, std::int64_t>, Rational> target;
    if (seed.scalar) {
        for (const auto& [key, v] : seed.scalar->terms()) {
            std::int64_t E = key.first;
            if (E > seed.max_exponent)
                continue;
            std::int64_t r = mod_pos(E, p);
            if (r == 0) {
                target[{0, E / p}] = v;
                continue;
            }
            std::int64_t k = 0;
            for (std::int64_t c = 1; c < p; ++c)
                if (mod_pos(c * c + E, p) == 0) {
                    k = c;
                    break;
                }
            if (k == 0)
                throw math_error("seed supported outside the admissible pattern");
            Rational jq = rat(E, p) - shape.alpha(k);
            std::int64_t j = jq.get_num().get_si();
            target[{k, j}] = v / 2;
            target[{fqm.neg(k), j}] = v / 2;
        }
    }
    for (const auto& entry : seed.twisted) {
        std::int64_t E = entry.exponent;
        if (E > seed.max_exponent)
            continue;
        // gamma with printed label u: u = scale * gamma
        std::int64_t g = 0;
        for (std::int64_t c = 1; c < p; ++c)
            if (mod_pos(seed.iso_scale * c, p) == entry.argument) {
                g = c;
                break;
            }
        if (g == 0)
            throw usage_error("twisted seed argument is not a unit label");
        Rational jq = rat(E, p) - shape.alpha(g);
        if (jq.get_den() != 1)
            throw math_error("twisted seed exponent misaligned");
        std::int64_t j = jq.get_num().get_si();
        target[{g, j}] = entry.value / 2;
        target[{fqm.neg(g), j}] = -entry.value / 2;
    }

    std::vector<QVec> rows;
    rows.reserve(basis.size());
    for (const auto& f : basis) {
        QVec r;
        r.reserve(coords.size());
        for (auto [g, j] : coords)
            r.push_back(f.coeff_j(g, j));
        rows.push_back(std::move(r));
    }
    QVec t;
    t.reserve(coords.size());
    for (auto [g, j] : coords) {
        auto it = target.find({g, j});
        t.push_back(it == target.end() ? Rational(0) : it->second);
    }

    if (!kernel_of_rows(rows).empty())
        throw math_error("ambiguous solution: seed window too short for this basis");
    auto sol = solve_in_span(rows, t);
    if (!sol)
        throw math_error("no basis combination matches the seed");
    VVForm out = basis.front().scaled((*sol)[0]);
    for (std::size_t i = 1; i < basis.size(); ++i)
        out = out + basis[i].scaled((*sol)[i]);
    return out;
}

} // namespace hmf
