#include "hmf/divisors.hpp"

#include <sstream>

namespace hmf {

std::string DivisorSum::str() const
{
    if (parts.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [D, m] : parts) {
        if (m == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (m != 1)
            os << m << "*";
        os << "H" << D;
    }
    return first ? "0" : os.str();
}

void PrincipalPart::set(std::int64_t gamma, std::int64_t num, const Int& v)
{
    if (num >= 0)
        throw usage_error("principal part entries have negative exponents");
    std::int64_t p = fqm.order();
    std::int64_t g = mod_pos(gamma, p);
    // exponent num/|d| must be -Q(gamma) mod 1
    if (mod_pos(num + g * g, p) != 0)
        throw usage_error("exponent does not match the component offset");
    negative[{g, num}] = v;
    negative[{fqm.neg(g), num}] = v; // weight -1 inputs have symmetric components
}

Int PrincipalPart::get(std::int64_t gamma, std::int64_t num) const
{
    auto it = negative.find({mod_pos(gamma, fqm.order()), num});
    return it == negative.end() ? Int(0) : it->second;
}

BorcherdsData borcherds_divisor_weight(const PrincipalPart& pp, std::int64_t dmax)
{
    BorcherdsData out;
    std::int64_t p = pp.fqm.order();
    out.weight = rat(pp.constant, 2);
    std::int64_t min_num = 0;
    for (const auto& [key, v] : pp.negative)
        min_num = std::min(min_num, key.second);
    for (std::int64_t D = 1; D <= dmax; ++D) {
        std::int64_t g0 = -1;
        if (D % p == 0) {
            g0 = 0;
        } else {
            for (std::int64_t g = 1; g < p; ++g)
                if (mod_pos(g * g - D, p) == 0) {
                    g0 = g;
                    break;
                }
            if (g0 < 0)
                continue; // discriminant not represented on this form
        }
        // order = sum_{r > 0} c(r^2 (-D/|d|), r gamma_D)
        Rational order(0);
        for (std::int64_t r = 1; -(r * r) * D >= min_num; ++r) {
            Int c = pp.get(mod_pos(r * g0, p), -(r * r) * D);
            if (c != 0)
                order += Rational(c);
        }
        if (order != 0)
            out.divisor.parts[D] = order;
    }
    out.holomorphic = true;
    for (const auto& [D, m] : out.divisor.parts)
        if (m < 0 || m.get_den() != 1)
            out.holomorphic = false;
    out.cusp = out.holomorphic; // holomorphic products here are cusp forms
    return out;
}

QSeries theta_weight_52_combination(std::int64_t a, std::int64_t c, std::int64_t prec)
{
    QSeries theta = theta_series(prec);
    QSeries thetap = theta.qdq();
    QSeries e2 = eisenstein_series(2, prec / c + 1).dilated(c).truncated(prec);
    return thetap.scaled(rat(a)) - e2 * theta;
}

HeegnerData heegner_intersection_data(std::int64_t d, std::int64_t m)
{
    HeegnerData h;
    auto series = [](std::initializer_list<std::pair<std::int64_t, std::int64_t>> terms,
                     std::int64_t prec) {
        QSeries s(1, prec);
        for (auto& [e, v] : terms)
            s.set_coeff(e, rat(v));
        return s;
    };
    if (d == -7 && m == 1) {
        h.phi = series({{0, -1}, {1, -2}, {2, 20}, {4, 18}, {7, 70}, {8, 160}, {9, 94}}, 10);
        h.alpha = series({{0, -1}, {1, 10}, {4, 70}, {5, 48}, {8, 120}, {9, 250}}, 10);
        h.pair_with = 2;
        h.on_k1 = 2;
        h.on_kpair = 1;
    } else if (d == -7 && m == 2) {
        h.phi = series({{0, -1}, {1, 4}, {2, 2}, {4, 48}, {7, 28}, {8, 142}, {9, 148}}, 10);
        h.alpha = series({{0, -1}, {1, 4}, {4, 22}, {8, 24}, {9, 100}}, 10);
        h.pair_with = 2;
        h.on_k1 = 2;
        h.on_kpair = 1;
    } else if (d == -11 && m == 1) {
        h.phi = series({{0, -1}, {1, -2}, {3, 20}, {4, -2}, {5, 20}, {9, 18}, {11, 70}}, 12);
        h.alpha = series({{0, -1}, {1, 10}, {4, 70}, {5, 48}, {8, 120}, {9, 250}}, 10);
        h.pair_with = 3;
        h.on_k1 = 2;
        h.on_kpair = 1;
    } else if (d == -11 && m == 3) {
        h.phi = series({{0, -1}, {1, 2}, {3, 0}, {4, 14}, {5, 16}, {9, 82}, {11, 26}}, 12);
        h.alpha = series({{0, -1}, {1, 2}, {4, 14}, {9, 34}, {12, 24}}, 13);
        h.pair_with = 3;
        h.on_k1 = 2;
        h.on_kpair = 1;
    } else {
        throw usage_error("no stored intersection data for this (d, m)");
    }
    return h;
}

} // namespace hmf
