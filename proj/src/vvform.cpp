#include "hmf/vvform.hpp"

#include <algorithm>
#include <sstream>

namespace hmf {

VVForm::VVForm(FQM fqm, int weight2, std::int64_t jprec)
    : fqm_(std::move(fqm)), weight2_(weight2), jprec_(jprec),
      comp_(static_cast<std::size_t>(fqm_->order()))
{
    // Integer weight pairs with even signature, half-integer with odd.
    if (mod_pos(weight2_ + fqm_->signature(), 2) != 0)
        throw usage_error("weight parity incompatible with the signature");
}

VVForm VVForm::make(const FQM& fqm, const Rational& weight, std::int64_t jprec)
{
    Rational w2 = weight * 2;
    if (w2.get_den() != 1)
        throw usage_error("weight must be a half-integer");
    return VVForm(fqm, static_cast<int>(w2.get_num().get_si()), jprec);
}

Rational VVForm::alpha(std::int64_t gamma) const
{
    const Rational& q = fqm_->q(gamma);
    return q == 0 ? Rational(0) : Rational(1) - q;
}

int VVForm::epsilon() const
{
    int e = (weight2_ + fqm_->signature()) / 2;
    return (mod_pos(e, 2) == 0) ? 1 : -1;
}

bool VVForm::is_zero() const
{
    for (const auto& m : comp_)
        if (!m.empty())
            return false;
    return true;
}

bool VVForm::is_holomorphic() const
{
    for (const auto& m : comp_)
        if (!m.empty() && m.begin()->first < 0)
            return false;
    return true;
}

bool VVForm::is_cusp() const
{
    for (std::size_t g = 0; g < comp_.size(); ++g)
        for (const auto& [j, v] : comp_[g]) {
            Rational n = Rational(static_cast<long>(j)) + alpha(static_cast<std::int64_t>(g));
            if (n <= 0)
                return false;
            break; // maps are ordered; only the first entry can be <= 0
        }
    return true;
}

Rational VVForm::coeff_j(std::int64_t gamma, std::int64_t j) const
{
    const auto& m = component(gamma);
    auto it = m.find(j);
    return it == m.end() ? Rational(0) : it->second;
}

Rational VVForm::coeff_n(std::int64_t gamma, const Rational& n) const
{
    Rational j = n - alpha(gamma);
    if (j.get_den() != 1)
        return Rational(0);
    return coeff_j(gamma, j.get_num().get_si());
}

const std::map<std::int64_t, Rational>& VVForm::component(std::int64_t gamma) const
{
    return comp_[static_cast<std::size_t>(mod_pos(gamma, fqm_->order()))];
}

void VVForm::set_raw(std::int64_t gamma, std::int64_t j, const Rational& v)
{
    if (j >= jprec_)
        return;
    auto& m = comp_[static_cast<std::size_t>(mod_pos(gamma, fqm_->order()))];
    if (v == 0)
        m.erase(j);
    else
        m[j] = v;
}

void VVForm::set_coeff_single(std::int64_t gamma, std::int64_t j, const Rational& v)
{
    set_raw(gamma, j, v);
}

void VVForm::set_coeff_pair(std::int64_t gamma, std::int64_t j, const Rational& v)
{
    std::int64_t g = mod_pos(gamma, fqm_->order());
    std::int64_t ng = fqm_->neg(g);
    set_raw(g, j, v);
    if (ng != g)
        set_raw(ng, j, v * rat(epsilon()));
    else if (epsilon() == -1 && v != 0)
        throw usage_error("self-paired component must vanish for epsilon = -1");
}

VVForm VVForm::truncated(std::int64_t jprec) const
{
    VVForm r(*fqm_, weight2_, std::min(jprec, jprec_));
    for (std::size_t g = 0; g < comp_.size(); ++g)
        for (const auto& [j, v] : comp_[g])
            if (j < r.jprec_)
                r.comp_[g].emplace(j, v);
    return r;
}

VVForm VVForm::operator+(const VVForm& o) const
{
    if (!(fqm() == o.fqm()) || weight2_ != o.weight2_)
        throw usage_error("cannot add forms of different type");
    VVForm r = truncated(std::min(jprec_, o.jprec_));
    for (std::size_t g = 0; g < comp_.size(); ++g)
        for (const auto& [j, v] : o.comp_[g]) {
            if (j >= r.jprec_)
                continue;
            auto it = r.comp_[g].find(j);
            if (it == r.comp_[g].end())
                r.comp_[g].emplace(j, v);
            else {
                it->second += v;
                if (it->second == 0)
                    r.comp_[g].erase(it);
            }
        }
    return r;
}

VVForm VVForm::operator-(const VVForm& o) const { return *this + o.scaled(Rational(-1)); }

VVForm VVForm::scaled(const Rational& c) const
{
    VVForm r(*fqm_, weight2_, jprec_);
    if (c == 0)
        return r;
    for (std::size_t g = 0; g < comp_.size(); ++g)
        for (const auto& [j, v] : comp_[g])
            r.comp_[g].emplace(j, v * c);
    return r;
}

VVForm VVForm::mul_scalar(const QSeries& g, int scalar_weight) const
{
    if (g.vars() != 1)
        throw usage_error("mul_scalar takes a one-variable series");
    std::int64_t jlow = 0;
    bool any = false;
    for (const auto& m : comp_)
        if (!m.empty()) {
            jlow = any ? std::min(jlow, m.begin()->first) : m.begin()->first;
            any = true;
        }
    std::int64_t glow = g.is_zero() ? 0 : g.low_exponent();
    std::int64_t jp = std::min(jprec_ + glow, g.prec() + (any ? jlow : 0));
    VVForm r(*fqm_, weight2_ + 2 * scalar_weight, jp);
    if (g.is_zero() || !any)
        return r;
    for (std::size_t gam = 0; gam < comp_.size(); ++gam)
        for (const auto& [j, v] : comp_[gam])
            for (const auto& [e, w] : g.terms()) {
                std::int64_t jo = j + e.first;
                if (jo >= jp)
                    break;
                auto it = r.comp_[gam].find(jo);
                if (it == r.comp_[gam].end())
                    r.comp_[gam].emplace(jo, v * w);
                else {
                    it->second += v * w;
                    if (it->second == 0)
                        r.comp_[gam].erase(it);
                }
            }
    return r;
}

bool VVForm::operator==(const VVForm& o) const
{
    std::int64_t jp = std::min(jprec_, o.jprec_);
    auto a = truncated(jp), b = o.truncated(jp);
    return a.weight2_ == b.weight2_ && a.fqm() == b.fqm() && a.comp_ == b.comp_;
}

VVForm VVForm::serre_derivative() const
{
    QSeries e2 = eisenstein_series(2, std::max<std::int64_t>(jprec_, 1));
    VVForm qd(*fqm_, weight2_ + 4, jprec_);
    for (std::size_t g = 0; g < comp_.size(); ++g) {
        Rational a = alpha(static_cast<std::int64_t>(g));
        for (const auto& [j, v] : comp_[g])
            qd.comp_[g][j] = v * (Rational(static_cast<long>(j)) + a);
        for (auto it = qd.comp_[g].begin(); it != qd.comp_[g].end();)
            it = (it->second == 0) ? qd.comp_[g].erase(it) : std::next(it);
    }
    VVForm tail = mul_scalar(e2, 2).scaled(weight() / 12);
    return qd.truncated(tail.jprec()) - tail;
}

VVForm VVForm::div_delta_power(int P) const
{
    if (P <= 0)
        return *this;
    QSeries delta_inv = ps_div(QSeries::one(1, jprec_ + P + 1), delta_series(jprec_ + P + 1));
    QSeries factor = delta_inv;
    for (int i = 1; i < P; ++i)
        factor = factor * delta_inv;
    return mul_scalar(factor, -12 * P);
}

QVec VVForm::to_qvec(std::int64_t jlo, std::int64_t jhi) const
{
    std::size_t n = comp_.size();
    QVec v(n * static_cast<std::size_t>(jhi - jlo), Rational(0));
    for (std::size_t g = 0; g < n; ++g)
        for (const auto& [j, c] : comp_[g])
            if (j >= jlo && j < jhi)
                v[g * static_cast<std::size_t>(jhi - jlo) + static_cast<std::size_t>(j - jlo)] = c;
    return v;
}

std::string VVForm::str() const
{
    std::ostringstream os;
    for (std::size_t g = 0; g < comp_.size(); ++g) {
        if (comp_[g].empty())
            continue;
        os << "e_" << g << ": ";
        bool first = true;
        for (const auto& [j, v] : comp_[g]) {
            Rational n = Rational(static_cast<long>(j)) + alpha(static_cast<std::int64_t>(g));
            if (!first)
                os << " + ";
            first = false;
            os << v << "*q^(" << n << ")";
        }
        os << "\n";
    }
    return os.str();
}

QSeries bb_map(const VVForm& f)
{
    std::int64_t p = f.fqm().order();
    if (f.epsilon() != 1)
        throw usage_error("bb_map is identically zero for epsilon = -1 forms");
    QSeries g(1, p * f.jprec());
    for (std::int64_t gam = 0; gam < p; ++gam) {
        Rational a = f.alpha(gam);
        for (const auto& [j, v] : f.component(gam)) {
            Rational n = Rational(static_cast<long>(j)) + a;
            Rational e = n * rat(p);
            std::int64_t E = e.get_num().get_si(); // p*alpha is integral
            g.set_coeff(E, g.coeff(E) + v);
        }
    }
    return g;
}

VVForm bb_invert(const QSeries& g, const FQM& fqm, const Rational& weight)
{
    std::int64_t p = fqm.order();
    VVForm f = VVForm::make(fqm, weight, (g.prec() + p - 1) / p);
    if (f.epsilon() != 1)
        throw usage_error("bb_invert needs epsilon = +1 (wrong weight parity)");
    for (const auto& [key, v] : g.terms()) {
        std::int64_t E = key.first;
        std::int64_t r = mod_pos(E, p);
        if (r == 0) {
            f.set_raw(0, E / p, v);
            continue;
        }
        std::int64_t k = 0;
        for (std::int64_t c = 1; c < p; ++c)
            if (mod_pos(c * c + E, p) == 0) {
                k = c;
                break;
            }
        if (k == 0)
            throw math_error("scalar series supported outside the admissible pattern");
        Rational n = rat(E, p);
        Rational jq = n - f.alpha(k);
        // exponent must align with the component offset
        if (jq.get_den() != 1)
            throw math_error("exponent does not align with component offsets");
        std::int64_t j = jq.get_num().get_si();
        f.set_raw(k, j, v / 2);
        f.set_raw(fqm.neg(k), j, v / 2);
    }
    return f;
}

bool character_is_odd(std::int64_t p, std::int64_t character_index)
{
    (void)p;
    return mod_pos(character_index, 2) == 1;
}

TwistedSeries twisted_map(const VVForm& f, std::int64_t character_index, std::int64_t iso_scale,
                          const std::vector<std::int64_t>& repset)
{
    std::int64_t p = f.fqm().order();
    if (!character_is_odd(p, character_index))
        throw usage_error("twisted_map needs an odd character");
    if (f.epsilon() != -1)
        throw usage_error("twisted_map applies to epsilon = -1 forms");
    auto in_repset = [&](std::int64_t u) {
        return std::find(repset.begin(), repset.end(), u) != repset.end();
    };
    std::map<std::int64_t, TwistedEntry> out;
    for (std::int64_t k = 1; 2 * k < p; ++k) {
        Rational a = f.alpha(k);
        for (const auto& [j, v] : f.component(k)) {
            Rational n = Rational(static_cast<long>(j)) + a;
            Rational ep = n * rat(p);
            std::int64_t E = ep.get_num().get_si();
            std::int64_t label = mod_pos(iso_scale * k, p);
            Rational coeff = v * 2;
            std::int64_t u = label;
            if (!in_repset(u)) {
                u = mod_pos(-label, p);
                coeff = -coeff;
            }
            if (!in_repset(u))
                throw usage_error("representative set does not cover Z/p pairs");
            if (coeff != 0)
                out[E] = TwistedEntry{E, coeff, u};
        }
    }
    TwistedSeries t;
    t.p = p;
    t.character_index = character_index;
    for (auto& [e, entry] : out)
        t.entries.push_back(entry);
    return t;
}

} // namespace hmf
