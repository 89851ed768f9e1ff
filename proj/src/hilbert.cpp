#include "hmf/hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace hmf {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b)
{
    IntPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Int& slot = r[ea + eb];
            slot += ca * cb;
        }
    for (auto it = r.begin(); it != r.end();)
        it = (it->second == 0) ? r.erase(it) : std::next(it);
    return r;
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b)
{
    IntPoly r = a;
    for (const auto& [e, c] : b) {
        Int& slot = r[e];
        slot += c;
        if (slot == 0)
            r.erase(e);
    }
    return r;
}

IntPoly poly_neg(const IntPoly& a)
{
    IntPoly r;
    for (const auto& [e, c] : a)
        r.emplace(e, -c);
    return r;
}

IntPoly poly_one_minus_tn(std::int64_t d)
{
    return IntPoly{{0, Int(1)}, {d, Int(-1)}};
}

std::string poly_str(const IntPoly& p, const std::string& var)
{
    if (p.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p) {
        Int ac = c >= 0 ? c : Int(-c);
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (ac != 1 || e == 0)
            os << ac.get_str();
        if (e != 0) {
            if (ac != 1)
                os << "*";
            os << var;
            if (e != 1)
                os << "^" << e;
        }
    }
    return os.str();
}

HilbSeries::HilbSeries(IntPoly num, std::vector<std::int64_t> den)
    : num_(std::move(num)), den_(std::move(den))
{
    for (auto d : den_)
        if (d < 1)
            throw usage_error("denominator factor degrees must be >= 1");
    std::sort(den_.begin(), den_.end());
}

HilbSeries HilbSeries::constant(const Int& c)
{
    return c == 0 ? HilbSeries() : HilbSeries(IntPoly{{0, c}});
}

HilbSeries HilbSeries::monomial(std::int64_t n, const Int& c)
{
    return c == 0 ? HilbSeries() : HilbSeries(IntPoly{{n, c}});
}

HilbSeries HilbSeries::graded_free(const std::vector<std::int64_t>& degrees, IntPoly num)
{
    return HilbSeries(std::move(num), degrees);
}

IntPoly HilbSeries::den_poly() const
{
    IntPoly d{{0, Int(1)}};
    for (auto f : den_)
        d = poly_mul(d, poly_one_minus_tn(f));
    return d;
}

HilbSeries HilbSeries::operator+(const HilbSeries& o) const
{
    // Common denominator: per-degree maximum multiplicity.
    std::map<std::int64_t, int> mult;
    for (auto d : den_)
        mult[d]++;
    std::map<std::int64_t, int> mo;
    for (auto d : o.den_)
        mo[d]++;
    for (const auto& [d, m] : mo)
        mult[d] = std::max(mult[d], m);

    std::vector<std::int64_t> den;
    IntPoly na = num_, nb = o.num_;
    auto deficit = [&](const std::vector<std::int64_t>& have, std::int64_t d, int want) {
        return want - static_cast<int>(std::count(have.begin(), have.end(), d));
    };
    for (const auto& [d, m] : mult) {
        for (int i = 0; i < m; ++i)
            den.push_back(d);
        for (int i = 0; i < deficit(den_, d, m); ++i)
            na = poly_mul(na, poly_one_minus_tn(d));
        for (int i = 0; i < deficit(o.den_, d, m); ++i)
            nb = poly_mul(nb, poly_one_minus_tn(d));
    }
    return HilbSeries(poly_add(na, nb), den);
}

HilbSeries HilbSeries::operator-() const
{
    HilbSeries r = *this;
    r.num_ = poly_neg(r.num_);
    return r;
}

HilbSeries HilbSeries::operator-(const HilbSeries& o) const { return *this + (-o); }

HilbSeries HilbSeries::operator*(const HilbSeries& o) const
{
    std::vector<std::int64_t> den = den_;
    den.insert(den.end(), o.den_.begin(), o.den_.end());
    return HilbSeries(poly_mul(num_, o.num_), den);
}

HilbSeries HilbSeries::shifted(std::int64_t n) const
{
    IntPoly num;
    for (const auto& [e, c] : num_)
        num.emplace(e + n, c);
    return HilbSeries(num, den_);
}

HilbSeries HilbSeries::with_extra_den(std::int64_t d) const
{
    std::vector<std::int64_t> den = den_;
    den.push_back(d);
    return HilbSeries(num_, den);
}

std::vector<Int> HilbSeries::expand(std::int64_t kmax) const
{
    if (kmax < 0)
        throw usage_error("kmax must be >= 0");
    for (const auto& [e, c] : num_)
        if (e < 0)
            throw math_error("expand needs a numerator supported in degrees >= 0");
    std::vector<Int> c(static_cast<std::size_t>(kmax) + 1, Int(0));
    for (const auto& [e, v] : num_)
        if (e <= kmax)
            c[static_cast<std::size_t>(e)] = v;
    // Multiply by each 1/(1 - t^d) = sum_j t^{dj}: running sums with stride d.
    for (auto d : den_)
        for (std::int64_t k = d; k <= kmax; ++k)
            c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - d)];
    return c;
}

bool HilbSeries::equals_rational(const HilbSeries& o) const
{
    return poly_mul(num_, o.den_poly()) == poly_mul(o.num_, den_poly());
}

std::string HilbSeries::str() const
{
    std::ostringstream os;
    os << "(" << poly_str(num_) << ")";
    if (!den_.empty()) {
        os << " / (";
        for (std::size_t i = 0; i < den_.size(); ++i) {
            if (i)
                os << "*";
            os << "(1 - t^" << den_[i] << ")";
        }
        os << ")";
    }
    return os.str();
}

std::vector<Int> hilb_expand(const HilbSeries& h, std::int64_t kmax) { return h.expand(kmax); }

} // namespace hmf
