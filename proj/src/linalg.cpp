#include "hmf/linalg.hpp"

#include <algorithm>

namespace hmf {

namespace {

std::optional<std::size_t> first_nonzero(const QVec& v)
{
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0)
            return j;
    return std::nullopt;
}

// y -= c * x
void axpy(QVec& y, const Rational& c, const QVec& x)
{
    for (std::size_t j = 0; j < y.size(); ++j)
        if (x[j] != 0)
            y[j] -= c * x[j];
}

// Echelon with per-row bookkeeping: each stored row is a combination of the
// inserted vectors, and rows are kept mutually reduced (zeros in each other's
// pivot columns), so a single reduction pass is exact.
class Tracker {
public:
    Tracker(std::size_t width, std::size_t nvecs) : width_(width), nvecs_(nvecs) {}

    // Returns the bookkeeping combination when v reduces to zero.
    std::optional<QVec> add(QVec v, QVec b)
    {
        reduce(v, &b);
        auto p = first_nonzero(v);
        if (!p)
            return b;
        Rational inv = v[*p];
        for (auto& x : v)
            if (x != 0)
                x /= inv;
        for (auto& x : b)
            if (x != 0)
                x /= inv;
        for (std::size_t t = 0; t < ech_.size(); ++t) {
            Rational c = ech_[t][*p];
            if (c != 0) {
                axpy(ech_[t], c, v);
                axpy(book_[t], c, b);
            }
        }
        ech_.push_back(std::move(v));
        book_.push_back(std::move(b));
        pivots_.push_back(*p);
        return std::nullopt;
    }

    // Reduces v in place; *coeffs (if given) accumulates the combination of
    // inserted vectors that was subtracted.
    void reduce(QVec& v, QVec* book_acc = nullptr, QVec* coeff_acc = nullptr) const
    {
        for (std::size_t t = 0; t < ech_.size(); ++t) {
            Rational c = v[pivots_[t]];
            if (c == 0)
                continue;
            axpy(v, c, ech_[t]);
            if (book_acc)
                axpy(*book_acc, c, book_[t]);
            if (coeff_acc)
                for (std::size_t j = 0; j < nvecs_; ++j)
                    if (book_[t][j] != 0)
                        (*coeff_acc)[j] += c * book_[t][j];
        }
    }

    std::size_t rank() const { return ech_.size(); }

private:
    std::size_t width_;
    std::size_t nvecs_;
    std::vector<QVec> ech_, book_;
    std::vector<std::size_t> pivots_;
};

} // namespace

std::optional<std::size_t> Echelon::reduce(QVec& v) const
{
    if (v.size() != width_)
        throw usage_error("row width mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Rational c = v[pivots_[i]];
        if (c != 0)
            axpy(v, c, rows_[i]);
    }
    return first_nonzero(v);
}

bool Echelon::insert(QVec v)
{
    auto p = reduce(v);
    if (!p)
        return false;
    Rational inv = v[*p];
    for (std::size_t j = *p; j < v.size(); ++j)
        if (v[j] != 0)
            v[j] /= inv;
    for (std::size_t t = 0; t < rows_.size(); ++t) {
        Rational c = rows_[t][*p];
        if (c != 0)
            axpy(rows_[t], c, v);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(*p);
    return true;
}

std::size_t rank_of_rows(const std::vector<QVec>& rows)
{
    if (rows.empty())
        return 0;
    Echelon e(rows[0].size());
    for (const auto& r : rows)
        e.insert(r);
    return e.rank();
}

std::vector<QVec> kernel_of_rows(const std::vector<QVec>& rows)
{
    std::size_t n = rows.size();
    if (n == 0)
        return {};
    Tracker tr(rows[0].size(), n);
    std::vector<QVec> kernel;
    for (std::size_t i = 0; i < n; ++i) {
        QVec b(n, Rational(0));
        b[i] = 1;
        if (auto k = tr.add(rows[i], std::move(b)))
            kernel.push_back(std::move(*k));
    }
    return rref(std::move(kernel));
}

std::optional<QVec> solve_in_span(const std::vector<QVec>& rows, const QVec& target)
{
    std::size_t n = rows.size();
    Tracker tr(target.size(), n);
    for (std::size_t i = 0; i < n; ++i) {
        QVec b(n, Rational(0));
        b[i] = 1;
        tr.add(rows[i], std::move(b));
    }
    QVec v = target;
    QVec coeffs(n, Rational(0));
    tr.reduce(v, nullptr, &coeffs);
    if (first_nonzero(v))
        return std::nullopt;
    return coeffs;
}

std::vector<QVec> rref(std::vector<QVec> rows)
{
    std::vector<QVec> ech;
    std::vector<std::size_t> pivots;
    for (auto& r : rows) {
        QVec v = std::move(r);
        for (std::size_t t = 0; t < ech.size(); ++t) {
            Rational c = v[pivots[t]];
            if (c != 0)
                axpy(v, c, ech[t]);
        }
        auto p = first_nonzero(v);
        if (!p)
            continue;
        Rational inv = v[*p];
        for (auto& x : v)
            if (x != 0)
                x /= inv;
        for (std::size_t t = 0; t < ech.size(); ++t) {
            Rational c = ech[t][*p];
            if (c != 0)
                axpy(ech[t], c, v);
        }
        ech.push_back(std::move(v));
        pivots.push_back(*p);
    }
    std::vector<std::size_t> order(ech.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
    std::vector<QVec> out;
    out.reserve(ech.size());
    for (auto i : order)
        out.push_back(std::move(ech[i]));
    return out;
}

} // namespace hmf
