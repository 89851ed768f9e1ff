#pragma once

#include <optional>
#include <vector>

#include "hmf/rational.hpp"

namespace hmf {

using QVec = std::vector<Rational>;

// Incremental row echelon over Q with deterministic leftmost-pivot reduction.
class Echelon {
public:
    explicit Echelon(std::size_t width) : width_(width) {}

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }

    // Reduces v against the current echelon in place; returns the pivot column
    // if the reduced vector is nonzero.
    std::optional<std::size_t> reduce(QVec& v) const;

    // Inserts v (reducing first); returns true if the rank grew.
    bool insert(QVec v);

    const std::vector<QVec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    std::size_t width_;
    std::vector<QVec> rows_;        // pivot-normalized, ordered by insertion
    std::vector<std::size_t> pivots_;
};

std::size_t rank_of_rows(const std::vector<QVec>& rows);

// Basis of { x : sum_i x_i rows[i] = 0 }, in reduced echelon form (deterministic).
std::vector<QVec> kernel_of_rows(const std::vector<QVec>& rows);

// Coefficients x with sum x_i rows[i] = target, if target lies in the row span.
std::optional<QVec> solve_in_span(const std::vector<QVec>& rows, const QVec& target);

// Reduced row echelon form of the given vectors (dropping zero rows).
std::vector<QVec> rref(std::vector<QVec> rows);

} // namespace hmf
