#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "curvesing/field.hpp"

namespace curvesing {

using Vec = std::vector<FieldElem>;

/// Incrementally maintained reduced row echelon basis of a subspace of k^n.
/// Rows are kept sorted by pivot column.
class EchelonBasis {
public:
    EchelonBasis(Field f, std::size_t columns) : field_(f), cols_(columns) {}

    Field field() const noexcept { return field_; }
    std::size_t columns() const noexcept { return cols_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    const std::vector<Vec>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Remainder of v after elimination against the basis.
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const;
    /// Adds v to the span; false when v was already in it.
    bool insert(Vec v);

private:
    Field field_;
    std::size_t cols_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

/// Rank of the given rows restricted to a subset of columns.
std::size_t projected_rank(Field f, std::span<const Vec> rows, std::span<const std::size_t> columns);

} // namespace curvesing
