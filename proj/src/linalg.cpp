#include "curvesing/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace curvesing {

namespace {

std::size_t leading(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return i;
    return v.size();
}

} // namespace

Vec EchelonBasis::reduce(Vec v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length does not match basis");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const FieldElem c = v[pivots_[r]];
        if (c.is_zero()) continue;
        const Vec& row = rows_[r];
        for (std::size_t j = pivots_[r]; j < cols_; ++j)
            if (!row[j].is_zero()) v[j] -= c * row[j];
    }
    return v;
}

bool EchelonBasis::contains(const Vec& v) const {
    const Vec r = reduce(v);
    return leading(r) == cols_;
}

bool EchelonBasis::insert(Vec v) {
    v = reduce(std::move(v));
    const std::size_t p = leading(v);
    if (p == cols_) return false;
    const FieldElem inv = v[p].inverse();
    for (std::size_t j = p; j < cols_; ++j) v[j] *= inv;
    for (auto& row : rows_) {
        const FieldElem c = row[p];
        if (c.is_zero()) continue;
        for (std::size_t j = p; j < cols_; ++j)
            if (!v[j].is_zero()) row[j] -= c * v[j];
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

std::size_t projected_rank(Field f, std::span<const Vec> rows, std::span<const std::size_t> columns) {
    EchelonBasis b(f, columns.size());
    for (const Vec& row : rows) {
        Vec v;
        v.reserve(columns.size());
        for (std::size_t c : columns) v.push_back(row.at(c));
        b.insert(std::move(v));
        if (b.rank() == columns.size()) break;
    }
    return b.rank();
}

} // namespace curvesing
