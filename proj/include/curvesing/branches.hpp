#pragma once

/**
 * @file branches.hpp
 * @brief Branch parametrizations of a germ and valuations of ring elements.
 *
 * Branches are separated by point blow-ups; each branch becomes a smooth germ,
 * is parametrized there by Newton iteration and pushed back to the base point.
 * This works in every characteristic, including p dividing a ramification
 * index.
 */

#include <cstddef>
#include <vector>

#include "curvesing/curve.hpp"
#include "curvesing/series.hpp"

namespace curvesing {

struct BranchParam {
    TruncSeries x;
    TruncSeries y;
    /// min(ord x, ord y).
    int e = 1;
    /// The branch is tangent to x = 0, so y carries the ramification index.
    bool y_ramified = false;

    std::size_t precision() const noexcept { return x.precision(); }
};

/// One primitive parametrization per branch, coefficients in the ground field,
/// modulo t^precision. Throws NotTotallyRational, WildFailure.
std::vector<BranchParam> puiseux_branches(const CurveGerm& g, std::size_t precision);

/// Starting precision 4 * deg(f)^2.
std::size_t default_branch_precision(const CurveGerm& g);

using ValueVector = std::vector<int>;

/// Orders of z along each branch. Doubles the precision of `branches` in place
/// while an order is undetermined; throws ZeroDivisor once the precision
/// exceeds the intersection bound deg(z) * deg(f).
ValueVector value_of(const BivarPoly& z, const CurveGerm& g, std::vector<BranchParam>& branches);

} // namespace curvesing
