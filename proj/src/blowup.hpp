#pragma once

// Point blow-up primitives shared by the resolution and branch engines.

#include <vector>

#include "curvesing/poly.hpp"

namespace curvesing::detail {

/// A point on the exceptional line of a blow-up at the origin.
/// chart 1: (x, y) = (u, u*(c + v)), center v = 0 at u = 0
/// chart 2: (x, y) = (u*v, v)
struct Direction {
    int chart = 1;
    FieldElem c;
};

/// Tangent directions of g at the origin, g of order m >= 1, chart-1 directions
/// in canonical order followed by the chart-2 direction when present.
/// Throws NotTotallyRational when the tangent cone does not split.
std::vector<Direction> tangent_directions(const BivarPoly& g, int m);

/// Strict transform of g (order m) at the given direction, re-centered.
BivarPoly strict_transform(const BivarPoly& g, int m, const Direction& d);

/// Exceptional curves through a point, as axes of its local coordinates.
enum Axis : unsigned { U_AXIS = 1u, V_AXIS = 2u };

unsigned exceptional_after(unsigned ex, const Direction& d);

/// Blow-up chains longer than this are treated as non-terminating.
inline constexpr int kMaxDepth = 4096;

} // namespace curvesing::detail
