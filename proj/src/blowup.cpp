#include "blowup.hpp"

#include "curvesing/errors.hpp"

namespace curvesing::detail {

std::vector<Direction> tangent_directions(const BivarPoly& g, int m) {
    const Field k = g.field();
    const BivarPoly cone = g.homogeneous_part(m);
    // cone = sum a_i x^i y^(m-i); x^low divides it exactly.
    int low = m;
    std::vector<FieldElem> in_c(m + 1, FieldElem::zero(k));
    for (const auto& [mono, coef] : cone.terms()) {
        low = std::min(low, mono.x);
        in_c[mono.y] = coef;
    }
    const UPoly h(k, std::move(in_c));
    std::vector<Direction> out;
    int found = 0;
    if (h.degree() >= 1) {
        for (const Root& r : ground_field_roots(h)) {
            out.push_back({1, r.value});
            found += r.multiplicity;
        }
    }
    if (found != h.degree())
        throw NotTotallyRational("tangent cone " + cone.to_string() + " does not split over " + k.to_string());
    if (low > 0) out.push_back({2, FieldElem::zero(k)});
    return out;
}

BivarPoly strict_transform(const BivarPoly& g, int m, const Direction& d) {
    if (d.chart == 1) return g.chart1_strict(m).translate(FieldElem::zero(g.field()), d.c);
    return g.chart2_strict(m);
}

unsigned exceptional_after(unsigned ex, const Direction& d) {
    if (d.chart == 1) return U_AXIS | ((ex & V_AXIS) && d.c.is_zero() ? V_AXIS : 0u);
    return V_AXIS | (ex & U_AXIS);
}

} // namespace curvesing::detail
