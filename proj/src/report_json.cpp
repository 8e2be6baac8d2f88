#include "curvesing/report_json.hpp"

namespace curvesing {

namespace {

Json coefficients(const TruncSeries& s) {
    Json a = Json::array();
    for (const auto& c : s.coefficients()) a.push_back(c.to_string());
    return a;
}

Json rationals(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& r : v) a.push_back(to_string(r));
    return a;
}

} // namespace

Json to_json(const ResolutionProcess& p) {
    return Json{{"N", p.N}, {"multiplicities", p.multiplicities()}, {"exceptional_components", p.exceptional_components}};
}

Json to_json(const BranchParam& b) {
    return Json{{"x", coefficients(b.x)}, {"y", coefficients(b.y)}, {"precision", b.precision()}};
}

Json to_json(const ValueSemigroup& s) {
    Json j{{"d", s.d}, {"delta", s.delta}, {"conductor", s.conductor}};
    if (s.d == 1) j["generators"] = s.generators;
    j["box_members"] = s.box_members;
    return j;
}

Json to_json(const MotSeries& s) {
    Json terms = Json::array();
    for (const auto& [n, c] : s.terms()) terms.push_back(Json{{"n", n}, {"class", c.to_string()}});
    return Json{{"d", s.variables()}, {"bound", s.bound()}, {"terms", terms}};
}

Json to_json(const CountingSeries& s, std::int64_t q) {
    Json terms = Json::array();
    for (const auto& [n, v] : s.terms) terms.push_back(Json{{"n", n}, {"value", to_string(v)}});
    return Json{{"q", q}, {"d", s.d}, {"bound", s.bound}, {"terms", terms}};
}

Json to_json(const ReductionReport& r) {
    return Json{{"prime", r.prime}, {"status", to_string(r.status)}, {"detail", r.detail}};
}

Json to_json(const FactorizationReport& r) {
    Json j{{"q", r.q},
           {"bound", r.bound},
           {"equal", r.equal},
           {"first_mismatch", r.first_mismatch ? Json(*r.first_mismatch) : Json(nullptr)},
           {"left", rationals(r.left)},
           {"right", rationals(r.right)}};
    j["genus"] = r.genus;
    j["delta"] = r.delta;
    j["singular_points"] = r.singular;
    j["point_counts"] = r.counts.N;
    j["smooth_model_counts"] = r.counts.N_smooth;
    Json num = Json::array();
    for (const auto& c : r.weil.numerator) num.push_back(c.get_str());
    j["weil_numerator"] = num;
    j["unit_index_form"] = r.unit_index_form;
    return j;
}

Json to_json(const OracleCounts& c) {
    Json terms = Json::array();
    for (const auto& [n, k] : c.ideals)
        terms.push_back(Json{{"n", n},
                             {"ideals", k},
                             {"fiber", c.fibers.at(n)},
                             {"projective_fiber", c.projective.at(n)},
                             {"truncation", c.truncation.at(n)}});
    return Json{{"q", c.q}, {"bound", c.bound}, {"enumerated", c.enumerated}, {"terms", terms}};
}

Json to_json(const UnitIndex& u) {
    return Json{{"formula", u.formula},
                {"direct", u.direct},
                {"normalization_units", u.normalization_units},
                {"ring_units", u.ring_units},
                {"truncation", u.truncation}};
}

} // namespace curvesing
