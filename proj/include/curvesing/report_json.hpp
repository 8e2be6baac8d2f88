#pragma once

/**
 * @file report_json.hpp
 * @brief JSON forms of the library's reports. Key order is fixed so output is
 *        byte-stable.
 */

#include <json.hpp>

#include "curvesing/branches.hpp"
#include "curvesing/oracle.hpp"
#include "curvesing/resolution.hpp"
#include "curvesing/semigroup.hpp"
#include "curvesing/zeta_global.hpp"
#include "curvesing/zeta_local.hpp"

namespace curvesing {

using Json = nlohmann::ordered_json;

Json to_json(const ResolutionProcess& p);
Json to_json(const BranchParam& b);
Json to_json(const ValueSemigroup& s);
Json to_json(const MotSeries& s);
Json to_json(const CountingSeries& s, std::int64_t q);
Json to_json(const ReductionReport& r);
Json to_json(const FactorizationReport& r);
Json to_json(const OracleCounts& c);
Json to_json(const UnitIndex& u);

} // namespace curvesing
