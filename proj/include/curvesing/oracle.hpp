#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force jet enumeration over F_q: principal ideals by value,
 *        fibers, projectivized fibers and truncated unit groups.
 *
 * Shares nothing with the dimension formulas of zeta_local beyond the branch
 * parametrizations: arithmetic is on small residues, and every count comes
 * from explicit enumeration.
 */

#include <cstdint>
#include <map>
#include <vector>

#include "curvesing/curve.hpp"

namespace curvesing {

struct OracleCounts {
    std::uint32_t q = 0;
    int bound = 0;
    /// #I_n(F_q): principal ideals generated by an element of value n.
    std::map<std::vector<int>, std::uint64_t> ideals;
    /// #F(n) modulo C(M): elements of value exactly n.
    std::map<std::vector<int>, std::uint64_t> fibers;
    /// Fiber elements whose first nonzero coordinate is 1.
    std::map<std::vector<int>, std::uint64_t> projective;
    /// Truncation M = n + conductor + 1 used for each n.
    std::map<std::vector<int>, std::vector<int>> truncation;
    /// Total number of elements enumerated.
    std::uint64_t enumerated = 0;
};

/// Every n with |n| <= bound. Throws BudgetExceeded when the summed
/// enumeration size exceeds the budget.
OracleCounts brute_force_ideal_counts(const CurveGerm& g, const std::vector<int>& conductor, int bound,
                                      std::uint64_t budget = 10'000'000);
/// Single-threaded reference with identical results.
OracleCounts brute_force_ideal_counts_serial(const CurveGerm& g, const std::vector<int>& conductor, int bound,
                                             std::uint64_t budget = 10'000'000);

struct UnitCounts {
    std::vector<int> truncation;
    /// Units of prod_i F_q[t]/(t^M_i).
    std::uint64_t normalization = 0;
    /// Units of O / C(M).
    std::uint64_t ring = 0;
};

/// Both unit groups by enumeration at truncation M.
UnitCounts enumerate_units(const CurveGerm& g, const std::vector<int>& M, std::uint64_t budget = 10'000'000);

} // namespace curvesing
