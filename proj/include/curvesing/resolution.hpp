#pragma once

/**
 * @file resolution.hpp
 * @brief Embedded resolution of a plane curve germ by point blow-ups.
 */

#include <array>
#include <cstdint>
#include <vector>

#include "curvesing/curve.hpp"

namespace curvesing {

struct BlowupStep {
    /// 0 for the base point, 1 or 2 for the chart of the parent blow-up.
    int chart = 0;
    /// Center in the chart coordinates of the parent blow-up.
    std::array<FieldElem, 2> center;
    /// Multiplicity of the strict transform at the center.
    int multiplicity = 1;
};

struct ResolutionProcess {
    std::vector<BlowupStep> steps;
    int N = 0;
    int exceptional_components = 0;

    std::vector<int> multiplicities() const;
    /// sum m(m-1)/2 over the process: the delta invariant by Noether's formula.
    int noether_delta() const;
};

/// Blows up until the total transform has normal crossings. Children of a
/// blow-up are visited in a canonical order, so the step list is deterministic.
/// Throws NotTotallyRational, WildFailure.
ResolutionProcess resolve_germ(const CurveGerm& g);

bool same_process(const ResolutionProcess& a, const ResolutionProcess& b);

struct PrimeRange {
    std::uint32_t lo = 2;
    std::uint32_t hi = 31;
    std::vector<std::uint32_t> primes() const;
};

/// Compares the process over Q with the process of each reduction.
std::vector<ReductionReport> good_reduction_scan(const BivarPoly& f, PrimeRange range);

} // namespace curvesing
