#pragma once

/**
 * @file zeta_local.hpp
 * @brief Motivic local zeta function of a germ and its generalized Poincare
 *        series, with the counting specialization L -> q.
 */

#include <map>
#include <optional>
#include <vector>

#include "curvesing/motivic.hpp"
#include "curvesing/semigroup.hpp"

namespace curvesing {

/// D(n) = dim C(n) / C(M) on a region of exponents below the truncation M.
struct ValueIdealTable {
    std::vector<int> M;
    std::map<std::vector<int>, int> D;

    int at(const std::vector<int>& n) const;
};

/// Table on the box n <= upper (upper <= M componentwise).
ValueIdealTable value_ideal_dims(LocalRing& ring, const std::vector<int>& M, const std::vector<int>& upper);

/// [F(n)]_M = sum over I of (-1)^|I| L^D(n + e_I). Zero exactly off the semigroup.
MotClass fiber_class(const ValueIdealTable& table, const std::vector<int>& n);

/// [I_n] from the orbit formula at truncation M; M defaults to n + conductor + 1.
/// Throws ExactDivisionFailure.
MotClass ideal_class(LocalRing& ring, const ValueSemigroup& s, const std::vector<int>& n,
                     std::optional<std::vector<int>> M = std::nullopt);

struct LocalZeta {
    MotSeries joint;
    MotSeries single;
    int delta = 0;
    std::vector<int> conductor;
};

/// Z = sum_{|n| <= bound} [I_n] L^{-|n|} t^n, with the one-variable series
/// assembled directly by total degree.
LocalZeta local_zeta(LocalRing& ring, const ValueSemigroup& s, int bound);
LocalZeta local_zeta(const CurveGerm& g, int bound);

/// P_g = L^{-(delta+1)} Z.
MotSeries poincare_series(const LocalZeta& z);

struct CountingSeries {
    int d = 1;
    int bound = 0;
    std::map<std::vector<int>, Rational> terms;

    Rational coeff(const std::vector<int>& n) const;
};

CountingSeries counting_specialization(const MotSeries& s, std::int64_t q);

} // namespace curvesing
