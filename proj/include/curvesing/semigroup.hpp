#pragma once

/**
 * @file semigroup.hpp
 * @brief Value semigroup, delta invariant and conductor by linear algebra on
 *        jets of the local ring inside the product of branch power series.
 */

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "curvesing/branches.hpp"
#include "curvesing/linalg.hpp"
#include "curvesing/resolution.hpp"

namespace curvesing {

/// Image of the local ring in prod_i k[t]/(t^M_i), in reduced echelon form.
/// Columns are ordered branch by branch, t-exponent ascending.
class JetModel {
public:
    JetModel(const std::vector<BranchParam>& branches, std::vector<int> M);

    const std::vector<int>& truncation() const noexcept { return M_; }
    std::size_t dimension() const noexcept { return basis_.rank(); }
    const EchelonBasis& basis() const noexcept { return basis_; }
    std::size_t column(std::size_t branch, int exponent) const { return offset_[branch] + exponent; }

    /// dim O / C(n) for n <= M componentwise.
    std::size_t ell(const std::vector<int>& n) const;

private:
    std::vector<int> M_;
    std::vector<std::size_t> offset_;
    EchelonBasis basis_;
};

JetModel build_jet_model(const CurveGerm& g, const std::vector<int>& M);

/// Local ring of a germ with a growable jet model. Not thread-safe: the
/// dimension cache and the model are mutated on demand.
class LocalRing {
public:
    explicit LocalRing(const CurveGerm& g);

    const CurveGerm& germ() const noexcept { return germ_; }
    Field field() const noexcept { return germ_.field(); }
    int branch_count() const noexcept { return static_cast<int>(branches_.size()); }
    const std::vector<BranchParam>& branches() const noexcept { return branches_; }
    const ResolutionProcess& process() const noexcept { return process_; }
    int delta() const noexcept { return delta_; }
    const std::vector<int>& truncation() const noexcept { return model_->truncation(); }

    /// ||M|| - dim of the jet model at truncation M (equals delta once M >= conductor).
    int jet_codimension(const std::vector<int>& M) const;

    /// dim O / C(n); grows the model when n exceeds the current truncation.
    std::size_t ell(const std::vector<int>& n);
    /// Makes the truncation at least `bound` componentwise.
    void ensure(const std::vector<int>& bound);

    /// #{z in O / C(n + 1) : v(z) = n} over F_q, by inclusion-exclusion.
    /// Requires a finite field.
    Integer fiber_count_mod(const std::vector<int>& n);
    /// Whether n is a value over the algebraic closure: a strict drop of ell
    /// in every coordinate direction. Dimensions do not change under field
    /// extension, so this is the semigroup shared by all models.
    bool member(const std::vector<int>& n);
    /// Whether some element with coefficients in the ground field has value
    /// exactly n. Differs from member() only over F_q with more than q
    /// branches, where it uses exact point counts.
    bool rational_member(const std::vector<int>& n);

private:
    void rebuild(std::vector<int> M);

    CurveGerm germ_;
    ResolutionProcess process_;
    std::vector<BranchParam> branches_;
    std::optional<JetModel> model_;
    std::map<std::vector<int>, std::size_t> ell_cache_;
    int delta_ = 0;
};

int delta_invariant(const CurveGerm& g);

struct ValueSemigroup {
    int d = 1;
    int delta = 0;
    std::vector<int> conductor;
    /// Members n with n <= conductor + 1, lexicographic.
    std::vector<std::vector<int>> box_members;
    /// Minimal generators, one-branch case only.
    std::vector<int> generators;

    /// n in S iff min(n, conductor) in S.
    bool contains(const std::vector<int>& n) const;
};

ValueSemigroup value_semigroup(LocalRing& ring);
ValueSemigroup value_semigroup(const CurveGerm& g);

bool semigroup_membership(LocalRing& ring, const std::vector<int>& n);

/// Equality up to a permutation of branch indices.
bool same_semigroup(const ValueSemigroup& a, const ValueSemigroup& b);

std::vector<ReductionReport> reduction_semigroup_scan(const BivarPoly& f, PrimeRange range);

/// Per prime, the semigroup status with the process status alongside.
struct CoherenceRow {
    ReductionReport process;
    ReductionReport semigroup;
};

std::vector<CoherenceRow> reduction_scan(const BivarPoly& f, PrimeRange range);

} // namespace curvesing
