#pragma once

#include <map>

#include "vexil/resolution.hpp"

namespace vexil {

/// All weakly increasing k+ >= (1..k_t) with k+_i <= p'_i whose locally
/// closed stratum is nonempty (the raw values q'_i - p'_i + k+_i weakly
/// decrease) and whose stratum triple has expected codimension at most
/// dim_bound after reduction. Depth-first with monotone pruning; the base
/// sequence itself is included.
std::vector<std::vector<int>> enumerate_strata(const InflatedTriple& inf, int dim_bound);

/// chi_y of the kernel-flag Schubert variety {V_1 c ... c V_T : V_i inside
/// K_{kplus_i}}: the sum of (-y)^dim over its cells, which are labeled by
/// injective jump tuples b with max(b_1..b_i) <= kplus_i and have dimension
/// sum_i (b_i - 1 - #{j < i : b_j < b_i}).
YPolynomial kernel_flag_chi(const std::vector<int>& kplus);

/// Stratum coefficients of the pushforward from the resolution:
/// d_{k+} = chi_y(fiber) - sum of d_f over feasible f < k+. Equals
/// (-y)^{|k+|-|k'|} whenever every label below k+ is feasible; empty strata
/// shift the deeper coefficients.
std::vector<std::pair<std::vector<int>, YPolynomial>> stratum_coefficients(
    const InflatedTriple& inf, int dim_bound);

/// Memoized triangular solve for ty classes of the loci themselves:
/// T(W) = resolution(tau) - sum over deeper strata k+ of
/// d_{k+} T(W of the reduced stratum triple). Distinct k+ reducing to the
/// same locus each contribute with their own coefficient. In CSM mode the
/// same solve runs on the y = -1 fast path with coefficients evaluated
/// at y = -1.
class MotivicSolver {
public:
    enum class Mode { ty, csm };
    explicit MotivicSolver(const DegeneracyGeometry& geom, Mode mode = Mode::ty)
        : geom_(geom), mode_(mode) {}

    GradedClass motivic_class(const Triple& t);

private:
    GradedClass solve_reduced(const Triple& reduced);
    const DegeneracyGeometry& geom_;
    Mode mode_;
    std::map<std::string, GradedClass> memo_;
};

/// One-shot convenience wrappers.
GradedClass motivic_class(const Triple& t, const DegeneracyGeometry& geom);
GradedClass csm_class(const Triple& t, const DegeneracyGeometry& geom);

/// Top-degree pushforward of a class; requires a ring with integrate.
YPolynomial chi_y(const GradedClass& c);
/// chi_y evaluated at a point, e.g. -1 (Euler), 0 (holomorphic), 1 (signature).
Rational chi_at(const GradedClass& c, const Rational& y0);

}  // namespace vexil
