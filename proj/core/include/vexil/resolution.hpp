#pragma once

#include "vexil/geometry.hpp"
#include "vexil/operator_series.hpp"
#include "vexil/triple.hpp"

namespace vexil {

/// Row data shared by the determinant-based computations. The reduced triple
/// is refined so k' = (1..k_t); every row i carries the character of
/// F_{q'_i} - E_{p'_i}. Geometries hand out refinement-consistent characters,
/// so the determinant entries agree with the ones built from the reduced
/// blocks while the row ranks see the refinement.
struct ResolutionPlan {
    Triple reduced;
    InflatedTriple inflated;
    Partition lambda;
    std::vector<BundleCharacter> chars;            // per row
    std::vector<std::vector<GradedClass>> cherns;  // per row: c_0..c_max

    int rows() const { return static_cast<int>(lambda.size()); }
};

ResolutionPlan make_plan(const Triple& t, const DegeneracyGeometry& geom);

/// Applies an operator series to the determinant |c(i)_{lambda_i + j - i}|:
/// for each monomial R^e and permutation sigma the row index becomes
/// n_i = lambda_i + sigma(i) - i + e_i; a term with any n_i < 0 is zero and
/// c at index 0 is 1.
GradedClass apply_to_determinant(const OperatorSeries& op, const ResolutionPlan& plan);

/// Fulton's determinantal class |c(i)_{lambda_i+j-i}| of the locus.
GradedClass determinant_class(const Triple& t, const DegeneracyGeometry& geom);

/// Pushforward of T_y of the flag resolution of the locus:
/// prefactor prod_{i<j} 1/T_y(R_j - R_i), row factors
/// 1/T_y(R_i (x) (F_{q'_i} - E_{p'_i})), applied to the determinant, times
/// T_y(X). An empty triple gives T_y(X); a partition deeper than the ambient
/// dimension gives zero.
GradedClass resolution_class(const Triple& t, const DegeneracyGeometry& geom);

/// y = -1 fast path: prefactor 1/(1 + R_j - R_i), row factors
/// (1+R_i)^{-rank} / c_{1/(1+R_i)}, times the total Chern class of X.
/// Equals resolution_class evaluated at y = -1.
GradedClass csm_resolution_class(const Triple& t, const DegeneracyGeometry& geom);

}  // namespace vexil
