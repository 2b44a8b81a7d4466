#pragma once

#include <optional>

#include "vexil/geometry.hpp"
#include "vexil/motivic.hpp"
#include "vexil/shapes.hpp"
#include "vexil/triple.hpp"

namespace vexil {

/// One-pointed Brill-Noether problem: line bundles of degree d on a genus-g
/// curve whose vanishing sequence at a marked point is at least
/// a = (a_0 < ... < a_r). Derived data: lambda_i = g-d+r+a_{r+1-i}-(r+1-i)
/// and rho = g - |lambda|.
struct BNProblem {
    int g = 0, d = 0;
    std::vector<int> a;
    int r = 0;
    std::vector<int> lambda;
    int rho = 0;
};

/// Validates g >= 1, d >= 0 and a strictly increasing inside [0, d].
BNProblem bn_problem(int g, int d, std::vector<int> a);

/// Smallest twist making all bundles non-special, floored at 1.
int bn_default_n(const BNProblem& prob);

/// Nonemptiness criterion: g >= sum max(0, lambda_i).
bool bn_nonempty(const BNProblem& prob);

struct BNModel {
    std::shared_ptr<ThetaGeometry> geom;
    Triple triple;
    int n = 0, p = 0;
    std::vector<int> q;

    GrassmannLocus locus() const;
};

/// Bundle model over Pic^d: source rank p = d+n-g+1, quotient ranks
/// q_i = n + a_{r+1-i}. Requires n >= 2g-1-d.
BNModel bn_geometry(const BNProblem& prob, int n);

/// iota_* T_y(W) in the theta ring; independent of the twist n.
GradedClass ty_class_W(const BNProblem& prob, std::optional<int> n = std::nullopt);
YPolynomial chi_y_W(const BNProblem& prob, std::optional<int> n = std::nullopt);

/// chi_y of the linear-series variety G: sum over feasible kappa of
/// d_kappa times chi_y of the problem with vanishing sequence a(kappa).
YPolynomial chi_y_G(const BNProblem& prob, std::optional<int> n = std::nullopt);

/// The reindexed vanishing sequence a(kappa): each a_j stretches to the run
/// a_j, a_j+1, ..., a_j + kappa_{r+1-j} - kappa_{r-j}. Empty result when the
/// run escapes [0, d] (the stratum is empty).
std::optional<std::vector<int>> bn_sequence_for_kappa(const BNProblem& prob, const Shape& kappa);

/// |1/(l_i + j - i)!| via the Vandermonde closed form
/// prod_{i<j}(l_i - l_j + j - i) / prod_i (l_i + r + 1 - i)!,
/// with 1/(negative)! = 0.
Rational oracle_factorial_det(const std::vector<int>& l);
/// The same determinant by direct expansion over permutations.
Rational oracle_factorial_det_expand(const std::vector<int>& l);

struct SurfaceOracle {
    GradedClass cls;
    YPolynomial chi;
};

/// Closed form for the classical surface case (a_i = i, rho = 2): the class
/// in the theta ring and its chi_y. Also exposes the closed-form signature.
SurfaceOracle oracle_surface_classical(int g, int r, int d);
Rational oracle_surface_signature(int g, int r, int d);

/// Closed form for pointed pencil surfaces (r = 1, lambda_1 > lambda_2,
/// rho = 2).
SurfaceOracle oracle_surface_pencil(int g, int d, const std::vector<int>& a);
/// The pencil chi_y formula as a function of (lambda_1, lambda_2, g) with no
/// validity checks; used to compare the two surface regimes.
YPolynomial pencil_chi_formula(int lambda1, int lambda2, int g);

/// Closed form for one-dimensional W (rho = 1):
/// chi_y = (y-1) g! sum_k lambda_k |1/(lambda_i + delta_{ik} + j - i)!|.
YPolynomial oracle_curve(int g, int d, const std::vector<int>& a);

}  // namespace vexil
