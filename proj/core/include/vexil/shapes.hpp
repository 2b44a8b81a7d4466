#pragma once

#include <memory>

#include "vexil/geometry.hpp"
#include "vexil/motivic.hpp"
#include "vexil/ypoly.hpp"

namespace vexil {

/// A shape is a weakly increasing sequence of nonnegative integers, drawn
/// with kappa_i boxes in row i. Componentwise order and containment agree.
using Shape = std::vector<int>;

void validate_shape(const Shape& kappa);
/// Requires lambda + kappa weakly decreasing (kappa is feasible for lambda).
void validate_feasible(const std::vector<int>& lambda, const Shape& kappa);

/// The minimal weakly increasing sequence with kappa_red_t = kappa_t and
/// kappa_red_i = kappa_i at every i where kappa_{i+1}+lambda_{i+1} <
/// kappa_i+lambda_i; free entries take the minimal completion.
Shape kappa_red(const std::vector<int>& lambda, const Shape& kappa);

/// Sum of (-y)^{|kappa'|} over weakly increasing kappa' between kappa_red
/// and kappa componentwise.
YPolynomial d_kappa(const std::vector<int>& lambda, const Shape& kappa);
/// Same value computed without kappa_red: enumerates the shapes inside kappa
/// not contained in any smaller feasible shape.
YPolynomial d_kappa_bruteforce(const std::vector<int>& lambda, const Shape& kappa);

/// Number of sub-shapes of kappa, via the non-intersecting lattice path
/// binomial determinant |C(kappa_{l+1-j}+l-i+1, 1+j-i)|.
long p_shapes(const Shape& kappa);
/// Direct enumeration of sub-shapes.
long p_shapes_bruteforce(const Shape& kappa);

/// Gaussian binomial [m choose k]_q as a polynomial in q (exponent slot of
/// YPolynomial).
YPolynomial gaussian_binomial(int m, int k);

/// A Grassmann degeneracy locus: single source bundle of rank p mapping to a
/// flag of quotients of ranks q_1 >= ... >= q_t, over the given geometry.
/// The associated partition is lambda_i = q_i - p + i.
struct GrassmannLocus {
    std::shared_ptr<const DegeneracyGeometry> geom;
    int p = 0;
    std::vector<int> q;

    std::vector<int> lambda() const;
    Triple base_triple() const;
};

/// Feasible kappa for the pushforward: weakly increasing, lambda + kappa
/// weakly decreasing, i + kappa_i <= p, and the stratum partition
/// (1+kappa_1 parts of lambda_1+kappa_1, 1+kappa_2-kappa_1 parts of
/// lambda_2+kappa_2, ...) has weight at most dim_bound.
std::vector<Shape> feasible_kappas(const std::vector<int>& lambda, int p, int dim_bound);

/// Pushforward of T_y of the Grassmannian-bundle locus:
/// sum over feasible kappa of d_kappa times the motivic class of the stratum
/// with k_i = i + kappa_i.
GradedClass omega_pushforward(const GrassmannLocus& locus);
YPolynomial chi_y_omega(const GrassmannLocus& locus);

}  // namespace vexil
