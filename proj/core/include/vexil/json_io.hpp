#pragma once

#include <memory>
#include <string>

#include <optional>

#include "vexil/brill_noether.hpp"
#include "vexil/geometry.hpp"
#include "vexil/ring.hpp"
#include "vexil/triple.hpp"

namespace vexil {

/// JSON class format shared with the CLI:
/// {"ring": {"kind": "theta|grassmannian|free", ...},
///  "terms": [{"basis": "theta^3" | "schur:[3,1]" | monomial string,
///             "coeff": [["num/den", exponent-of-y], ...]}]}
/// Rationals are "num/den" strings ("num" when the denominator is 1).
std::string class_to_json(const GradedClass& c);
GradedClass class_from_json(const std::string& text);

std::string ypoly_to_json(const YPolynomial& p);

/// {"k": [...], "p": [...], "q": [...]}
Triple triple_from_json(const std::string& text);
std::string triple_to_json(const Triple& t);

/// {"g": int, "d": int, "a": [ints], "n": optional int}
std::pair<BNProblem, std::optional<int>> bn_problem_from_json(const std::string& text);

/// Geometry descriptors:
///   {"kind": "theta", "g": g}
///   {"kind": "grassmannian", "k": k, "n": n}
///   {"kind": "free", "generators": [...], "dim": D}
/// The free geometry is universal: it works over a free ring with one
/// power-sum generator per bundle rank that the triple (and its strata) can
/// reach, plus any caller-supplied generators.
std::shared_ptr<DegeneracyGeometry> geometry_from_json(const std::string& text,
                                                       const Triple& triple);

}  // namespace vexil
