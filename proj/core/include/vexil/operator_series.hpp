#pragma once

#include "vexil/character.hpp"
#include "vexil/ring.hpp"
#include "vexil/series.hpp"

namespace vexil {

/// Truncated polynomial algebra in raising variables R_1..R_T over
/// (ambient ring) tensor Q[y]. A term is an exponent vector over the
/// variables with a GradedClass coefficient; the total degree
/// (sum of exponents plus ambient degree) never exceeds the bound.
class OperatorSeries {
public:
    OperatorSeries(RingPtr ring, int nvars, int bound);
    static OperatorSeries one(RingPtr ring, int nvars, int bound);

    int nvars() const { return nvars_; }
    int bound() const { return bound_; }
    const RingPtr& ring() const { return ring_; }

    bool is_zero() const { return t_.empty(); }
    GradedClass coeff(const std::vector<int>& e) const;
    const std::map<std::vector<int>, GradedClass>& terms() const { return t_; }

    void add_term(const std::vector<int>& e, const GradedClass& c);

    OperatorSeries operator-() const;
    OperatorSeries& operator+=(const OperatorSeries& o);
    friend OperatorSeries operator+(OperatorSeries a, const OperatorSeries& b) { return a += b; }
    friend OperatorSeries operator*(const OperatorSeries& a, const OperatorSeries& b);
    OperatorSeries scale(const YPolynomial& f) const;

    /// Inverse of 1 + (terms of positive total degree).
    OperatorSeries invert_unit() const;
    /// exp of a series with no constant term.
    OperatorSeries exp_nilpotent() const;

    friend bool operator==(const OperatorSeries& a, const OperatorSeries& b) {
        return a.t_ == b.t_;
    }

    /// Substitution of a univariate series at R_var.
    static OperatorSeries from_series_in_var(const UniSeries& s, int var, int nvars, int bound,
                                             const RingPtr& ring);
    /// Substitution of a univariate series at (R_j - R_i).
    static OperatorSeries from_series_at_difference(const UniSeries& s, int var_i, int var_j,
                                                    int nvars, int bound, const RingPtr& ring);

private:
    int total_degree(const std::vector<int>& e, const BasisKey& k) const;
    RingPtr ring_;
    int nvars_;
    int bound_;
    std::map<std::vector<int>, GradedClass> t_;
};

/// T_y(R_var (x) v) as an operator series:
/// exp( sum_m g_m(y) sum_{j<=m} C(m,j) R_var^{m-j} p_j(v) ), truncated by
/// total degree. Works for any virtual rank (rank enters only as p_0).
OperatorSeries ty_twist_series(const BundleCharacter& v, int var, int nvars, int bound);

/// Single-variable form of the public operation: coefficients of R^0..R^bound.
std::vector<GradedClass> ty_of_twisted(const BundleCharacter& v, int order);

}  // namespace vexil
