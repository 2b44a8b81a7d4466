#include "vexil/resolution.hpp"

#include <algorithm>
#include <numeric>

namespace vexil {

ResolutionPlan make_plan(const Triple& t, const DegeneracyGeometry& geom) {
    ResolutionPlan plan;
    plan.reduced = reduce_triple(t);
    plan.lambda = lambda_of(plan.reduced);
    if (plan.reduced.empty()) return plan;
    plan.inflated = gapless_presentation(plan.reduced);
    int T = plan.rows();
    int max_index = plan.lambda.empty() ? 0 : plan.lambda[0];
    max_index += T + std::max(0, geom.dimension() - partition_weight(plan.lambda));
    for (int i = 0; i < T; ++i) {
        BundleCharacter v = geom.character(plan.inflated.pp[i], plan.inflated.qp[i]);
        plan.cherns.push_back(chern_table(v, max_index));
        plan.chars.push_back(std::move(v));
    }
    return plan;
}

GradedClass apply_to_determinant(const OperatorSeries& op, const ResolutionPlan& plan) {
    RingPtr ring = op.ring();
    int T = plan.rows();
    GradedClass total(ring);
    if (T == 0) {
        // Empty determinant is 1.
        for (const auto& [e, c] : op.terms()) total += c;
        return total;
    }
    std::vector<int> perm(T);
    for (const auto& [e, coeff_class] : op.terms()) {
        std::iota(perm.begin(), perm.end(), 1);
        GradedClass det(ring);
        do {
            int inversions = 0;
            for (int i = 0; i < T; ++i)
                for (int j = i + 1; j < T; ++j)
                    if (perm[i] > perm[j]) ++inversions;
            bool dead = false;
            GradedClass term = GradedClass::unit(ring);
            for (int i = 0; i < T && !dead; ++i) {
                int idx = plan.lambda[i] + perm[i] - (i + 1) + e[i];
                if (idx < 0) {
                    dead = true;
                    break;
                }
                if (idx == 0) continue;
                const auto& table = plan.cherns[i];
                if (idx >= static_cast<int>(table.size())) {
                    dead = true;  // beyond the table means degree above the ring dimension
                    break;
                }
                term = term * table[idx];
                if (term.is_zero()) dead = true;
            }
            if (!dead) det += (inversions % 2 == 0) ? term : -term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        total += det * coeff_class;
    }
    return total;
}

GradedClass determinant_class(const Triple& t, const DegeneracyGeometry& geom) {
    ResolutionPlan plan = make_plan(t, geom);
    OperatorSeries unit_op = OperatorSeries::one(geom.ring(), plan.rows(), geom.dimension());
    return apply_to_determinant(unit_op, plan);
}

GradedClass resolution_class(const Triple& t, const DegeneracyGeometry& geom) {
    ResolutionPlan plan = make_plan(t, geom);
    int D = geom.dimension();
    if (plan.rows() == 0) return geom.ty_ambient();
    int excess = D - partition_weight(plan.lambda);
    if (excess < 0) return GradedClass(geom.ring());

    int T = plan.rows();
    RingPtr ring = geom.ring();
    UniSeries inv_qy = series_invert(qy_series(excess));
    OperatorSeries op = OperatorSeries::one(ring, T, excess);
    for (int i = 0; i < T; ++i)
        for (int j = i + 1; j < T; ++j)
            op = op * OperatorSeries::from_series_at_difference(inv_qy, i, j, T, excess, ring);
    for (int i = 0; i < T; ++i)
        op = op * ty_twist_series(plan.chars[i], i, T, excess).invert_unit();

    GradedClass cls = apply_to_determinant(op, plan);
    return (cls * geom.ty_ambient()).truncate_above(D);
}

namespace {

// (1 + R_var)^a as an operator series, integer a of either sign.
OperatorSeries binomial_power(int a, int var, int nvars, int bound, const RingPtr& ring) {
    UniSeries s(bound);
    for (int m = 0; m <= bound; ++m) s[m] = YPolynomial(Rational::binomial(a, m));
    return OperatorSeries::from_series_in_var(s, var, nvars, bound, ring);
}

}  // namespace

GradedClass csm_resolution_class(const Triple& t, const DegeneracyGeometry& geom) {
    ResolutionPlan plan = make_plan(t, geom);
    int D = geom.dimension();
    if (plan.rows() == 0) return geom.ty_ambient().eval_y(Rational(-1));
    int excess = D - partition_weight(plan.lambda);
    if (excess < 0) return GradedClass(geom.ring());

    int T = plan.rows();
    RingPtr ring = geom.ring();
    // 1/(1 + alpha) = sum (-alpha)^m.
    UniSeries geo(excess);
    for (int m = 0; m <= excess; ++m) geo[m] = YPolynomial(Rational(m % 2 == 0 ? 1 : -1));
    OperatorSeries op = OperatorSeries::one(ring, T, excess);
    for (int i = 0; i < T; ++i)
        for (int j = i + 1; j < T; ++j)
            op = op * OperatorSeries::from_series_at_difference(geo, i, j, T, excess, ring);
    for (int i = 0; i < T; ++i) {
        const BundleCharacter& v = plan.chars[i];
        const auto& table = plan.cherns[i];
        // c_{1/(1+R_i)}(v) = sum_j c_j(v) (1+R_i)^{-j}
        OperatorSeries cseries(ring, T, excess);
        for (int j = 0; j <= excess; ++j) {
            if (j >= static_cast<int>(table.size())) break;
            if (j == 0) {
                cseries += OperatorSeries::one(ring, T, excess);
                continue;
            }
            if (table[j].is_zero()) continue;
            OperatorSeries pw = binomial_power(-j, i, T, excess, ring);
            OperatorSeries cj(ring, T, excess);
            cj.add_term(std::vector<int>(T, 0), table[j]);
            cseries += pw * cj;
        }
        op = op * binomial_power(-v.rank, i, T, excess, ring) * cseries.invert_unit();
    }

    GradedClass cls = apply_to_determinant(op, plan);
    return (cls * geom.ty_ambient().eval_y(Rational(-1))).truncate_above(D);
}

}  // namespace vexil
