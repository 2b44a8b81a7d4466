#include "vexil/motivic.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace vexil {

namespace {

int stratum_codim(const std::vector<int>& kplus, const InflatedTriple& inf) {
    Triple t(kplus, inf.pp, inf.qp);
    return partition_weight(lambda_of(t));
}

bool stratum_feasible(const std::vector<int>& kplus, const InflatedTriple& inf) {
    // The locally closed stratum is empty unless the raw values
    // q'_i - p'_i + k+_i weakly decrease.
    for (size_t i = 0; i + 1 < kplus.size(); ++i)
        if (inf.qp[i] - inf.pp[i] + kplus[i] < inf.qp[i + 1] - inf.pp[i + 1] + kplus[i + 1])
            return false;
    return true;
}

void enumerate_rec(const InflatedTriple& inf, int dim_bound, size_t pos, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    size_t T = inf.kp.size();
    if (pos == T) {
        if (stratum_feasible(cur, inf)) out.push_back(cur);
        return;
    }
    int lo = std::max(static_cast<int>(pos) + 1, pos == 0 ? 1 : cur[pos - 1]);
    for (int v = lo; v <= inf.pp[pos]; ++v) {
        cur[pos] = v;
        // Minimal completion of the remaining positions; codimension is
        // monotone in each entry, so a too-deep completion ends the scan.
        std::vector<int> probe = cur;
        for (size_t j = pos + 1; j < T; ++j)
            probe[j] = std::max(static_cast<int>(j) + 1, probe[j - 1]);
        bool probe_valid = true;
        for (size_t j = pos + 1; j < T; ++j)
            if (probe[j] > inf.pp[j]) probe_valid = false;
        if (!probe_valid || stratum_codim(probe, inf) > dim_bound) break;
        enumerate_rec(inf, dim_bound, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace

std::vector<std::vector<int>> enumerate_strata(const InflatedTriple& inf, int dim_bound) {
    std::vector<std::vector<int>> out;
    if (inf.kp.empty()) return out;
    std::vector<int> cur(inf.kp.size(), 0);
    enumerate_rec(inf, dim_bound, 0, cur, out);
    return out;
}

YPolynomial kernel_flag_chi(const std::vector<int>& kplus) {
    int T = static_cast<int>(kplus.size());
    YPolynomial chi;
    std::vector<int> b(T, 0);
    std::function<void(int, int)> rec = [&](int i, int dim) {
        if (i == T) {
            chi += YPolynomial::monomial(dim, Rational(dim % 2 == 0 ? 1 : -1));
            return;
        }
        for (int v = 1; v <= kplus[i]; ++v) {
            bool used = false;
            int below = 0;
            for (int j = 0; j < i; ++j) {
                if (b[j] == v) used = true;
                if (b[j] < v) ++below;
            }
            if (used) continue;
            b[i] = v;
            rec(i + 1, dim + v - 1 - below);
        }
        b[i] = 0;
    };
    rec(0, 0);
    return chi;
}

std::vector<std::pair<std::vector<int>, YPolynomial>> stratum_coefficients(
    const InflatedTriple& inf, int dim_bound) {
    std::vector<std::vector<int>> strata = enumerate_strata(inf, dim_bound);
    // enumerate_strata emits in lexicographic order, which refines the
    // componentwise order, so each coefficient only needs earlier ones.
    std::vector<std::pair<std::vector<int>, YPolynomial>> out;
    for (const auto& kplus : strata) {
        YPolynomial d = kernel_flag_chi(kplus);
        for (const auto& [f, df] : out) {
            bool below = true;
            for (size_t i = 0; i < f.size(); ++i)
                if (f[i] > kplus[i]) below = false;
            if (below) d -= df;
        }
        out.emplace_back(kplus, d);
    }
    return out;
}

GradedClass MotivicSolver::motivic_class(const Triple& t) {
    return solve_reduced(reduce_triple(t));
}

GradedClass MotivicSolver::solve_reduced(const Triple& reduced) {
    std::string key = reduced.key();
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;

    int D = geom_.dimension();
    Partition lam = lambda_of(reduced);
    GradedClass cls(geom_.ring());
    if (partition_weight(lam) > D) {
        memo_.emplace(key, cls);
        return cls;
    }
    cls = mode_ == Mode::ty ? resolution_class(reduced, geom_)
                            : csm_resolution_class(reduced, geom_);
    if (!reduced.empty()) {
        InflatedTriple inf = gapless_presentation(reduced);
        for (const auto& [kplus, d] : stratum_coefficients(inf, D)) {
            if (kplus == inf.kp) continue;
            Triple sub = reduce_triple(Triple(kplus, inf.pp, inf.qp));
            if (partition_weight(lambda_of(sub)) <= partition_weight(lam))
                throw std::logic_error("motivic solve: stratum did not increase codimension");
            YPolynomial coeff = mode_ == Mode::ty ? d : YPolynomial(d.eval(Rational(-1)));
            cls -= solve_reduced(sub).scale(coeff);
        }
    }
    memo_.emplace(key, cls);
    return cls;
}

GradedClass motivic_class(const Triple& t, const DegeneracyGeometry& geom) {
    MotivicSolver solver(geom);
    return solver.motivic_class(t);
}

GradedClass csm_class(const Triple& t, const DegeneracyGeometry& geom) {
    MotivicSolver solver(geom, MotivicSolver::Mode::csm);
    return solver.motivic_class(t);
}

YPolynomial chi_y(const GradedClass& c) { return c.integrate(); }

Rational chi_at(const GradedClass& c, const Rational& y0) { return chi_y(c).eval(y0); }

}  // namespace vexil
