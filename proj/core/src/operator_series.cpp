#include "vexil/operator_series.hpp"

#include <numeric>
#include <stdexcept>

namespace vexil {

OperatorSeries::OperatorSeries(RingPtr ring, int nvars, int bound)
    : ring_(std::move(ring)), nvars_(nvars), bound_(bound) {
    if (nvars < 0 || bound < 0)
        throw std::invalid_argument("OperatorSeries: negative variable count or bound");
}

OperatorSeries OperatorSeries::one(RingPtr ring, int nvars, int bound) {
    OperatorSeries s(ring, nvars, bound);
    s.add_term(std::vector<int>(nvars, 0), GradedClass::unit(ring));
    return s;
}

GradedClass OperatorSeries::coeff(const std::vector<int>& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? GradedClass(ring_) : it->second;
}

void OperatorSeries::add_term(const std::vector<int>& e, const GradedClass& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("OperatorSeries: exponent vector length mismatch");
    int edeg = std::accumulate(e.begin(), e.end(), 0);
    GradedClass cc = c.truncate_above(bound_ - edeg);
    if (cc.is_zero()) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, std::move(cc));
    } else {
        it->second += cc;
        if (it->second.is_zero()) t_.erase(it);
    }
}

OperatorSeries OperatorSeries::operator-() const {
    OperatorSeries r(ring_, nvars_, bound_);
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
}

OperatorSeries& OperatorSeries::operator+=(const OperatorSeries& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
}

OperatorSeries operator*(const OperatorSeries& a, const OperatorSeries& b) {
    OperatorSeries r(a.ring_, a.nvars_, std::min(a.bound_, b.bound_));
    std::vector<int> e(a.nvars_);
    for (const auto& [ea, ca] : a.t_) {
        int da = std::accumulate(ea.begin(), ea.end(), 0);
        for (const auto& [eb, cb] : b.t_) {
            int db = std::accumulate(eb.begin(), eb.end(), 0);
            if (da + db + ca.min_degree() + cb.min_degree() > r.bound_) continue;
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

OperatorSeries OperatorSeries::scale(const YPolynomial& f) const {
    OperatorSeries r(ring_, nvars_, bound_);
    if (f.is_zero()) return r;
    for (const auto& [e, c] : t_) r.add_term(e, c.scale(f));
    return r;
}

OperatorSeries OperatorSeries::invert_unit() const {
    std::vector<int> zero(nvars_, 0);
    if (coeff(zero).coeff(ring_->unit()) != YPolynomial(1))
        throw std::invalid_argument("OperatorSeries::invert_unit: constant term must be 1");
    OperatorSeries n = *this;
    n.add_term(zero, -GradedClass::unit(ring_));
    OperatorSeries acc = one(ring_, nvars_, bound_);
    OperatorSeries pw = one(ring_, nvars_, bound_);
    for (int j = 1; j <= bound_; ++j) {
        pw = pw * n;
        if (pw.is_zero()) break;
        acc += (j % 2 == 0) ? pw : -pw;
    }
    return acc;
}

OperatorSeries OperatorSeries::exp_nilpotent() const {
    std::vector<int> zero(nvars_, 0);
    if (!coeff(zero).coeff(ring_->unit()).is_zero())
        throw std::invalid_argument("OperatorSeries::exp_nilpotent: constant term must vanish");
    OperatorSeries acc = one(ring_, nvars_, bound_);
    OperatorSeries pw = one(ring_, nvars_, bound_);
    Rational fact(1);
    for (int j = 1; j <= bound_; ++j) {
        pw = pw * *this;
        if (pw.is_zero()) break;
        fact *= Rational(j);
        acc += pw.scale(YPolynomial(Rational(1) / fact));
    }
    return acc;
}

OperatorSeries OperatorSeries::from_series_in_var(const UniSeries& s, int var, int nvars,
                                                  int bound, const RingPtr& ring) {
    OperatorSeries r(ring, nvars, bound);
    std::vector<int> e(nvars, 0);
    for (int m = 0; m <= std::min(bound, s.order()); ++m) {
        e[var] = m;
        r.add_term(e, GradedClass::unit(ring).scale(s[m]));
    }
    return r;
}

OperatorSeries OperatorSeries::from_series_at_difference(const UniSeries& s, int var_i, int var_j,
                                                         int nvars, int bound, const RingPtr& ring) {
    // sum_m s[m] (R_j - R_i)^m expanded binomially.
    if (var_i == var_j)
        throw std::invalid_argument("from_series_at_difference: variables must differ");
    OperatorSeries r(ring, nvars, bound);
    std::vector<int> e(nvars, 0);
    for (int m = 0; m <= std::min(bound, s.order()); ++m) {
        if (s[m].is_zero()) continue;
        for (int l = 0; l <= m; ++l) {
            // R_j^l (-R_i)^(m-l)
            Rational c = Rational::binomial(m, l);
            if ((m - l) % 2 == 1) c = -c;
            e[var_j] = l;
            e[var_i] = m - l;
            r.add_term(e, GradedClass::unit(ring).scale(s[m] * YPolynomial(c)));
            e[var_j] = 0;
            e[var_i] = 0;
        }
    }
    return r;
}

OperatorSeries ty_twist_series(const BundleCharacter& v, int var, int nvars, int bound) {
    RingPtr ring = v.ring();
    OperatorSeries arg(ring, nvars, bound);
    if (bound >= 1) {
        auto g = log_qy_coeffs(bound);
        std::vector<int> e(nvars, 0);
        for (int m = 1; m <= bound; ++m) {
            for (int j = 0; j <= m; ++j) {
                YPolynomial w = g[m - 1] * YPolynomial(Rational::binomial(m, j));
                GradedClass cls(ring);
                if (j == 0)
                    cls = GradedClass::unit(ring).scale(YPolynomial(Rational(v.rank)));
                else if (j <= v.order())
                    cls = v.p[j];
                e[var] = m - j;
                arg.add_term(e, cls.scale(w));
                e[var] = 0;
            }
        }
    }
    return arg.exp_nilpotent();
}

std::vector<GradedClass> ty_of_twisted(const BundleCharacter& v, int order) {
    OperatorSeries s = ty_twist_series(v, 0, 1, order);
    std::vector<GradedClass> out;
    out.reserve(order + 1);
    for (int m = 0; m <= order; ++m) out.push_back(s.coeff({m}));
    return out;
}

}  // namespace vexil
