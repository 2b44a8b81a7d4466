#include "vexil/character.hpp"

#include <stdexcept>

#include "vexil/series.hpp"

namespace vexil {

BundleCharacter::BundleCharacter(RingPtr ring, int rank_) : rank(rank_) {
    int order = ring->dimension();
    p.assign(order + 1, GradedClass(ring));
}

BundleCharacter BundleCharacter::operator+(const BundleCharacter& o) const {
    BundleCharacter r(ring(), rank + o.rank);
    for (int j = 1; j <= order(); ++j) r.p[j] = p[j] + o.p[j];
    return r;
}

BundleCharacter BundleCharacter::operator-(const BundleCharacter& o) const {
    BundleCharacter r(ring(), rank - o.rank);
    for (int j = 1; j <= order(); ++j) r.p[j] = p[j] - o.p[j];
    return r;
}

BundleCharacter BundleCharacter::dual() const {
    BundleCharacter r(ring(), rank);
    for (int j = 1; j <= order(); ++j) r.p[j] = (j % 2 == 0) ? p[j] : -p[j];
    return r;
}

BundleCharacter trivial_character(RingPtr ring, int rank) {
    return BundleCharacter(std::move(ring), rank);
}

BundleCharacter line_character(const GradedClass& x) {
    BundleCharacter r(x.ring(), 1);
    GradedClass pw = GradedClass::unit(x.ring());
    for (int j = 1; j <= r.order(); ++j) {
        pw = pw * x;
        r.p[j] = pw;
    }
    return r;
}

BundleCharacter character_from_chern(RingPtr ring, int rank, const std::vector<GradedClass>& c) {
    int order = ring->dimension();
    std::vector<GradedClass> cc(c);
    cc.resize(std::max<size_t>(cc.size(), order + 1), GradedClass(ring));
    auto ps = powersums_from_chern(cc, rank, order);
    BundleCharacter r(std::move(ring), rank);
    for (int j = 1; j <= order; ++j) r.p[j] = ps[j];
    return r;
}

BundleCharacter tensor_character(const BundleCharacter& a, const BundleCharacter& b) {
    if (!a.ring()->same_ring(*b.ring()))
        throw std::invalid_argument("tensor_character: ring mismatch");
    BundleCharacter r(a.ring(), a.rank * b.rank);
    auto pa = [&](int m) {
        return m == 0 ? GradedClass::unit(a.ring()).scale(YPolynomial(Rational(a.rank))) : a.p[m];
    };
    auto pb = [&](int m) {
        return m == 0 ? GradedClass::unit(a.ring()).scale(YPolynomial(Rational(b.rank))) : b.p[m];
    };
    for (int n = 1; n <= r.order(); ++n) {
        GradedClass acc(a.ring());
        for (int m = 0; m <= n; ++m)
            acc += (pa(m) * pb(n - m)).scale(YPolynomial(Rational::binomial(n, m)));
        r.p[n] = acc;
    }
    return r;
}

std::vector<GradedClass> powersums_from_chern(const std::vector<GradedClass>& c, int rank, int order) {
    if (c.empty()) throw std::invalid_argument("powersums_from_chern: empty input");
    RingPtr ring = c[0].ring();
    auto cj = [&](int j) { return j < static_cast<int>(c.size()) ? c[j] : GradedClass(ring); };
    std::vector<GradedClass> p(order + 1, GradedClass(ring));
    p[0] = GradedClass::unit(ring).scale(YPolynomial(Rational(rank)));
    for (int n = 1; n <= order; ++n) {
        GradedClass acc(ring);
        for (int i = 1; i < n; ++i) {
            GradedClass t = cj(i) * p[n - i];
            acc += (i % 2 == 1) ? t : -t;
        }
        GradedClass last = cj(n).scale(YPolynomial(Rational(n)));
        acc += (n % 2 == 1) ? last : -last;
        p[n] = acc;
    }
    return p;
}

std::vector<GradedClass> chern_from_powersums(const std::vector<GradedClass>& p, int order) {
    if (p.empty()) throw std::invalid_argument("chern_from_powersums: empty input");
    RingPtr ring = p[0].ring();
    auto pj = [&](int j) { return j < static_cast<int>(p.size()) ? p[j] : GradedClass(ring); };
    std::vector<GradedClass> c(order + 1, GradedClass(ring));
    c[0] = GradedClass::unit(ring);
    for (int n = 1; n <= order; ++n) {
        GradedClass acc(ring);
        for (int i = 1; i <= n; ++i) {
            GradedClass t = pj(i) * c[n - i];
            acc += (i % 2 == 1) ? t : -t;
        }
        c[n] = acc.scale(YPolynomial(Rational(1, n)));
    }
    return c;
}

GradedClass chern_class(const BundleCharacter& v, int j) {
    if (j < 0) return GradedClass(v.ring());
    if (j > v.ring()->dimension()) return GradedClass(v.ring());
    return chern_table(v, j)[j];
}

std::vector<GradedClass> chern_table(const BundleCharacter& v, int order) {
    return chern_from_powersums(v.p, order);
}

GradedClass ty_of_smooth(const BundleCharacter& tangent) {
    RingPtr ring = tangent.ring();
    int order = ring->dimension();
    GradedClass arg(ring);
    if (order >= 1) {
        auto g = log_qy_coeffs(order);
        for (int m = 1; m <= order; ++m) arg += tangent.p[m].scale(g[m - 1]);
    }
    return arg.exp_nilpotent();
}

}  // namespace vexil
