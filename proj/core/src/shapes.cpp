#include "vexil/shapes.hpp"

#include <functional>
#include <stdexcept>

namespace vexil {

void validate_shape(const Shape& kappa) {
    for (size_t i = 0; i < kappa.size(); ++i) {
        if (kappa[i] < 0) throw std::invalid_argument("shape: entries must be nonnegative");
        if (i > 0 && kappa[i] < kappa[i - 1])
            throw std::invalid_argument("shape: entries must weakly increase");
    }
}

void validate_feasible(const std::vector<int>& lambda, const Shape& kappa) {
    validate_shape(kappa);
    if (lambda.size() != kappa.size())
        throw std::invalid_argument("shape: lambda and kappa lengths differ");
    for (size_t i = 0; i + 1 < kappa.size(); ++i)
        if (lambda[i] + kappa[i] < lambda[i + 1] + kappa[i + 1])
            throw std::invalid_argument("shape: lambda + kappa is not weakly decreasing");
}

Shape kappa_red(const std::vector<int>& lambda, const Shape& kappa) {
    validate_feasible(lambda, kappa);
    size_t t = kappa.size();
    if (t == 0) return {};
    std::vector<bool> forced(t, false);
    forced[t - 1] = true;
    for (size_t i = 0; i + 1 < t; ++i)
        if (kappa[i + 1] + lambda[i + 1] < kappa[i] + lambda[i]) forced[i] = true;
    Shape red(t, 0);
    for (size_t i = 0; i < t; ++i) {
        if (forced[i])
            red[i] = kappa[i];
        else
            red[i] = i == 0 ? 0 : red[i - 1];
    }
    return red;
}

namespace {

/// Walks all weakly increasing sequences lo <= s <= hi componentwise.
void walk_box(const Shape& lo, const Shape& hi, const std::function<void(const Shape&)>& visit) {
    size_t t = lo.size();
    Shape cur(t, 0);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == t) {
            visit(cur);
            return;
        }
        int from = std::max(lo[i], i == 0 ? 0 : cur[i - 1]);
        for (int v = from; v <= hi[i]; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

int shape_weight(const Shape& s) {
    int w = 0;
    for (int x : s) w += x;
    return w;
}

}  // namespace

YPolynomial d_kappa(const std::vector<int>& lambda, const Shape& kappa) {
    Shape red = kappa_red(lambda, kappa);
    YPolynomial acc;
    walk_box(red, kappa, [&](const Shape& s) {
        int w = shape_weight(s);
        acc += YPolynomial::monomial(w, Rational(w % 2 == 0 ? 1 : -1));
    });
    return acc;
}

YPolynomial d_kappa_bruteforce(const std::vector<int>& lambda, const Shape& kappa) {
    validate_feasible(lambda, kappa);
    size_t t = kappa.size();
    // Feasible shapes strictly below kappa.
    std::vector<Shape> smaller;
    walk_box(Shape(t, 0), kappa, [&](const Shape& eps) {
        if (eps == kappa) return;
        bool ok = true;
        for (size_t i = 0; i + 1 < t; ++i)
            if (lambda[i] + eps[i] < lambda[i + 1] + eps[i + 1]) ok = false;
        if (ok) smaller.push_back(eps);
    });
    YPolynomial acc;
    walk_box(Shape(t, 0), kappa, [&](const Shape& s) {
        for (const Shape& eps : smaller) {
            bool inside = true;
            for (size_t i = 0; i < t; ++i)
                if (s[i] > eps[i]) inside = false;
            if (inside) return;
        }
        int w = shape_weight(s);
        acc += YPolynomial::monomial(w, Rational(w % 2 == 0 ? 1 : -1));
    });
    return acc;
}

long p_shapes(const Shape& kappa) {
    validate_shape(kappa);
    int l = static_cast<int>(kappa.size());
    if (l == 0) return 1;
    // |C(kappa_{l+1-j} + l - i + 1, 1 + j - i)| over 1 <= i, j <= l.
    std::vector<std::vector<Rational>> m(l, std::vector<Rational>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            m[i - 1][j - 1] = Rational::binomial(kappa[l - j] + l - i + 1, 1 + j - i);
    // Gaussian elimination over Q.
    Rational det(1);
    for (int col = 0; col < l; ++col) {
        int piv = -1;
        for (int row = col; row < l; ++row)
            if (!m[row][col].is_zero()) {
                piv = row;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int row = col + 1; row < l; ++row) {
            Rational f = m[row][col] / m[col][col];
            for (int c2 = col; c2 < l; ++c2) m[row][c2] -= f * m[col][c2];
        }
    }
    if (!det.is_integer()) throw std::logic_error("p_shapes: non-integer determinant");
    return det.raw().get_num().get_si();
}

long p_shapes_bruteforce(const Shape& kappa) {
    validate_shape(kappa);
    long n = 0;
    walk_box(Shape(kappa.size(), 0), kappa, [&](const Shape&) { ++n; });
    return n;
}

YPolynomial gaussian_binomial(int m, int k) {
    if (k < 0 || k > m) throw std::invalid_argument("gaussian_binomial: need 0 <= k <= m");
    // q-Pascal: [m k] = [m-1 k-1] + q^k [m-1 k].
    std::vector<std::vector<YPolynomial>> table(m + 1, std::vector<YPolynomial>(m + 1));
    for (int a = 0; a <= m; ++a) {
        table[a][0] = YPolynomial(1);
        for (int b = 1; b <= a; ++b) {
            table[a][b] = table[a - 1][b - 1];
            if (b <= a - 1) table[a][b] += YPolynomial::monomial(b, Rational(1)) * table[a - 1][b];
        }
    }
    return table[m][k];
}

std::vector<int> GrassmannLocus::lambda() const {
    std::vector<int> lam(q.size());
    for (size_t i = 0; i < q.size(); ++i) lam[i] = q[i] - p + static_cast<int>(i) + 1;
    return lam;
}

Triple GrassmannLocus::base_triple() const {
    std::vector<int> kk(q.size()), pp(q.size(), p);
    for (size_t i = 0; i < q.size(); ++i) kk[i] = static_cast<int>(i) + 1;
    return Triple(kk, pp, q);
}

std::vector<Shape> feasible_kappas(const std::vector<int>& lambda, int p, int dim_bound) {
    int t = static_cast<int>(lambda.size());
    std::vector<Shape> out;
    Shape cur(t, 0);
    // Stratum codimension per the block partition: 1 + kappa_a - kappa_{a-1}
    // parts of lambda_a + kappa_a.
    auto codim = [&](const Shape& s) {
        int w = 0;
        for (int a = 0; a < t; ++a) w += (1 + s[a] - (a == 0 ? 0 : s[a - 1])) * (lambda[a] + s[a]);
        return w;
    };
    std::function<void(int)> rec = [&](int i) {
        if (i == t) {
            out.push_back(cur);
            return;
        }
        int lo = i == 0 ? 0 : cur[i - 1];
        // All three stopping conditions are monotone in v, so the first
        // violation ends the scan at this position.
        for (int v = lo;; ++v) {
            if (i + 1 + v > p) break;
            if (i > 0 && lambda[i - 1] + cur[i - 1] < lambda[i] + v) break;
            cur[i] = v;
            Shape probe = cur;
            for (int j = i + 1; j < t; ++j) probe[j] = probe[j - 1];
            if (codim(probe) > dim_bound) break;
            rec(i + 1);
        }
        cur[i] = 0;
    };
    rec(0);
    return out;
}

GradedClass omega_pushforward(const GrassmannLocus& locus) {
    const DegeneracyGeometry& geom = *locus.geom;
    std::vector<int> lam = locus.lambda();
    int t = static_cast<int>(lam.size());
    MotivicSolver solver(geom);
    GradedClass total(geom.ring());
    for (const Shape& kappa : feasible_kappas(lam, locus.p, geom.dimension())) {
        std::vector<int> kk(t);
        for (int i = 0; i < t; ++i) kk[i] = i + 1 + kappa[i];
        Triple stratum(kk, std::vector<int>(t, locus.p), locus.q);
        total += solver.motivic_class(stratum).scale(d_kappa(lam, kappa));
    }
    return total;
}

YPolynomial chi_y_omega(const GrassmannLocus& locus) {
    return chi_y(omega_pushforward(locus));
}

}  // namespace vexil
