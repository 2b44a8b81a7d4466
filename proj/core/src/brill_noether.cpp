#include "vexil/brill_noether.hpp"

#include <algorithm>
#include <stdexcept>

#include "vexil/theta_ring.hpp"

namespace vexil {

BNProblem bn_problem(int g, int d, std::vector<int> a) {
    if (g < 1) throw std::invalid_argument("bn_problem: genus must be >= 1");
    if (d < 0) throw std::invalid_argument("bn_problem: degree must be >= 0");
    if (a.empty()) throw std::invalid_argument("bn_problem: vanishing sequence is empty");
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0 || a[i] > d)
            throw std::invalid_argument("bn_problem: vanishing orders must lie in [0, d]");
        if (i > 0 && a[i] <= a[i - 1])
            throw std::invalid_argument("bn_problem: vanishing sequence must strictly increase");
    }
    BNProblem prob;
    prob.g = g;
    prob.d = d;
    prob.a = std::move(a);
    prob.r = static_cast<int>(prob.a.size()) - 1;
    int r = prob.r;
    prob.lambda.resize(r + 1);
    for (int i = 1; i <= r + 1; ++i)
        prob.lambda[i - 1] = g - d + r + prob.a[r + 1 - i] - (r + 1 - i);
    prob.rho = g;
    for (int v : prob.lambda) prob.rho -= v;
    return prob;
}

int bn_default_n(const BNProblem& prob) { return std::max(1, 2 * prob.g - 1 - prob.d); }

bool bn_nonempty(const BNProblem& prob) {
    int s = 0;
    for (int v : prob.lambda) s += std::max(0, v);
    return prob.g >= s;
}

GrassmannLocus BNModel::locus() const {
    GrassmannLocus loc;
    loc.geom = geom;
    loc.p = p;
    loc.q = q;
    return loc;
}

BNModel bn_geometry(const BNProblem& prob, int n) {
    if (n < 2 * prob.g - 1 - prob.d)
        throw std::invalid_argument("bn_geometry: twist n below non-speciality bound 2g-1-d");
    BNModel m;
    m.geom = std::make_shared<ThetaGeometry>(prob.g);
    m.n = n;
    m.p = prob.d + n - prob.g + 1;
    int r = prob.r;
    std::vector<int> kk(r + 1), pp(r + 1, m.p), qq(r + 1);
    for (int i = 1; i <= r + 1; ++i) {
        kk[i - 1] = i;
        qq[i - 1] = n + prob.a[r + 1 - i];
    }
    m.q = qq;
    m.triple = Triple(kk, pp, qq);
    return m;
}

GradedClass ty_class_W(const BNProblem& prob, std::optional<int> n) {
    BNModel m = bn_geometry(prob, n.value_or(bn_default_n(prob)));
    return motivic_class(m.triple, *m.geom);
}

YPolynomial chi_y_W(const BNProblem& prob, std::optional<int> n) {
    return chi_y(ty_class_W(prob, n));
}

std::optional<std::vector<int>> bn_sequence_for_kappa(const BNProblem& prob, const Shape& kappa) {
    int r = prob.r;
    std::vector<int> out;
    for (int j = 0; j <= r; ++j) {
        int hi = kappa[r - j];  // kappa_{r+1-j} in 1-based labels
        int lo = j == r ? 0 : kappa[r - j - 1];
        for (int s = 0; s <= hi - lo; ++s) {
            int entry = prob.a[j] + s;
            if (entry > prob.d) return std::nullopt;
            if (!out.empty() && entry <= out.back()) return std::nullopt;
            out.push_back(entry);
        }
    }
    return out;
}

YPolynomial chi_y_G(const BNProblem& prob, std::optional<int> n) {
    int twist = n.value_or(bn_default_n(prob));
    YPolynomial acc;
    for (const Shape& kappa : feasible_kappas(prob.lambda, prob.d + twist - prob.g + 1, prob.g)) {
        auto seq = bn_sequence_for_kappa(prob, kappa);
        if (!seq) continue;  // stratum outside [0, d]: empty
        BNProblem sub = bn_problem(prob.g, prob.d, *seq);
        acc += d_kappa(prob.lambda, kappa) * chi_y_W(sub, std::max(twist, bn_default_n(sub)));
    }
    return acc;
}

Rational oracle_factorial_det(const std::vector<int>& l) {
    int t = static_cast<int>(l.size());
    Rational num(1);
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) num *= Rational(l[i] - l[j] + j - i);
    Rational den(1);
    for (int i = 0; i < t; ++i) {
        int m = l[i] + t - 1 - i;
        if (m < 0) return Rational(0);  // a whole row vanishes
        den *= Rational::factorial(m);
    }
    return num / den;
}

Rational oracle_factorial_det_expand(const std::vector<int>& l) {
    int t = static_cast<int>(l.size());
    std::vector<int> perm(t);
    for (int i = 0; i < t; ++i) perm[i] = i + 1;
    Rational acc(0);
    do {
        int inv = 0;
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j)
                if (perm[i] > perm[j]) ++inv;
        Rational term(1);
        bool dead = false;
        for (int i = 0; i < t; ++i) {
            int m = l[i] + perm[i] - (i + 1);
            if (m < 0) {
                dead = true;
                break;
            }
            term /= Rational::factorial(m);
        }
        if (!dead) acc += inv % 2 == 0 ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

namespace {

Rational classical_prefactor(int g, int r, int d) {
    int lambda = g - d + r;
    Rational pre(1);
    for (int i = 0; i <= r; ++i)
        pre *= Rational::factorial(i) / Rational::factorial(lambda + i);
    return pre;
}

YPolynomial y_minus_one_pow(int n) {
    YPolynomial b = YPolynomial::y() - YPolynomial(1);
    YPolynomial r(1);
    for (int i = 0; i < n; ++i) r *= b;
    return r;
}

}  // namespace

SurfaceOracle oracle_surface_classical(int g, int r, int d) {
    int lambda = g - d + r;
    if (g - (r + 1) * lambda != 2)
        throw std::invalid_argument("oracle_surface_classical: expected dimension is not 2");
    Rational pre = classical_prefactor(g, r, d);
    RingPtr ring = theta_ring(g);

    YPolynomial theta_coeff, theta2_coeff;
    if (lambda > 0) {
        // Middle coefficient lambda (r+1) / (lambda+r+1), from the
        // degree-one operator values (r+1) theta + sum_k (lambda-r-2+k) R_k
        // on the factorial determinant: only theta and R_1 act, with
        // R_1 |c| / theta |c| = (r+1)/(lambda+r+1).
        theta_coeff =
            y_minus_one_pow(1) * YPolynomial(Rational(lambda * (r + 1), lambda + r + 1));
        theta2_coeff =
            (y_minus_one_pow(2) * YPolynomial(Rational(lambda * (r + 1))) -
             YPolynomial::monomial(1, Rational(2))) *
            YPolynomial(Rational(lambda * (r + 1), 2 * (lambda + r) * (lambda + r + 2)));
    }

    GradedClass cls(ring);
    cls.add_term({g - 2}, YPolynomial(pre));
    cls.add_term({g - 1}, theta_coeff * YPolynomial(pre));
    cls.add_term({g}, theta2_coeff * YPolynomial(pre));

    SurfaceOracle out{cls, theta2_coeff * YPolynomial(pre * Rational::factorial(g))};
    return out;
}

Rational oracle_surface_signature(int g, int r, int d) {
    if (g == 2) return Rational(0);
    Rational pre = classical_prefactor(g, r, d);
    return Rational::factorial(g) * Rational(2 - g) * pre /
           Rational((g - d + 2 * r) * (g - d + 2 * r + 2));
}

YPolynomial pencil_chi_formula(int l1, int l2, int g) {
    long n2 = (2L * l2 * (l2 + 2) + 1) * l1 * l1 * l1 -
              static_cast<long>(l2 - 4) * (2L * l2 * (l2 + 2) + 1) * l1 * l1 +
              (static_cast<long>(l2) * (10 - l2 * (6L * l2 + 5)) + 3) * l1 -
              3L * l2 * (l2 + 1) * (l2 + 1);
    long lin = static_cast<long>(l1 + 2) * (l2 + 1) *
               (static_cast<long>(l1) * l1 + 4L * l1 - static_cast<long>(l2) * l2 - 2L * l2 + 3);
    Rational scale = Rational::factorial(g) /
                     (Rational::factorial(l1 + 3) * Rational::factorial(l2 + 2));
    YPolynomial chi = y_minus_one_pow(2) * YPolynomial(Rational(n2)) -
                      YPolynomial::monomial(1, Rational(lin));
    return chi * YPolynomial(scale);
}

SurfaceOracle oracle_surface_pencil(int g, int d, const std::vector<int>& a) {
    BNProblem prob = bn_problem(g, d, a);
    if (prob.r != 1) throw std::invalid_argument("oracle_surface_pencil: needs r = 1");
    if (prob.rho != 2) throw std::invalid_argument("oracle_surface_pencil: expected dimension is not 2");
    int l1 = prob.lambda[0], l2 = prob.lambda[1];
    if (l1 <= l2) throw std::invalid_argument("oracle_surface_pencil: needs lambda_1 > lambda_2");
    if (l2 < 1) throw std::invalid_argument("oracle_surface_pencil: needs lambda_2 >= 1");

    RingPtr ring = theta_ring(g);
    Rational lead = Rational(1 + l1 - l2) /
                    (Rational::factorial(l1 + 1) * Rational::factorial(l2));
    // Middle coefficient assembled from the degree-one operator values:
    // (lambda_1 - 2) R_1 + (lambda_2 - 1) R_2 + 2 theta acting on the
    // factorial determinant, each evaluated by the Vandermonde closed form.
    Rational mid = Rational(l1 - 2) * Rational(l1 - l2 + 2, (l1 + 2) * (1 + l1 - l2)) +
                   Rational(l2 - 1) * Rational(l1 - l2, (l2 + 1) * (1 + l1 - l2)) + Rational(2);
    YPolynomial theta_coeff = y_minus_one_pow(1) * YPolynomial(mid / Rational(2));
    long n2 = (2L * l2 * (l2 + 2) + 1) * l1 * l1 * l1 -
              static_cast<long>(l2 - 4) * (2L * l2 * (l2 + 2) + 1) * l1 * l1 +
              (static_cast<long>(l2) * (10 - l2 * (6L * l2 + 5)) + 3) * l1 -
              3L * l2 * (l2 + 1) * (l2 + 1);
    long lin = static_cast<long>(l1 + 2) * (l2 + 1) *
               (static_cast<long>(l1) * l1 + 4L * l1 - static_cast<long>(l2) * l2 - 2L * l2 + 3);
    Rational den = Rational(1 + l1 - l2) * Rational(l1 + 2) * Rational(l1 + 3) *
                   Rational(l2 + 1) * Rational(l2 + 2);
    YPolynomial theta2_coeff =
        (y_minus_one_pow(2) * YPolynomial(Rational(n2)) - YPolynomial::monomial(1, Rational(lin))) *
        YPolynomial(Rational(1) / den);

    GradedClass cls(ring);
    cls.add_term({g - 2}, YPolynomial(lead));
    cls.add_term({g - 1}, theta_coeff * YPolynomial(lead));
    cls.add_term({g}, theta2_coeff * YPolynomial(lead));
    return SurfaceOracle{cls, pencil_chi_formula(l1, l2, g)};
}

YPolynomial oracle_curve(int g, int d, const std::vector<int>& a) {
    BNProblem prob = bn_problem(g, d, a);
    if (prob.rho != 1) throw std::invalid_argument("oracle_curve: expected dimension is not 1");
    Rational sum(0);
    int t = prob.r + 1;
    for (int k = 1; k <= t; ++k) {
        std::vector<int> l = prob.lambda;
        l[k - 1] += 1;
        sum += Rational(prob.lambda[k - 1]) * oracle_factorial_det(l);
    }
    return y_minus_one_pow(1) * YPolynomial(sum * Rational::factorial(g));
}

}  // namespace vexil
