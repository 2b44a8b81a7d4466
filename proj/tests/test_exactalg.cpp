#include <doctest.h>

#include <random>

#include "vexil/series.hpp"

using namespace vexil;

namespace {

YPolynomial ypoly_const(long num, long den = 1) { return YPolynomial(Rational(num, den)); }

// Q_y built straight from the defining fraction:
// invert (1 - e^{-a(1+y)}) / (a(1+y)), then subtract a y.
UniSeries qy_from_fraction(int order) {
    UniSeries h(order);
    for (int k = 0; k <= order; ++k) {
        Rational c = Rational(1) / Rational::factorial(k + 1);
        h[k] = one_plus_y_power(k) * YPolynomial(k % 2 == 0 ? c : -c);
    }
    UniSeries q = series_invert(h);
    if (order >= 1) q[1] -= YPolynomial::y();
    return q;
}

UniSeries random_unit_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 4), deg(0, 2);
    UniSeries s = UniSeries::one(order);
    for (int d = 1; d <= order; ++d) {
        YPolynomial c;
        int top = deg(rng);
        for (int e = 0; e <= top; ++e) c += YPolynomial::monomial(e, Rational(num(rng), den(rng)));
        s[d] = c;
    }
    return s;
}

}  // namespace

TEST_CASE("rational normalization and parsing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational::parse("-80") == Rational(-80));
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK(Rational::binomial(-3, 2) == Rational(6));
    CHECK(Rational::binomial(5, 7) == Rational(0));
}

TEST_CASE("ypolynomial arithmetic, evaluation, printing") {
    YPolynomial p = YPolynomial::monomial(2, Rational(32)) -
                    YPolynomial::monomial(1, Rational(80)) + ypoly_const(32);
    CHECK(p.str() == "32*y^2 - 80*y + 32");
    CHECK(p.eval(Rational(1)) == Rational(-16));
    CHECK(p.eval(Rational(-1)) == Rational(144));
    CHECK(YPolynomial().str() == "0");
    CHECK((YPolynomial::y(2) - YPolynomial(1)).str() == "y^2 - 1");

    // evaluation is a ring homomorphism
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 5);
    for (int trial = 0; trial < 50; ++trial) {
        YPolynomial f, g;
        for (int e = 0; e < 4; ++e) {
            f += YPolynomial::monomial(e, Rational(num(rng), den(rng)));
            g += YPolynomial::monomial(e, Rational(num(rng), den(rng)));
        }
        Rational y0(num(rng), den(rng));
        CHECK((f * g).eval(y0) == f.eval(y0) * g.eval(y0));
        CHECK((f + g).eval(y0) == f.eval(y0) + g.eval(y0));
    }
}

TEST_CASE("bernoulli numbers in the B_1 = +1/2 convention") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("qy_series matches its displayed truncation") {
    UniSeries q2 = qy_series(2);
    CHECK(q2[0] == YPolynomial(1));
    CHECK(q2[1] == (YPolynomial(1) - YPolynomial::y()) * ypoly_const(1, 2));
    CHECK(q2[2] == one_plus_y_power(2) * ypoly_const(1, 12));
}

TEST_CASE("qy_series specializations at y = -1 and y = 0") {
    UniSeries q = qy_series(6);
    for (int d = 0; d <= 6; ++d) {
        Rational at_m1 = q[d].eval(Rational(-1));
        CHECK(at_m1 == (d <= 1 ? Rational(1) : Rational(0)));  // total Chern class 1 + a
    }
    // Todd series a/(1-e^{-a}) = 1 + a/2 + a^2/12 + 0 a^3 - a^4/720 ...
    CHECK(q[1].eval(Rational(0)) == Rational(1, 2));
    CHECK(q[2].eval(Rational(0)) == Rational(1, 12));
    CHECK(q[3].eval(Rational(0)) == Rational(0));
    CHECK(q[4].eval(Rational(0)) == Rational(-1, 720));
}

TEST_CASE("qy coefficients cross-checked against the defining fraction") {
    UniSeries direct = qy_from_fraction(12);
    UniSeries built = qy_series(12);
    for (int d = 0; d <= 12; ++d) CHECK(built[d] == direct[d]);
}

TEST_CASE("log of Q_y") {
    auto g = log_qy_coeffs(3);
    CHECK(g[0] == (YPolynomial(1) - YPolynomial::y()) * ypoly_const(1, 2));
    // exp(log Q_y) = Q_y
    UniSeries lg(3);
    for (int m = 1; m <= 3; ++m) lg[m] = g[m - 1];
    CHECK(series_exp(lg) == qy_series(3));
    // at y = -1, log(1+a): g_1 = 1, g_2 = -1/2
    CHECK(g[0].eval(Rational(-1)) == Rational(1));
    CHECK(g[1].eval(Rational(-1)) == Rational(-1, 2));
}

TEST_CASE("series inversion examples") {
    UniSeries one_plus = UniSeries::one(5);
    one_plus[1] = YPolynomial(1);
    UniSeries geo = series_invert(one_plus);
    for (int d = 0; d <= 5; ++d) CHECK(geo[d] == ypoly_const(d % 2 == 0 ? 1 : -1));

    UniSeries q = qy_series(6);
    UniSeries prod = series_invert(q) * q;
    CHECK(prod == UniSeries::one(6));

    UniSeries inv2 = series_invert(qy_series(2));
    CHECK(inv2[1] == (YPolynomial::y() - YPolynomial(1)) * ypoly_const(1, 2));
    YPolynomial expected2 = (YPolynomial(1) - YPolynomial::y()) * (YPolynomial(1) - YPolynomial::y()) *
                                ypoly_const(1, 4) -
                            one_plus_y_power(2) * ypoly_const(1, 12);
    CHECK(inv2[2] == expected2);

    UniSeries bad = UniSeries::one(3);
    bad[0] = ypoly_const(2);
    CHECK_THROWS_AS(series_invert(bad), std::invalid_argument);
    CHECK_THROWS_AS(series_log(bad), std::invalid_argument);
    CHECK_THROWS_AS(series_exp(UniSeries::one(3)), std::invalid_argument);
}

TEST_CASE("exp/log/invert round trips on random series") {
    std::mt19937 rng(20240809);
    for (int trial = 0; trial < 100; ++trial) {
        UniSeries s = random_unit_series(rng, 8);
        CHECK(series_exp(series_log(s)) == s);
        CHECK(series_invert(series_invert(s)) == s);
    }
}
