#pragma once

#include <vector>

#include "vexil/ypoly.hpp"

namespace vexil {

/// Truncated power series in one formal variable with YPolynomial
/// coefficients. The truncation order is part of the value; binary
/// operations truncate to the smaller order so precision is never
/// silently overstated.
class UniSeries {
public:
    explicit UniSeries(int order) : c_(order + 1) {}
    static UniSeries one(int order) {
        UniSeries s(order);
        s.c_[0] = YPolynomial(1);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const YPolynomial& operator[](int d) const { return c_[d]; }
    YPolynomial& operator[](int d) { return c_[d]; }

    UniSeries truncate(int new_order) const;

    friend UniSeries operator+(const UniSeries& a, const UniSeries& b);
    friend UniSeries operator-(const UniSeries& a, const UniSeries& b);
    friend UniSeries operator*(const UniSeries& a, const UniSeries& b);
    UniSeries scale(const YPolynomial& f) const;

    friend bool operator==(const UniSeries& a, const UniSeries& b) { return a.c_ == b.c_; }

private:
    std::vector<YPolynomial> c_;
};

/// Multiplicative inverse; the constant term must be 1.
UniSeries series_invert(const UniSeries& s);
/// exp of a series with zero constant term.
UniSeries series_exp(const UniSeries& s);
/// log of a series with constant term 1.
UniSeries series_log(const UniSeries& s);

/// Bernoulli number B_n in the convention with B_1 = +1/2,
/// i.e. t/(1 - e^{-t}) = sum B_n t^n / n!.
Rational bernoulli(int n);

/// Truncation of Q_y(a) = a(1+y)/(1 - e^{-a(1+y)}) - a y.
/// Degree-n coefficient is B_n (1+y)^n / n! for n != 1, and (1-y)/2 for n = 1.
UniSeries qy_series(int order);

/// Coefficients g_1..g_order of log Q_y(a) = sum_m g_m(y) a^m.
std::vector<YPolynomial> log_qy_coeffs(int order);

/// (1+y)^n expanded as a polynomial.
YPolynomial one_plus_y_power(int n);

}  // namespace vexil
