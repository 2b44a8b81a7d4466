#include "vexil/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace vexil {

UniSeries UniSeries::truncate(int new_order) const {
    UniSeries r(std::min(new_order, order()));
    for (int d = 0; d <= r.order(); ++d) r.c_[d] = c_[d];
    return r;
}

UniSeries operator+(const UniSeries& a, const UniSeries& b) {
    UniSeries r(std::min(a.order(), b.order()));
    for (int d = 0; d <= r.order(); ++d) r.c_[d] = a.c_[d] + b.c_[d];
    return r;
}

UniSeries operator-(const UniSeries& a, const UniSeries& b) {
    UniSeries r(std::min(a.order(), b.order()));
    for (int d = 0; d <= r.order(); ++d) r.c_[d] = a.c_[d] - b.c_[d];
    return r;
}

UniSeries operator*(const UniSeries& a, const UniSeries& b) {
    UniSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i)
        for (int j = 0; i + j <= r.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    return r;
}

UniSeries UniSeries::scale(const YPolynomial& f) const {
    UniSeries r(order());
    for (int d = 0; d <= order(); ++d) r.c_[d] = c_[d] * f;
    return r;
}

UniSeries series_invert(const UniSeries& s) {
    if (s[0] != YPolynomial(1))
        throw std::invalid_argument("series_invert: constant term must be 1");
    UniSeries r(s.order());
    r[0] = YPolynomial(1);
    for (int n = 1; n <= s.order(); ++n) {
        YPolynomial acc;
        for (int k = 1; k <= n; ++k) acc += s[k] * r[n - k];
        r[n] = -acc;
    }
    return r;
}

UniSeries series_exp(const UniSeries& s) {
    if (!s[0].is_zero())
        throw std::invalid_argument("series_exp: constant term must be 0");
    // b' = a' b, i.e. n b_n = sum_{k=1..n} k a_k b_{n-k}.
    UniSeries r(s.order());
    r[0] = YPolynomial(1);
    for (int n = 1; n <= s.order(); ++n) {
        YPolynomial acc;
        for (int k = 1; k <= n; ++k) acc += s[k] * r[n - k] * YPolynomial(Rational(k));
        r[n] = acc * YPolynomial(Rational(1, n));
    }
    return r;
}

UniSeries series_log(const UniSeries& s) {
    if (s[0] != YPolynomial(1))
        throw std::invalid_argument("series_log: constant term must be 1");
    // g' = a'/a, i.e. n g_n = n a_n - sum_{k=1..n-1} k g_k a_{n-k}.
    UniSeries r(s.order());
    for (int n = 1; n <= s.order(); ++n) {
        YPolynomial acc = s[n] * YPolynomial(Rational(n));
        for (int k = 1; k < n; ++k) acc -= r[k] * s[n - k] * YPolynomial(Rational(k));
        r[n] = acc * YPolynomial(Rational(1, n));
    }
    return r;
}

Rational bernoulli(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli: negative index");
    static std::vector<Rational> cache;
    if (static_cast<int>(cache.size()) > n) return cache[n];
    // Invert (1 - e^{-t})/t = sum_k (-1)^k t^k / (k+1)!; coefficient k of the
    // inverse is B_k / k!.
    int order = std::max(n, 16);
    UniSeries h(order);
    for (int k = 0; k <= order; ++k) {
        Rational c = Rational(1) / Rational::factorial(k + 1);
        h[k] = YPolynomial(k % 2 == 0 ? c : -c);
    }
    UniSeries inv = series_invert(h);
    cache.resize(order + 1);
    for (int k = 0; k <= order; ++k)
        cache[k] = inv[k].constant_value() * Rational::factorial(k);
    return cache[n];
}

YPolynomial one_plus_y_power(int n) {
    YPolynomial r(1);
    for (int i = 0; i < n; ++i) r *= YPolynomial(1) + YPolynomial::y();
    return r;
}

UniSeries qy_series(int order) {
    if (order < 0) throw std::invalid_argument("qy_series: negative order");
    UniSeries r(order);
    for (int d = 0; d <= order; ++d) {
        Rational b = bernoulli(d);
        if (b.is_zero()) continue;
        r[d] = one_plus_y_power(d) * YPolynomial(b / Rational::factorial(d));
    }
    if (order >= 1) r[1] -= YPolynomial::y();
    return r;
}

std::vector<YPolynomial> log_qy_coeffs(int order) {
    if (order < 1) throw std::invalid_argument("log_qy_coeffs: order must be >= 1");
    UniSeries lg = series_log(qy_series(order));
    std::vector<YPolynomial> g;
    g.reserve(order);
    for (int m = 1; m <= order; ++m) g.push_back(lg[m]);
    return g;
}

}  // namespace vexil
