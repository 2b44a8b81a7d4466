#pragma once

#include <map>
#include <string>

#include "vexil/rational.hpp"

namespace vexil {

/// Polynomial in the formal variable y with Rational coefficients.
/// Zero coefficients are never stored; exponents are >= 0.
class YPolynomial {
public:
    YPolynomial() = default;
    YPolynomial(const Rational& c) {
        if (!c.is_zero()) c_[0] = c;
    }
    YPolynomial(long c) : YPolynomial(Rational(c)) {}

    static YPolynomial monomial(int exp, const Rational& coeff);
    /// The variable itself (or a pure power of it).
    static YPolynomial y(int exp = 1) { return monomial(exp, Rational(1)); }

    Rational coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
    Rational constant_value() const { return coeff(0); }
    int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }

    YPolynomial operator-() const;
    YPolynomial& operator+=(const YPolynomial& o);
    YPolynomial& operator-=(const YPolynomial& o);
    friend YPolynomial operator+(YPolynomial a, const YPolynomial& b) { return a += b; }
    friend YPolynomial operator-(YPolynomial a, const YPolynomial& b) { return a -= b; }
    friend YPolynomial operator*(const YPolynomial& a, const YPolynomial& b);
    YPolynomial& operator*=(const YPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const YPolynomial& a, const YPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const YPolynomial& a, const YPolynomial& b) { return !(a == b); }

    Rational eval(const Rational& y0) const;
    /// Substitutes the variable by its negative: q^i -> (-1)^i y^i.
    YPolynomial substitute_negated() const;
    /// Evaluates and re-wraps as a constant polynomial.
    YPolynomial eval_poly(const Rational& y0) const { return YPolynomial(eval(y0)); }

    /// Descending exponents with explicit signs, e.g. "32*y^2 - 80*y + 32".
    std::string str() const;

    const std::map<int, Rational>& terms() const { return c_; }

private:
    void set(int exp, const Rational& v) {
        if (v.is_zero()) c_.erase(exp); else c_[exp] = v;
    }
    std::map<int, Rational> c_;
};

}  // namespace vexil
