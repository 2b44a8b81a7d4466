#include "vexil/ypoly.hpp"

#include <stdexcept>

namespace vexil {

YPolynomial YPolynomial::monomial(int exp, const Rational& coeff) {
    if (exp < 0) throw std::invalid_argument("YPolynomial: negative exponent");
    YPolynomial p;
    p.set(exp, coeff);
    return p;
}

YPolynomial YPolynomial::operator-() const {
    YPolynomial r;
    for (const auto& [e, c] : c_) r.c_[e] = -c;
    return r;
}

YPolynomial& YPolynomial::operator+=(const YPolynomial& o) {
    for (const auto& [e, c] : o.c_) set(e, coeff(e) + c);
    return *this;
}

YPolynomial& YPolynomial::operator-=(const YPolynomial& o) {
    for (const auto& [e, c] : o.c_) set(e, coeff(e) - c);
    return *this;
}

YPolynomial operator*(const YPolynomial& a, const YPolynomial& b) {
    YPolynomial r;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
    return r;
}

Rational YPolynomial::eval(const Rational& y0) const {
    // Horner over the stored exponents.
    Rational acc(0);
    int prev = -1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (prev >= 0)
            for (int i = 0; i < prev - it->first; ++i) acc *= y0;
        acc += it->second;
        prev = it->first;
    }
    if (prev > 0)
        for (int i = 0; i < prev; ++i) acc *= y0;
    return acc;
}

YPolynomial YPolynomial::substitute_negated() const {
    YPolynomial r;
    for (const auto& [e, c] : c_) r.c_[e] = (e % 2 == 0) ? c : -c;
    return r;
}

std::string YPolynomial::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = c < Rational(0);
        Rational a = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string var = e == 0 ? "" : (e == 1 ? "y" : "y^" + std::to_string(e));
        if (e == 0) {
            out += a.str();
        } else if (a.is_one()) {
            out += var;
        } else {
            out += a.str() + "*" + var;
        }
    }
    return out;
}

}  // namespace vexil
