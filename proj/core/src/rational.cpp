#include "vexil/rational.hpp"

namespace vexil {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    try {
        mpq_class v(s);
        if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
        v.canonicalize();
        return Rational(std::move(v));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
}

Rational Rational::factorial(long n) {
    if (n < 0) throw std::invalid_argument("Rational::factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(mpq_class(f));
}

Rational Rational::binomial(long n, long k) {
    if (k < 0) return Rational(0);
    Rational r(1);
    for (long i = 0; i < k; ++i) {
        r *= Rational(n - i, i + 1);
    }
    return r;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace vexil
