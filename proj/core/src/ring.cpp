#include "vexil/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace vexil {

GradedClass GradedClass::basis(RingPtr ring, const BasisKey& key, const YPolynomial& coeff) {
    GradedClass c(std::move(ring));
    c.add_term(key, coeff);
    return c;
}

int GradedClass::min_degree() const {
    int m = ring_->dimension() + 1;
    for (const auto& [k, v] : t_) m = std::min(m, ring_->degree(k));
    return m;
}

void GradedClass::add_term(const BasisKey& key, const YPolynomial& coeff) {
    if (coeff.is_zero()) return;
    auto it = t_.find(key);
    if (it == t_.end()) {
        t_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) t_.erase(it);
    }
}

void GradedClass::check_same_ring(const GradedClass& o) const {
    if (!ring_->same_ring(*o.ring_))
        throw std::invalid_argument("GradedClass: ring mismatch");
}

GradedClass GradedClass::operator-() const {
    GradedClass r(ring_);
    for (const auto& [k, v] : t_) r.t_[k] = -v;
    return r;
}

GradedClass& GradedClass::operator+=(const GradedClass& o) {
    check_same_ring(o);
    for (const auto& [k, v] : o.t_) add_term(k, v);
    return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& o) {
    check_same_ring(o);
    for (const auto& [k, v] : o.t_) add_term(k, -v);
    return *this;
}

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
    a.check_same_ring(b);
    GradedClass r(a.ring_);
    for (const auto& [ka, va] : a.t_)
        for (const auto& [kb, vb] : b.t_) {
            YPolynomial prod = va * vb;
            a.ring_->multiply_basis(ka, kb, [&](const BasisKey& k, const Rational& c) {
                r.add_term(k, prod * YPolynomial(c));
            });
        }
    return r;
}

GradedClass GradedClass::scale(const YPolynomial& f) const {
    GradedClass r(ring_);
    if (f.is_zero()) return r;
    for (const auto& [k, v] : t_) r.add_term(k, v * f);
    return r;
}

GradedClass GradedClass::truncate_above(int max_degree) const {
    GradedClass r(ring_);
    for (const auto& [k, v] : t_)
        if (ring_->degree(k) <= max_degree) r.t_[k] = v;
    return r;
}

GradedClass GradedClass::part(int deg) const {
    GradedClass r(ring_);
    for (const auto& [k, v] : t_)
        if (ring_->degree(k) == deg) r.t_[k] = v;
    return r;
}

GradedClass GradedClass::eval_y(const Rational& y0) const {
    GradedClass r(ring_);
    for (const auto& [k, v] : t_) r.add_term(k, YPolynomial(v.eval(y0)));
    return r;
}

GradedClass GradedClass::exp_nilpotent() const {
    if (min_degree() == 0)
        throw std::invalid_argument("exp_nilpotent: class has a degree-zero part");
    GradedClass acc = unit(ring_);
    GradedClass pw = unit(ring_);
    Rational fact(1);
    for (int j = 1; j <= ring_->dimension(); ++j) {
        pw = pw * *this;
        if (pw.is_zero()) break;
        fact *= Rational(j);
        acc += pw.scale(YPolynomial(Rational(1) / fact));
    }
    return acc;
}

GradedClass GradedClass::invert_unit() const {
    if (coeff(ring_->unit()) != YPolynomial(1))
        throw std::invalid_argument("invert_unit: degree-zero part must be 1");
    GradedClass n = *this - unit(ring_);
    if (n.min_degree() == 0)
        throw std::invalid_argument("invert_unit: non-unit degree-zero part");
    GradedClass acc = unit(ring_);
    GradedClass pw = unit(ring_);
    for (int j = 1; j <= ring_->dimension(); ++j) {
        pw = pw * n;
        if (pw.is_zero()) break;
        acc += (j % 2 == 0) ? pw : -pw;
    }
    return acc;
}

YPolynomial GradedClass::integrate() const {
    if (!ring_->has_integral())
        throw std::invalid_argument("integrate: ring has no top-degree pairing");
    YPolynomial r;
    for (const auto& [k, v] : t_) {
        Rational w = ring_->integral_weight(k);
        if (!w.is_zero()) r += v * YPolynomial(w);
    }
    return r;
}

bool operator==(const GradedClass& a, const GradedClass& b) {
    return a.ring_->same_ring(*b.ring_) && a.t_ == b.t_;
}

std::vector<BasisKey> GradedClass::sorted_keys() const {
    std::vector<BasisKey> keys;
    keys.reserve(t_.size());
    for (const auto& [k, v] : t_) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [&](const BasisKey& a, const BasisKey& b) {
        int da = ring_->degree(a), db = ring_->degree(b);
        if (da != db) return da < db;
        return ring_->key_less_same_degree(a, b);
    });
    return keys;
}

std::string GradedClass::str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const BasisKey& k : sorted_keys()) {
        const YPolynomial& c = t_.at(k);
        std::string cs;
        bool neg = false;
        if (c.is_constant()) {
            Rational v = c.constant_value();
            neg = v < Rational(0);
            Rational a = neg ? -v : v;
            cs = a.str();
        } else {
            cs = "(" + c.str() + ")";
        }
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string lbl = ring_->label_text(k);
        if (lbl == "1") {
            out += cs;
        } else {
            out += cs + "·" + lbl;
        }
    }
    return out;
}

}  // namespace vexil
