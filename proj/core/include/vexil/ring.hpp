#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "vexil/ypoly.hpp"

namespace vexil {

/// Basis element label. The meaning is ring-specific: theta exponent,
/// partition, or generator exponent vector.
using BasisKey = std::vector<int>;

/// A graded commutative ring truncated above its dimension D. All classes
/// here sit in even cohomological degree, so multiplication is plainly
/// commutative. Implementations are immutable after construction.
class AmbientRing {
public:
    virtual ~AmbientRing() = default;

    virtual int dimension() const = 0;
    virtual int degree(const BasisKey& k) const = 0;
    virtual BasisKey unit() const = 0;

    /// Expands the product of two basis elements, emitting (key, coeff) pairs.
    /// Keys of degree above the dimension are never emitted.
    virtual void multiply_basis(const BasisKey& a, const BasisKey& b,
                                const std::function<void(const BasisKey&, const Rational&)>& emit) const = 0;

    virtual bool has_integral() const { return false; }
    /// Pairing weight of a basis element under the top-degree integral.
    virtual Rational integral_weight(const BasisKey&) const { return Rational(0); }

    virtual std::string label_text(const BasisKey& k) const = 0;
    virtual std::string label_json(const BasisKey& k) const = 0;

    /// Canonical order of basis keys of equal degree, used for serialization.
    virtual bool key_less_same_degree(const BasisKey& a, const BasisKey& b) const { return a < b; }

    virtual bool same_ring(const AmbientRing& other) const = 0;
};

using RingPtr = std::shared_ptr<const AmbientRing>;

/// Element of an ambient ring tensored with Q[y]: a finite sum of basis
/// elements with YPolynomial coefficients. Zero coefficients are not stored.
class GradedClass {
public:
    explicit GradedClass(RingPtr ring) : ring_(std::move(ring)) {}
    static GradedClass unit(RingPtr ring) {
        BasisKey k = ring->unit();
        return basis(std::move(ring), k);
    }
    static GradedClass basis(RingPtr ring, const BasisKey& key,
                             const YPolynomial& coeff = YPolynomial(1));

    const RingPtr& ring() const { return ring_; }

    bool is_zero() const { return t_.empty(); }
    YPolynomial coeff(const BasisKey& key) const {
        auto it = t_.find(key);
        return it == t_.end() ? YPolynomial() : it->second;
    }
    const std::map<BasisKey, YPolynomial>& terms() const { return t_; }
    /// Minimum degree of a stored term; dimension()+1 when zero.
    int min_degree() const;

    void add_term(const BasisKey& key, const YPolynomial& coeff);

    GradedClass operator-() const;
    GradedClass& operator+=(const GradedClass& o);
    GradedClass& operator-=(const GradedClass& o);
    friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
    friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
    friend GradedClass operator*(const GradedClass& a, const GradedClass& b);

    GradedClass scale(const YPolynomial& f) const;
    GradedClass truncate_above(int max_degree) const;
    GradedClass part(int deg) const;
    GradedClass eval_y(const Rational& y0) const;

    /// exp of a class with no degree-zero part.
    GradedClass exp_nilpotent() const;
    /// Inverse of a class of the form 1 + (positive-degree part).
    GradedClass invert_unit() const;

    YPolynomial integrate() const;

    friend bool operator==(const GradedClass& a, const GradedClass& b);
    friend bool operator!=(const GradedClass& a, const GradedClass& b) { return !(a == b); }

    /// Keys sorted by (degree ascending, ring canonical order).
    std::vector<BasisKey> sorted_keys() const;
    std::string str() const;

private:
    void check_same_ring(const GradedClass& o) const;
    RingPtr ring_;
    std::map<BasisKey, YPolynomial> t_;
};

}  // namespace vexil
