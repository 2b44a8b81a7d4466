#pragma once

#include "vexil/ring.hpp"

namespace vexil {

/// Q[theta]/(theta^{g+1}) with top pairing integrate(theta^g) = g!.
/// Models the cohomology of the degree-d Picard variety of a genus-g curve.
class ThetaRing final : public AmbientRing {
public:
    explicit ThetaRing(int g);
    int genus() const { return g_; }

    int dimension() const override { return g_; }
    int degree(const BasisKey& k) const override { return k[0]; }
    BasisKey unit() const override { return {0}; }
    void multiply_basis(const BasisKey& a, const BasisKey& b,
                        const std::function<void(const BasisKey&, const Rational&)>& emit) const override;
    bool has_integral() const override { return true; }
    Rational integral_weight(const BasisKey& k) const override;
    std::string label_text(const BasisKey& k) const override;
    std::string label_json(const BasisKey& k) const override { return label_text(k); }
    bool same_ring(const AmbientRing& other) const override;

private:
    int g_;
};

RingPtr theta_ring(int g);
/// The theta class as a GradedClass.
GradedClass theta_class(const RingPtr& ring);

}  // namespace vexil
