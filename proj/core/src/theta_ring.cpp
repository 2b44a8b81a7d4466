#include "vexil/theta_ring.hpp"

#include <stdexcept>

namespace vexil {

ThetaRing::ThetaRing(int g) : g_(g) {
    if (g < 0) throw std::invalid_argument("theta_ring: genus must be >= 0");
}

void ThetaRing::multiply_basis(const BasisKey& a, const BasisKey& b,
                               const std::function<void(const BasisKey&, const Rational&)>& emit) const {
    int d = a[0] + b[0];
    if (d <= g_) emit({d}, Rational(1));
}

Rational ThetaRing::integral_weight(const BasisKey& k) const {
    return k[0] == g_ ? Rational::factorial(g_) : Rational(0);
}

std::string ThetaRing::label_text(const BasisKey& k) const {
    if (k[0] == 0) return "1";
    if (k[0] == 1) return "theta";
    return "theta^" + std::to_string(k[0]);
}

bool ThetaRing::same_ring(const AmbientRing& other) const {
    auto* o = dynamic_cast<const ThetaRing*>(&other);
    return o && o->g_ == g_;
}

RingPtr theta_ring(int g) { return std::make_shared<ThetaRing>(g); }

GradedClass theta_class(const RingPtr& ring) {
    return GradedClass::basis(ring, {1});
}

}  // namespace vexil
