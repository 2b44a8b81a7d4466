#include "vexil/geometry.hpp"

#include "vexil/schur_ring.hpp"
#include "vexil/theta_ring.hpp"

namespace vexil {

ThetaGeometry::ThetaGeometry(int g) : ring_(theta_ring(g)) {}

BundleCharacter ThetaGeometry::character(int p_val, int q_val) const {
    BundleCharacter v(ring_, q_val - p_val);
    if (v.order() >= 1) v.p[1] = theta_class(ring_);
    return v;
}

GrassmannianGeometry::GrassmannianGeometry(int k, int n)
    : k_(k),
      n_(n),
      ring_(schur_ring(k, n)),
      sub_(ring_, 0),
      quot_(ring_, 0),
      ty_(ring_) {
    // c_j(Q) = sigma_(j); S = C^n - Q.
    std::vector<GradedClass> cq;
    cq.push_back(GradedClass::unit(ring_));
    for (int j = 1; j <= ring_->dimension(); ++j)
        cq.push_back(j <= n_ - k_ ? sigma(ring_, {j}) : GradedClass(ring_));
    quot_ = character_from_chern(ring_, n_ - k_, cq);
    sub_ = trivial_character(ring_, n_) - quot_;
    ty_ = ty_of_smooth(tensor_character(sub_.dual(), quot_));
}

BundleCharacter GrassmannianGeometry::character(int p_val, int q_val) const {
    // F_q is trivial of rank q; sub-bundles of S refine with the same power
    // sums, only the rank changes.
    BundleCharacter v(ring_, q_val - p_val);
    for (int j = 1; j <= v.order(); ++j) v.p[j] = -sub_.p[j];
    return v;
}

}  // namespace vexil
