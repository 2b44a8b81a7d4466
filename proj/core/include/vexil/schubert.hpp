#pragma once

#include <memory>

#include "vexil/geometry.hpp"
#include "vexil/motivic.hpp"
#include "vexil/triple.hpp"

namespace vexil {

/// A Schubert variety in Gr(k, C^n) presented as a degeneracy locus of maps
/// from the tautological sub-bundle to trivial quotients: for mu with parts
/// mu_1 >= ... >= mu_t > 0 the triple is k_i = i, p_i = k,
/// q_i = k - i + mu_i.
struct SchubertLocus {
    Triple triple;  // empty for mu = ()
    std::shared_ptr<GrassmannianGeometry> geom;
};

SchubertLocus schubert_locus(const Partition& mu, int k, int n);

/// iota_* T_y of the Schubert variety in the Schubert basis.
GradedClass schubert_ty_class(const Partition& mu, int k, int n);
/// CSM class (y = -1).
GradedClass schubert_csm_class(const Partition& mu, int k, int n);
/// chi_y genus of the Schubert variety.
YPolynomial schubert_chi(const Partition& mu, int k, int n);

}  // namespace vexil
