#include "vexil/schubert.hpp"

#include <stdexcept>

namespace vexil {

SchubertLocus schubert_locus(const Partition& mu, int k, int n) {
    Partition m = normalize_partition(mu);
    if (!fits_in_rectangle(m, k, n - k))
        throw std::invalid_argument("schubert_locus: partition out of the k x (n-k) rectangle");
    SchubertLocus loc;
    loc.geom = std::make_shared<GrassmannianGeometry>(k, n);
    std::vector<int> kk, pp, qq;
    for (size_t i = 0; i < m.size(); ++i) {
        kk.push_back(static_cast<int>(i) + 1);
        pp.push_back(k);
        qq.push_back(k - static_cast<int>(i) - 1 + m[i]);
    }
    loc.triple = Triple(kk, pp, qq);
    return loc;
}

GradedClass schubert_ty_class(const Partition& mu, int k, int n) {
    SchubertLocus loc = schubert_locus(mu, k, n);
    return motivic_class(loc.triple, *loc.geom);
}

GradedClass schubert_csm_class(const Partition& mu, int k, int n) {
    SchubertLocus loc = schubert_locus(mu, k, n);
    return csm_class(loc.triple, *loc.geom);
}

YPolynomial schubert_chi(const Partition& mu, int k, int n) {
    return chi_y(schubert_ty_class(mu, k, n));
}

}  // namespace vexil
