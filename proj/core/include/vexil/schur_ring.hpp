#pragma once

#include "vexil/partition.hpp"
#include "vexil/ring.hpp"

namespace vexil {

/// Cohomology of the Grassmannian Gr(k, C^n) in the Schubert basis: keys are
/// partitions inside the k x (n-k) rectangle, products expand with
/// Littlewood-Richardson coefficients truncated to the rectangle, and the
/// integral picks the coefficient of the full rectangle.
class SchurRing final : public AmbientRing {
public:
    SchurRing(int k, int n);
    int k() const { return k_; }
    int n() const { return n_; }

    int dimension() const override { return k_ * (n_ - k_); }
    int degree(const BasisKey& key) const override { return partition_weight(key); }
    BasisKey unit() const override { return {}; }
    void multiply_basis(const BasisKey& a, const BasisKey& b,
                        const std::function<void(const BasisKey&, const Rational&)>& emit) const override;
    bool has_integral() const override { return true; }
    Rational integral_weight(const BasisKey& key) const override;
    std::string label_text(const BasisKey& key) const override;
    std::string label_json(const BasisKey& key) const override { return "schur:" + partition_str(key); }
    /// Within a degree, lexicographically largest partition first.
    bool key_less_same_degree(const BasisKey& a, const BasisKey& b) const override { return a > b; }
    bool same_ring(const AmbientRing& other) const override;

private:
    int k_, n_;
};

RingPtr schur_ring(int k, int n);

/// Schubert basis class sigma_mu.
GradedClass sigma(const RingPtr& ring, const Partition& mu);

/// Littlewood-Richardson product of two classes in the same SchurRing.
GradedClass lr_multiply(const GradedClass& a, const GradedClass& b);

/// Structure constants of s_lam * s_mu in the full symmetric-function ring,
/// with rows capped at max_rows (coefficients are unchanged, partitions with
/// more rows are dropped). Computed by Jacobi-Trudi expansion over Pieri steps.
std::map<Partition, long> lr_expand(const Partition& lam, const Partition& mu, int max_rows);

/// Pieri step s_mu * h_j: all partitions obtained by adding a horizontal
/// strip of size j, capped at max_rows rows.
std::vector<Partition> pieri_row(const Partition& mu, int j, int max_rows);
/// Dual Pieri step s_mu * e_j (vertical strips).
std::vector<Partition> pieri_column(const Partition& mu, int j, int max_rows);

}  // namespace vexil
