#pragma once

#include "vexil/ring.hpp"

namespace vexil {

/// Free graded-commutative polynomial ring on named generators of assigned
/// positive degrees, truncated above a fixed dimension. Used for universal
/// identity checks; it has no top-degree pairing.
class FreeChernRing final : public AmbientRing {
public:
    FreeChernRing(std::vector<std::pair<std::string, int>> generators, int dim);

    int generator_count() const { return static_cast<int>(degs_.size()); }
    int generator_degree(int i) const { return degs_[i]; }
    const std::string& generator_name(int i) const { return names_[i]; }
    int generator_index(const std::string& name) const;

    int dimension() const override { return dim_; }
    int degree(const BasisKey& key) const override;
    BasisKey unit() const override { return BasisKey(degs_.size(), 0); }
    void multiply_basis(const BasisKey& a, const BasisKey& b,
                        const std::function<void(const BasisKey&, const Rational&)>& emit) const override;
    std::string label_text(const BasisKey& key) const override;
    std::string label_json(const BasisKey& key) const override { return label_text(key); }
    bool same_ring(const AmbientRing& other) const override;

private:
    std::vector<std::string> names_;
    std::vector<int> degs_;
    int dim_;
};

RingPtr free_ring(std::vector<std::pair<std::string, int>> generators, int dim);
GradedClass free_gen(const RingPtr& ring, const std::string& name);

}  // namespace vexil
