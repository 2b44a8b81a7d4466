#include "vexil/free_ring.hpp"

#include <stdexcept>

namespace vexil {

FreeChernRing::FreeChernRing(std::vector<std::pair<std::string, int>> generators, int dim)
    : dim_(dim) {
    if (dim < 0) throw std::invalid_argument("free_ring: negative dimension");
    for (auto& [name, deg] : generators) {
        if (deg <= 0) throw std::invalid_argument("free_ring: generator degree must be positive");
        if (generator_index(name) >= 0)
            throw std::invalid_argument("free_ring: duplicate generator '" + name + "'");
        names_.push_back(name);
        degs_.push_back(deg);
    }
}

int FreeChernRing::generator_index(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

int FreeChernRing::degree(const BasisKey& key) const {
    int d = 0;
    for (size_t i = 0; i < key.size(); ++i) d += key[i] * degs_[i];
    return d;
}

void FreeChernRing::multiply_basis(const BasisKey& a, const BasisKey& b,
                                   const std::function<void(const BasisKey&, const Rational&)>& emit) const {
    BasisKey k(a.size());
    for (size_t i = 0; i < a.size(); ++i) k[i] = a[i] + b[i];
    if (degree(k) <= dim_) emit(k, Rational(1));
}

std::string FreeChernRing::label_text(const BasisKey& key) const {
    std::string s;
    for (size_t i = 0; i < key.size(); ++i) {
        if (key[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names_[i];
        if (key[i] > 1) s += "^" + std::to_string(key[i]);
    }
    return s.empty() ? "1" : s;
}

bool FreeChernRing::same_ring(const AmbientRing& other) const {
    auto* o = dynamic_cast<const FreeChernRing*>(&other);
    return o && o->names_ == names_ && o->degs_ == degs_ && o->dim_ == dim_;
}

RingPtr free_ring(std::vector<std::pair<std::string, int>> generators, int dim) {
    return std::make_shared<FreeChernRing>(std::move(generators), dim);
}

GradedClass free_gen(const RingPtr& ring, const std::string& name) {
    auto* r = dynamic_cast<const FreeChernRing*>(ring.get());
    if (!r) throw std::invalid_argument("free_gen: not a FreeChernRing");
    int i = r->generator_index(name);
    if (i < 0) throw std::invalid_argument("free_gen: unknown generator '" + name + "'");
    BasisKey key(r->generator_count(), 0);
    key[i] = 1;
    return GradedClass::basis(ring, key);
}

}  // namespace vexil
