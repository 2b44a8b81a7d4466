#pragma once

#include <functional>

#include "vexil/character.hpp"
#include "vexil/ring.hpp"

namespace vexil {

/// The bundle data a degeneracy-locus computation runs against: an ambient
/// ring, the T_y class of the ambient space, and the virtual characters
/// F_q - E_p. Characters must be consistent under flag refinement: two
/// characters with the same p differ only in their F part.
class DegeneracyGeometry {
public:
    virtual ~DegeneracyGeometry() = default;
    virtual RingPtr ring() const = 0;
    virtual GradedClass ty_ambient() const = 0;
    virtual BundleCharacter character(int p_val, int q_val) const = 0;
    int dimension() const { return ring()->dimension(); }
};

/// Geometry over the theta ring of a Jacobian: T_y(X) = 1, and every
/// character F_q - E_p has rank q - p with p_1 = theta and higher power sums
/// zero, so all Chern classes are theta^j / j!.
class ThetaGeometry final : public DegeneracyGeometry {
public:
    explicit ThetaGeometry(int g);
    RingPtr ring() const override { return ring_; }
    GradedClass ty_ambient() const override { return GradedClass::unit(ring_); }
    BundleCharacter character(int p_val, int q_val) const override;

private:
    RingPtr ring_;
};

/// Geometry for Schubert loci in Gr(k, C^n): E is the tautological
/// sub-bundle S, the F's are trivial. T_y(X) comes from the tangent
/// character dual(S) (x) Q.
class GrassmannianGeometry final : public DegeneracyGeometry {
public:
    GrassmannianGeometry(int k, int n);
    int k() const { return k_; }
    int n() const { return n_; }
    RingPtr ring() const override { return ring_; }
    GradedClass ty_ambient() const override { return ty_; }
    BundleCharacter character(int p_val, int q_val) const override;
    const BundleCharacter& taut_sub() const { return sub_; }
    const BundleCharacter& taut_quot() const { return quot_; }

private:
    int k_, n_;
    RingPtr ring_;
    BundleCharacter sub_, quot_;
    GradedClass ty_;
};

/// Fully configurable geometry for universal checks in a free ring (or any
/// ring): caller supplies T_y(X) and the character map.
class CustomGeometry final : public DegeneracyGeometry {
public:
    CustomGeometry(RingPtr ring, GradedClass ty,
                   std::function<BundleCharacter(int, int)> characters)
        : ring_(std::move(ring)), ty_(std::move(ty)), chars_(std::move(characters)) {}
    RingPtr ring() const override { return ring_; }
    GradedClass ty_ambient() const override { return ty_; }
    BundleCharacter character(int p_val, int q_val) const override { return chars_(p_val, q_val); }

private:
    RingPtr ring_;
    GradedClass ty_;
    std::function<BundleCharacter(int, int)> chars_;
};

}  // namespace vexil
