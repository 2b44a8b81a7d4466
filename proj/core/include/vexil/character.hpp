#pragma once

#include "vexil/ring.hpp"

namespace vexil {

/// A virtual bundle encoded by its (possibly negative) rank and the power
/// sums of its Chern roots: p[j] homogeneous of degree j, stored for
/// j = 1 .. ring dimension. Formal differences subtract componentwise.
struct BundleCharacter {
    int rank = 0;
    std::vector<GradedClass> p;  // p[0] unused; p[j] for j >= 1

    explicit BundleCharacter(RingPtr ring, int rank_ = 0);

    const RingPtr& ring() const { return p[1].ring(); }
    int order() const { return static_cast<int>(p.size()) - 1; }

    BundleCharacter operator+(const BundleCharacter& o) const;
    BundleCharacter operator-(const BundleCharacter& o) const;
    /// Dual bundle: p_j -> (-1)^j p_j.
    BundleCharacter dual() const;
};

/// Character of a trivial bundle of the given rank.
BundleCharacter trivial_character(RingPtr ring, int rank);
/// Character of a line bundle with first Chern class x: p_j = x^j.
BundleCharacter line_character(const GradedClass& x);
/// Character built from total Chern class data c_0=1, c_1, c_2, ...
BundleCharacter character_from_chern(RingPtr ring, int rank, const std::vector<GradedClass>& c);

/// p_n(a (x) b) = sum_m C(n,m) p_m(a) p_{n-m}(b), with p_0 = rank.
BundleCharacter tensor_character(const BundleCharacter& a, const BundleCharacter& b);

/// Newton identities: p_n = c_1 p_{n-1} - c_2 p_{n-2} + ... + (-1)^{n-1} n c_n.
/// Input c has c[0] = 1; returns p[0..order] with p[0] = rank (as a scalar the
/// caller supplies; identities themselves do not involve the rank).
std::vector<GradedClass> powersums_from_chern(const std::vector<GradedClass>& c, int rank, int order);
/// Inverse conversion; returns c[0..order] with c[0] = 1.
std::vector<GradedClass> chern_from_powersums(const std::vector<GradedClass>& p, int order);

/// Degree-j Chern class of the virtual bundle. c_0 = 1; j < 0 gives 0.
GradedClass chern_class(const BundleCharacter& v, int j);
/// All of c_0 .. c_order at once.
std::vector<GradedClass> chern_table(const BundleCharacter& v, int order);

/// T_y of a smooth space with the given tangent character:
/// exp(sum_m g_m(y) p_m). At y = -1 this is the total Chern class.
GradedClass ty_of_smooth(const BundleCharacter& tangent);

}  // namespace vexil
