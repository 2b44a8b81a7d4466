#include "vexil/schur_ring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vexil {

SchurRing::SchurRing(int k, int n) : k_(k), n_(n) {
    if (k <= 0 || k >= n) throw std::invalid_argument("schur_ring: need 0 < k < n");
}

std::vector<Partition> pieri_row(const Partition& mu, int j, int max_rows) {
    std::vector<Partition> out;
    if (j < 0 || static_cast<int>(mu.size()) > max_rows) return out;
    if (j == 0) {
        out.push_back(mu);
        return out;
    }
    int rows = std::min(static_cast<int>(mu.size()) + 1, max_rows);
    std::vector<int> nu(rows);
    // nu_1 >= mu_1 >= nu_2 >= mu_2 >= ... with |nu| - |mu| = j.
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == rows) {
            if (left == 0) out.push_back(normalize_partition(nu));
            return;
        }
        int lo = i < static_cast<int>(mu.size()) ? mu[i] : 0;
        int hi = i == 0 ? lo + left : std::min(mu[i - 1], lo + left);
        for (int v = lo; v <= hi; ++v) {
            nu[i] = v;
            rec(i + 1, left - (v - lo));
        }
    };
    rec(0, j);
    return out;
}

std::vector<Partition> pieri_column(const Partition& mu, int j, int max_rows) {
    std::vector<Partition> out;
    if (j < 0) return out;
    int rows = std::min(static_cast<int>(mu.size()) + j, max_rows);
    std::vector<int> nu(rows);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == rows) {
            if (left == 0) {
                Partition p = normalize_partition(nu);
                out.push_back(std::move(p));
            }
            return;
        }
        int base = i < static_cast<int>(mu.size()) ? mu[i] : 0;
        for (int add = 0; add <= std::min(1, left); ++add) {
            int v = base + add;
            if (i > 0 && v > nu[i - 1]) continue;
            nu[i] = v;
            rec(i + 1, left - add);
        }
    };
    rec(0, j);
    return out;
}

std::map<Partition, long> lr_expand(const Partition& lam, const Partition& mu, int max_rows) {
    std::map<Partition, long> acc;
    if (mu.empty()) {
        if (static_cast<int>(lam.size()) <= max_rows) acc[lam] = 1;
        return acc;
    }
    int t = static_cast<int>(mu.size());
    std::vector<int> perm(t);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        int inversions = 0;
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j)
                if (perm[i] > perm[j]) ++inversions;
        long sign = inversions % 2 == 0 ? 1 : -1;

        std::map<Partition, long> cur;
        cur[lam] = sign;
        bool dead = false;
        for (int i = 0; i < t && !dead; ++i) {
            int m = mu[i] - (i + 1) + perm[i];
            if (m < 0) {
                dead = true;
                break;
            }
            if (m == 0) continue;
            std::map<Partition, long> next;
            for (const auto& [p, c] : cur)
                for (const Partition& q : pieri_row(p, m, max_rows)) next[q] += c;
            cur = std::move(next);
        }
        if (!dead)
            for (const auto& [p, c] : cur) {
                acc[p] += c;
                if (acc[p] == 0) acc.erase(p);
            }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

void SchurRing::multiply_basis(const BasisKey& a, const BasisKey& b,
                               const std::function<void(const BasisKey&, const Rational&)>& emit) const {
    for (const auto& [nu, c] : lr_expand(a, b, k_))
        if (fits_in_rectangle(nu, k_, n_ - k_)) emit(nu, Rational(c));
}

Rational SchurRing::integral_weight(const BasisKey& key) const {
    Partition full(k_, n_ - k_);
    return key == full ? Rational(1) : Rational(0);
}

std::string SchurRing::label_text(const BasisKey& key) const {
    if (key.empty()) return "1";
    return partition_str(key);
}

bool SchurRing::same_ring(const AmbientRing& other) const {
    auto* o = dynamic_cast<const SchurRing*>(&other);
    return o && o->k_ == k_ && o->n_ == n_;
}

RingPtr schur_ring(int k, int n) { return std::make_shared<SchurRing>(k, n); }

GradedClass sigma(const RingPtr& ring, const Partition& mu) {
    auto* r = dynamic_cast<const SchurRing*>(ring.get());
    if (!r) throw std::invalid_argument("sigma: not a SchurRing");
    Partition p = normalize_partition(mu);
    if (!fits_in_rectangle(p, r->k(), r->n() - r->k()))
        throw std::invalid_argument("sigma: partition out of rectangle");
    return GradedClass::basis(ring, p);
}

GradedClass lr_multiply(const GradedClass& a, const GradedClass& b) {
    if (!dynamic_cast<const SchurRing*>(a.ring().get()))
        throw std::invalid_argument("lr_multiply: not a SchurRing");
    return a * b;
}

}  // namespace vexil
