#pragma once

#include <string>
#include <vector>

#include "vexil/partition.hpp"

namespace vexil {

/// The (k, p, q) data of a vexillary degeneracy locus: conditions
/// dim ker(E_{p_i} -> F_{q_i}) >= k_i. k and p weakly increase, q weakly
/// decreases, all entries positive, and k_i <= p_i.
struct Triple {
    std::vector<int> k, p, q;

    Triple() = default;
    Triple(std::vector<int> k_, std::vector<int> p_, std::vector<int> q_);

    size_t length() const { return k.size(); }
    bool empty() const { return k.empty(); }
    /// Kernel-condition value q_i - p_i + k_i of condition i.
    int lambda_value(size_t i) const { return q[i] - p[i] + k[i]; }

    std::string key() const;

    friend bool operator==(const Triple& a, const Triple& b) {
        return a.k == b.k && a.p == b.p && a.q == b.q;
    }
};

/// Shortest essential triple defining the same locus. Drops vacuous
/// conditions (lambda value <= 0), conditions implied by an earlier one with
/// k_i >= k_j, and conditions implied by a later one with lambda value at
/// least as large. The result has k strictly increasing and lambda values
/// strictly decreasing positive; it is empty when every condition is vacuous.
Triple reduce_triple(const Triple& t);

bool is_essential(const Triple& t);

/// Essential triple refined so that k' = (1, 2, ..., k_t). Inserted
/// conditions copy the lambda value of their block. The pair set S collects
/// (i, j) with i <= k_a < j for some block end k_a (1-based rows).
struct InflatedTriple {
    Triple essential;
    std::vector<int> kp, pp, qp;
    std::vector<std::pair<int, int>> pair_set;

    int rows() const { return static_cast<int>(kp.size()); }
};

InflatedTriple inflate_triple(const Triple& essential);

/// Gapless presentation used by the class engine: gaps are filled with the
/// implied condition (k_i - 1, p_i, q_i + 1) on the quotient side whenever
/// the q sequence stays weakly decreasing, and with (k_i - 1, p_i - 1, q_i)
/// otherwise. Quotient flags exist in every rank for the geometries served
/// here, so this presentation avoids synthetic sub-bundles wherever possible.
InflatedTriple gapless_presentation(const Triple& essential);

/// The partition of the (reduced) triple: the lambda value of block a,
/// repeated for rows k_{a-1} < i <= k_a. Its weight is the expected
/// codimension of the locus.
Partition lambda_of(const Triple& t);

/// Block index (0-based) of each row 1..k_t of a reduced triple.
std::vector<int> block_of_rows(const Triple& reduced);

}  // namespace vexil
