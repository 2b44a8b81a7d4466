#include "vexil/triple.hpp"

#include <algorithm>
#include <stdexcept>

namespace vexil {

Triple::Triple(std::vector<int> k_, std::vector<int> p_, std::vector<int> q_)
    : k(std::move(k_)), p(std::move(p_)), q(std::move(q_)) {
    if (k.size() != p.size() || k.size() != q.size())
        throw std::invalid_argument("Triple: k, p, q must have equal lengths");
    for (size_t i = 0; i < k.size(); ++i) {
        if (k[i] <= 0 || p[i] <= 0 || q[i] <= 0)
            throw std::invalid_argument("Triple: entries must be positive");
        if (k[i] > p[i])
            throw std::invalid_argument("Triple: k_i <= p_i violated (kernel exceeds source rank)");
        if (i > 0) {
            if (k[i] < k[i - 1]) throw std::invalid_argument("Triple: k must weakly increase");
            if (p[i] < p[i - 1]) throw std::invalid_argument("Triple: p must weakly increase");
            if (q[i] > q[i - 1]) throw std::invalid_argument("Triple: q must weakly decrease");
        }
    }
}

std::string Triple::key() const {
    std::string s;
    auto app = [&s](const std::vector<int>& v) {
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        s += "|";
    };
    app(k);
    app(p);
    app(q);
    return s;
}

Triple reduce_triple(const Triple& t) {
    // Pass 1: drop vacuous conditions.
    std::vector<size_t> kept;
    for (size_t i = 0; i < t.length(); ++i)
        if (t.lambda_value(i) > 0) kept.push_back(i);
    // Pass 2: a later condition with k_j <= k_i (i < j kept) is implied,
    // since E_{p_i} sits inside E_{p_j} and F_{q_i} surjects onto F_{q_j}.
    std::vector<size_t> pass2;
    for (size_t j : kept) {
        if (!pass2.empty() && t.k[pass2.back()] >= t.k[j]) continue;
        pass2.push_back(j);
    }
    // Pass 3: condition i is implied by a later one with lambda value >= its own.
    std::vector<size_t> pass3;
    int best = 0;
    for (auto it = pass2.rbegin(); it != pass2.rend(); ++it) {
        if (t.lambda_value(*it) > best) {
            pass3.push_back(*it);
            best = t.lambda_value(*it);
        }
    }
    Triple r;
    for (auto it = pass3.rbegin(); it != pass3.rend(); ++it) {
        r.k.push_back(t.k[*it]);
        r.p.push_back(t.p[*it]);
        r.q.push_back(t.q[*it]);
    }
    return r;
}

bool is_essential(const Triple& t) {
    for (size_t i = 0; i < t.length(); ++i) {
        if (t.lambda_value(i) <= 0) return false;
        if (i > 0 && t.k[i] <= t.k[i - 1]) return false;
        if (i > 0 && t.lambda_value(i) >= t.lambda_value(i - 1)) return false;
    }
    return true;
}

namespace {

enum class FillPolicy { lower_p_first, raise_q_first };

InflatedTriple fill_gaps(const Triple& essential, FillPolicy policy) {
    if (!is_essential(essential))
        throw std::invalid_argument("inflate_triple: input must be essential");
    InflatedTriple out;
    out.essential = essential;
    out.kp = essential.k;
    out.pp = essential.p;
    out.qp = essential.q;
    // Fill gaps k_i > k_{i-1}+1 one slot at a time, preserving the block's
    // lambda value.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < out.kp.size(); ++i) {
            int prev_k = i == 0 ? 0 : out.kp[i - 1];
            if (out.kp[i] <= prev_k + 1) continue;
            int prev_p = i == 0 ? 0 : out.pp[i - 1];
            bool p_legal = out.pp[i] > prev_p;
            bool q_legal = i == 0 || out.qp[i] + 1 <= out.qp[i - 1];
            bool lower_p = policy == FillPolicy::lower_p_first ? p_legal : !q_legal;
            int nk = out.kp[i] - 1, np, nq;
            if (lower_p) {
                np = out.pp[i] - 1;
                nq = out.qp[i];
            } else {
                np = out.pp[i];
                nq = out.qp[i] + 1;
            }
            out.kp.insert(out.kp.begin() + i, nk);
            out.pp.insert(out.pp.begin() + i, np);
            out.qp.insert(out.qp.begin() + i, nq);
            changed = true;
            break;
        }
    }
    // S is a set: a pair qualifying for several block ends enters once.
    int rows = out.rows();
    for (int a : essential.k)
        for (int i = 1; i <= a; ++i)
            for (int j = a + 1; j <= rows; ++j) out.pair_set.emplace_back(i, j);
    std::sort(out.pair_set.begin(), out.pair_set.end());
    out.pair_set.erase(std::unique(out.pair_set.begin(), out.pair_set.end()), out.pair_set.end());
    return out;
}

}  // namespace

InflatedTriple inflate_triple(const Triple& essential) {
    return fill_gaps(essential, FillPolicy::lower_p_first);
}

InflatedTriple gapless_presentation(const Triple& essential) {
    return fill_gaps(essential, FillPolicy::raise_q_first);
}

Partition lambda_of(const Triple& t) {
    Triple r = reduce_triple(t);
    Partition lam;
    int prev_k = 0;
    for (size_t a = 0; a < r.length(); ++a) {
        for (int i = prev_k; i < r.k[a]; ++i) lam.push_back(r.lambda_value(a));
        prev_k = r.k[a];
    }
    return lam;
}

std::vector<int> block_of_rows(const Triple& reduced) {
    std::vector<int> blocks;
    int prev_k = 0;
    for (size_t a = 0; a < reduced.length(); ++a) {
        for (int i = prev_k; i < reduced.k[a]; ++i) blocks.push_back(static_cast<int>(a));
        prev_k = reduced.k[a];
    }
    return blocks;
}

}  // namespace vexil
