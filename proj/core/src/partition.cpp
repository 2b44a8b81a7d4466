#include "vexil/partition.hpp"

#include <stdexcept>

namespace vexil {

Partition normalize_partition(std::vector<int> parts) {
    for (size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1])
            throw std::invalid_argument("partition: parts must be weakly decreasing");
    if (!parts.empty() && parts.back() < 0)
        throw std::invalid_argument("partition: parts must be nonnegative");
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return parts;
}

int partition_weight(const Partition& p) {
    int w = 0;
    for (int x : p) w += x;
    return w;
}

bool partition_contains(const Partition& outer, const Partition& inner) {
    if (inner.size() > outer.size()) return false;
    for (size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

bool fits_in_rectangle(const Partition& p, int rows, int cols) {
    if (static_cast<int>(p.size()) > rows) return false;
    return p.empty() || p[0] <= cols;
}

static void enumerate_rec(int rows, int cols, int maxpart, Partition& cur,
                          std::vector<Partition>& out) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int part = 1; part <= maxpart; ++part) {
        cur.push_back(part);
        enumerate_rec(rows, cols, part, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_in_rectangle(int rows, int cols) {
    std::vector<Partition> out;
    Partition cur;
    enumerate_rec(rows, cols, cols, cur, out);
    return out;
}

long count_subpartitions(const Partition& mu) {
    long n = 0;
    for (const Partition& p :
         partitions_in_rectangle(static_cast<int>(mu.size()), mu.empty() ? 0 : mu[0]))
        if (partition_contains(mu, p)) ++n;
    return n;
}

Partition complement_in_rectangle(const Partition& mu, int rows, int cols) {
    if (!fits_in_rectangle(mu, rows, cols))
        throw std::invalid_argument("complement_in_rectangle: partition out of rectangle");
    Partition padded(mu);
    padded.resize(rows, 0);
    Partition c(rows);
    for (int i = 0; i < rows; ++i) c[i] = cols - padded[rows - 1 - i];
    return normalize_partition(std::move(c));
}

std::string partition_str(const Partition& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + "]";
}

}  // namespace vexil
