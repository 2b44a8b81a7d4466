#pragma once

#include <string>
#include <vector>

namespace vexil {

/// Partitions are weakly decreasing nonnegative integer vectors without
/// trailing zeros. Shapes (weakly increasing sequences) live in shapes.hpp.
using Partition = std::vector<int>;

/// Strips trailing zeros; rejects input that is not weakly decreasing.
Partition normalize_partition(std::vector<int> parts);

int partition_weight(const Partition& p);
bool partition_contains(const Partition& outer, const Partition& inner);
bool fits_in_rectangle(const Partition& p, int rows, int cols);

/// All partitions inside a rows x cols rectangle.
std::vector<Partition> partitions_in_rectangle(int rows, int cols);
/// Number of partitions contained in mu.
long count_subpartitions(const Partition& mu);

/// Complement of mu inside a rows x cols rectangle.
Partition complement_in_rectangle(const Partition& mu, int rows, int cols);

std::string partition_str(const Partition& p);  // "[3,1]"

}  // namespace vexil
