#pragma once

#include <functional>
#include <vector>

namespace hyperrig {

// Independence oracle over element indices 0..m-1.
using IndependenceOracle = std::function<bool(const std::vector<int>&)>;

// Matroid partitioning by shortest augmenting paths: greedily inserts elements
// 0..m-1 into t parts, each independent in the oracle's matroid. Returns the
// part of every element, -1 for elements left out. The number of assigned
// elements is the rank of the t-fold union.
std::vector<int> matroid_partition(int m, int t, const IndependenceOracle& independent);

}  // namespace hyperrig
