#pragma once

#include <cstddef>
#include <vector>

#include "dsnkit/undirected.hpp"

namespace dsnkit {

inline constexpr std::size_t kTreewidthExactMaxVertices = 22;

struct TreewidthResult {
  std::size_t width = 0;
  // Elimination order whose width equals `width`.
  std::vector<Vertex> order;
  bool exact = false;
};

// Exact treewidth by dynamic programming over vertex subsets. Throws
// CapacityError above kTreewidthExactMaxVertices vertices.
TreewidthResult treewidth_exact(const UndirectedGraph& g);

// Greedy min-fill elimination; ties go to the lowest id.
TreewidthResult treewidth_upper_bound(const UndirectedGraph& g);

// Exact when small enough, otherwise the min-fill bound with exact = false.
TreewidthResult treewidth(const UndirectedGraph& g);

// Width of an elimination order: the largest neighbourhood met while
// eliminating. Throws InputError unless `order` is a permutation.
std::size_t elimination_width(const UndirectedGraph& g, const std::vector<Vertex>& order);

}  // namespace dsnkit
