#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dsnkit/digraph.hpp"

namespace dsnkit {

// Simple undirected graph on vertex slots 0..vertex_count()-1.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::size_t vertex_count) : adj_(vertex_count) {}
  // Loops are dropped and duplicate edges merged.
  UndirectedGraph(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const;
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;
  // Edges with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  std::size_t max_degree() const;

  void add_edge(Vertex u, Vertex v);
  UndirectedGraph induced(const std::vector<Vertex>& keep) const;

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
};

// Underlying undirected graph on the same vertex slots.
UndirectedGraph underlying_undirected(const WeightedDigraph& g);

// Vertices of g that carry an arc, plus the extra vertices given (terminals).
std::vector<Vertex> live_vertices(const WeightedDigraph& g, const std::vector<Vertex>& extra = {});

// Underlying undirected graph restricted to the live vertices, renumbered in
// ascending order of the original ids.
UndirectedGraph live_underlying(const WeightedDigraph& g, const std::vector<Vertex>& extra = {});

}  // namespace dsnkit
