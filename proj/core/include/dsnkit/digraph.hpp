#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dsnkit/rational.hpp"

namespace dsnkit {

using Vertex = std::uint32_t;
using ArcId = std::uint32_t;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  Weight weight = 1;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Simple weighted digraph on the vertex slots 0..vertex_count()-1.
// Arcs are kept sorted by (tail, head); an ArcId is the position in that
// order. Immutable once built.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  // Throws InputError on loops, parallel arcs, non-positive weights or
  // endpoints out of range.
  WeightedDigraph(std::size_t vertex_count, std::vector<Arc> arcs);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(ArcId id) const { return arcs_[id]; }
  bool contains(Vertex v) const { return v < vertex_count_; }

  // Out-arcs sorted by head, in-arcs sorted by tail.
  std::span<const ArcId> out_arcs(Vertex v) const;
  std::span<const ArcId> in_arcs(Vertex v) const;
  std::optional<ArcId> find_arc(Vertex tail, Vertex head) const;
  bool has_arc(Vertex tail, Vertex head) const { return find_arc(tail, head).has_value(); }

  std::size_t out_degree(Vertex v) const { return out_arcs(v).size(); }
  std::size_t in_degree(Vertex v) const { return in_arcs(v).size(); }
  // Distinct neighbours in the underlying undirected graph, ascending.
  std::vector<Vertex> neighbors(Vertex v) const;
  // A vertex with no incident arc.
  bool is_isolated(Vertex v) const { return out_degree(v) == 0 && in_degree(v) == 0; }

  Weight total_weight() const;
  // Same vertex slots, only the listed arcs.
  WeightedDigraph with_arcs(std::span<const ArcId> ids) const;
  // Every arc flipped; ids change because of the (tail, head) order.
  WeightedDigraph reversed() const;
  // Keeps the vertex slots of `keep` and renumbers them 0..k-1 in order.
  WeightedDigraph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const WeightedDigraph& a, const WeightedDigraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.arcs_ == b.arcs_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_offset_;
  std::vector<ArcId> out_order_;
  std::vector<ArcId> in_order_;
  std::vector<std::size_t> in_offset_;
};

// A simple directed path given by its vertex sequence. A single vertex is a
// path of length zero.
class DirectedPath {
 public:
  DirectedPath() = default;
  explicit DirectedPath(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  bool empty() const { return vertices_.empty(); }
  Vertex source() const { return vertices_.front(); }
  Vertex target() const { return vertices_.back(); }
  // Number of arcs.
  std::size_t length() const { return vertices_.empty() ? 0 : vertices_.size() - 1; }
  std::size_t size() const { return vertices_.size(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }

  bool contains(Vertex v) const;
  std::optional<std::size_t> index_of(Vertex v) const;
  // The subpath u[P]v; throws PreconditionError unless u precedes v on P.
  DirectedPath subpath(Vertex u, Vertex v) const;
  // Concatenation at a shared endpoint; throws PreconditionError otherwise.
  DirectedPath concat(const DirectedPath& tail) const;
  // True when consecutive vertices are arcs of g and no vertex repeats.
  bool is_valid_in(const WeightedDigraph& g) const;
  Weight weight_in(const WeightedDigraph& g) const;
  std::vector<ArcId> arc_ids_in(const WeightedDigraph& g) const;

  friend bool operator==(const DirectedPath&, const DirectedPath&) = default;

 private:
  std::vector<Vertex> vertices_;
};

}  // namespace dsnkit
