#include "dsnkit/undirected.hpp"

#include <algorithm>
#include <string>

#include "dsnkit/errors.hpp"

namespace dsnkit {

UndirectedGraph::UndirectedGraph(std::size_t vertex_count,
                                 const std::vector<std::pair<Vertex, Vertex>>& edges)
    : adj_(vertex_count) {
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} has an endpoint outside the vertex set");
    }
    if (u == v) continue;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

std::size_t UndirectedGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& list : adj_) twice += list.size();
  return twice / 2;
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<Vertex, Vertex>> UndirectedGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t UndirectedGraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adj_) best = std::max(best, list.size());
  return best;
}

void UndirectedGraph::add_edge(Vertex u, Vertex v) {
  if (u >= adj_.size() || v >= adj_.size()) throw InputError("edge endpoint out of range");
  if (u == v || has_edge(u, v)) return;
  adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

UndirectedGraph UndirectedGraph::induced(const std::vector<Vertex>& keep) const {
  std::vector<std::int64_t> index(adj_.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<std::int64_t>(i);
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (auto [u, v] : edges()) {
    if (index[u] >= 0 && index[v] >= 0) {
      kept.emplace_back(static_cast<Vertex>(index[u]), static_cast<Vertex>(index[v]));
    }
  }
  return UndirectedGraph(keep.size(), kept);
}

UndirectedGraph underlying_undirected(const WeightedDigraph& g) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(g.arc_count());
  for (const Arc& a : g.arcs()) edges.emplace_back(a.tail, a.head);
  return UndirectedGraph(g.vertex_count(), edges);
}

std::vector<Vertex> live_vertices(const WeightedDigraph& g, const std::vector<Vertex>& extra) {
  std::vector<char> live(g.vertex_count(), 0);
  for (const Arc& a : g.arcs()) live[a.tail] = live[a.head] = 1;
  for (Vertex v : extra) {
    if (v < live.size()) live[v] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < live.size(); ++v) {
    if (live[v]) out.push_back(v);
  }
  return out;
}

UndirectedGraph live_underlying(const WeightedDigraph& g, const std::vector<Vertex>& extra) {
  return underlying_undirected(g).induced(live_vertices(g, extra));
}

}  // namespace dsnkit
