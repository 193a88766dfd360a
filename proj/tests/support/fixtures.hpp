#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "dsnkit/instance.hpp"
#include "dsnkit/undirected.hpp"

namespace fixtures {

using dsnkit::Vertex;

inline dsnkit::WeightedDigraph digraph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> arcs) {
  std::vector<dsnkit::Arc> list;
  for (auto [u, v] : arcs) list.push_back({u, v, 1});
  return dsnkit::WeightedDigraph(n, list);
}

inline dsnkit::WeightedDigraph weighted(std::size_t n, std::initializer_list<dsnkit::Arc> arcs) {
  return dsnkit::WeightedDigraph(n, std::vector<dsnkit::Arc>(arcs));
}

inline dsnkit::UndirectedGraph undirected(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return dsnkit::UndirectedGraph(n, std::vector<std::pair<Vertex, Vertex>>(edges));
}

inline dsnkit::UndirectedGraph clique(std::size_t k) {
  dsnkit::UndirectedGraph g(k);
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

inline dsnkit::UndirectedGraph grid(std::size_t w, std::size_t h) {
  dsnkit::UndirectedGraph g(w * h);
  for (std::size_t y = 0; y < h; ++y)
    for (std::size_t x = 0; x < w; ++x) {
      auto id = static_cast<Vertex>(y * w + x);
      if (x + 1 < w) g.add_edge(id, id + 1);
      if (y + 1 < h) g.add_edge(id, static_cast<Vertex>(id + w));
    }
  return g;
}

inline dsnkit::UndirectedGraph path_graph(std::size_t n) {
  dsnkit::UndirectedGraph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

}  // namespace fixtures
