#include "dsnkit/algorithms.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "dsnkit/errors.hpp"

namespace dsnkit {
namespace {

void check_vertex(const WeightedDigraph& g, Vertex v) {
  if (!g.contains(v)) throw InputError("unknown vertex " + std::to_string(v));
}

std::vector<char> mask_of(std::size_t n, std::span<const Vertex> vs) {
  std::vector<char> mask(n, 0);
  for (Vertex v : vs) {
    if (v < n) mask[v] = 1;
  }
  return mask;
}

}  // namespace

std::vector<char> reachable_avoiding(const WeightedDigraph& g, std::span<const Vertex> sources,
                                     const std::vector<char>& blocked, bool backward) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    check_vertex(g, s);
    if (!seen[s]) {
      seen[s] = 1;
      queue.push_back(s);
    }
  }
  std::vector<char> is_source = mask_of(g.vertex_count(), sources);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (!is_source[u] && !blocked.empty() && blocked[u]) continue;
    auto ids = backward ? g.in_arcs(u) : g.out_arcs(u);
    for (ArcId id : ids) {
      Vertex v = backward ? g.arc(id).tail : g.arc(id).head;
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  }
  return seen;
}

bool reaches(const WeightedDigraph& g, Vertex s, Vertex t, std::span<const Vertex> forbidden) {
  check_vertex(g, s);
  check_vertex(g, t);
  if (s == t) return true;
  Vertex src[] = {s};
  return reachable_avoiding(g, src, mask_of(g.vertex_count(), forbidden))[t] != 0;
}

std::optional<DirectedPath> find_path_avoiding(const WeightedDigraph& g, Vertex s, Vertex t,
                                               const std::vector<char>& blocked) {
  check_vertex(g, s);
  check_vertex(g, t);
  if (s == t) return DirectedPath({s});
  constexpr Vertex kNone = static_cast<Vertex>(-1);
  std::vector<Vertex> parent(g.vertex_count(), kNone);
  std::deque<Vertex> queue{s};
  parent[s] = s;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (ArcId id : g.out_arcs(u)) {
      Vertex v = g.arc(id).head;
      if (parent[v] != kNone) continue;
      parent[v] = u;
      if (v == t) {
        std::vector<Vertex> seq{t};
        while (seq.back() != s) seq.push_back(parent[seq.back()]);
        std::reverse(seq.begin(), seq.end());
        return DirectedPath(std::move(seq));
      }
      if (blocked.empty() || !blocked[v]) queue.push_back(v);
    }
  }
  return std::nullopt;
}

std::optional<DirectedPath> shortest_path(const WeightedDigraph& g, Vertex s, Vertex t,
                                          std::span<const Vertex> forbidden) {
  check_vertex(g, s);
  check_vertex(g, t);
  if (s == t) return DirectedPath({s});
  std::vector<char> banned = mask_of(g.vertex_count(), forbidden);
  banned[s] = 0;
  banned[t] = 0;
  // Distances to t over the reverse graph, then a greedy walk from s that
  // always takes the smallest head staying on a shortest route.
  std::vector<std::optional<Weight>> dist(g.vertex_count());
  using Item = std::pair<Weight, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[t] = Weight(0);
  heap.emplace(Weight(0), t);
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (*dist[v] < d) continue;
    if (v == s) continue;
    for (ArcId id : g.in_arcs(v)) {
      Vertex u = g.arc(id).tail;
      if (banned[u]) continue;
      Weight nd = d + g.arc(id).weight;
      if (!dist[u] || nd < *dist[u]) {
        dist[u] = nd;
        heap.emplace(nd, u);
      }
    }
  }
  if (!dist[s]) return std::nullopt;
  std::vector<Vertex> seq{s};
  Vertex u = s;
  while (u != t) {
    Vertex next = u;
    for (ArcId id : g.out_arcs(u)) {
      Vertex v = g.arc(id).head;
      if (banned[v] || !dist[v] || v == s) continue;
      if (g.arc(id).weight + *dist[v] == *dist[u]) {
        next = v;
        break;
      }
    }
    if (next == u) throw InvariantError("shortest path reconstruction stalled");
    seq.push_back(next);
    u = next;
  }
  return DirectedPath(std::move(seq));
}

std::vector<std::vector<Vertex>> strongly_connected_components(const WeightedDigraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> comps;
  std::size_t counter = 0;
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      auto outs = g.out_arcs(f.v);
      if (f.next < outs.size()) {
        Vertex w = g.arc(outs[f.next++]).head;
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      Vertex v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
    }
  }
  // Tarjan finishes sink components first.
  std::reverse(comps.begin(), comps.end());
  return comps;
}

std::vector<std::vector<Vertex>> connected_components(const UndirectedGraph& g) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<std::vector<Vertex>> comps;
  for (Vertex r = 0; r < g.vertex_count(); ++r) {
    if (seen[r]) continue;
    std::vector<Vertex> comp{r};
    seen[r] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const UndirectedGraph& g) { return connected_components(g).size() <= 1; }

std::size_t diameter(const UndirectedGraph& g) {
  auto comps = connected_components(g);
  if (comps.size() > 1) {
    throw DomainError("diameter of a disconnected graph: vertex " + std::to_string(comps[0][0]) +
                      " and vertex " + std::to_string(comps[1][0]) +
                      " lie in different components");
  }
  std::size_t best = 0;
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> dist(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), static_cast<std::size_t>(-1));
    std::deque<Vertex> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      best = std::max(best, dist[u]);
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == static_cast<std::size_t>(-1)) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return best;
}

bool is_biconnected(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || !is_connected(g)) return false;
  for (Vertex cut = 0; cut < n; ++cut) {
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
      if (v != cut) rest.push_back(v);
    }
    if (!is_connected(g.induced(rest))) return false;
  }
  return true;
}

bool is_outerplanar(const UndirectedGraph& g) {
  // Outerplanar exactly when adding an apex adjacent to everything keeps the
  // graph planar.
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  const std::size_t n = g.vertex_count();
  BoostGraph bg(n + 1);
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  for (Vertex v = 0; v < n; ++v) boost::add_edge(v, n, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace dsnkit
