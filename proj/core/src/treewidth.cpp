#include "dsnkit/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "dsnkit/errors.hpp"

namespace dsnkit {
namespace {

using Mask = std::uint32_t;

// Vertices outside S + v adjacent to the component of v inside S + v.
Mask frontier_of(const std::vector<Mask>& adj, Mask eliminated, unsigned v) {
  Mask comp = Mask{1} << v;
  Mask fresh = comp;
  Mask outside = 0;
  while (fresh != 0) {
    Mask nb = 0;
    for (Mask f = fresh; f != 0; f &= f - 1) nb |= adj[static_cast<unsigned>(std::countr_zero(f))];
    outside |= nb & ~eliminated;
    fresh = nb & eliminated & ~comp;
    comp |= fresh;
  }
  return outside & ~(Mask{1} << v);
}

// Minimum-degree lower bound (degeneracy).
std::size_t degeneracy(const std::vector<Mask>& adj, unsigned n) {
  Mask alive = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
  std::size_t best = 0;
  while (alive != 0) {
    unsigned pick = 0;
    int low = 1 << 30;
    for (Mask a = alive; a != 0; a &= a - 1) {
      unsigned v = static_cast<unsigned>(std::countr_zero(a));
      int d = std::popcount(adj[v] & alive);
      if (d < low) {
        low = d;
        pick = v;
      }
    }
    best = std::max<std::size_t>(best, static_cast<std::size_t>(low));
    alive &= ~(Mask{1} << pick);
  }
  return best;
}

// Layered search for an elimination order of width <= k.
bool order_within(const std::vector<Mask>& adj, unsigned n, std::size_t k,
                  std::vector<Vertex>& order) {
  std::unordered_map<Mask, Mask> parent;  // set -> predecessor set
  std::vector<Mask> layer{0};
  parent.emplace(0, 0);
  auto finish = [&](Mask s) {
    std::vector<Vertex> rev;
    for (Mask cur = s; cur != 0;) {
      Mask prev = parent.at(cur);
      rev.push_back(static_cast<Vertex>(std::countr_zero(cur ^ prev)));
      cur = prev;
    }
    order.assign(rev.rbegin(), rev.rend());
    for (unsigned v = 0; v < n; ++v) {
      if (!(s >> v & 1)) order.push_back(v);
    }
  };
  for (unsigned size = 0; size <= n; ++size) {
    std::vector<Mask> next;
    for (Mask s : layer) {
      if (static_cast<std::size_t>(n - size) <= k + 1) {
        finish(s);
        return true;
      }
      for (unsigned v = 0; v < n; ++v) {
        if (s >> v & 1) continue;
        Mask t = s | (Mask{1} << v);
        if (parent.count(t)) continue;
        if (static_cast<std::size_t>(std::popcount(frontier_of(adj, s, v))) > k) continue;
        parent.emplace(t, s);
        next.push_back(t);
      }
    }
    if (next.empty()) return false;
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  return false;
}

}  // namespace

std::size_t elimination_width(const UndirectedGraph& g, const std::vector<Vertex>& order) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> check = order;
  std::sort(check.begin(), check.end());
  bool permutation = check.size() == n;
  for (std::size_t i = 0; permutation && i < n; ++i) permutation = check[i] == i;
  if (!permutation) throw InputError("elimination order is not a permutation");
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<char> gone(n, 0);
  std::size_t width = 0;
  for (Vertex v : order) {
    std::vector<Vertex> nb;
    for (Vertex w = 0; w < n; ++w) {
      if (!gone[w] && adj[v][w]) nb.push_back(w);
    }
    width = std::max(width, nb.size());
    for (Vertex a : nb) {
      for (Vertex b : nb) {
        if (a != b) adj[a][b] = 1;
      }
    }
    gone[v] = 1;
  }
  return width;
}

TreewidthResult treewidth_upper_bound(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<char> gone(n, 0);
  TreewidthResult result;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = 0;
    std::size_t best_fill = static_cast<std::size_t>(-1);
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v]) continue;
      std::vector<Vertex> nb;
      for (Vertex w = 0; w < n; ++w) {
        if (!gone[w] && adj[v][w]) nb.push_back(w);
      }
      std::size_t fill = 0;
      for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) fill += adj[nb[i]][nb[j]] ? 0 : 1;
      }
      if (fill < best_fill) {
        best_fill = fill;
        pick = v;
      }
    }
    std::vector<Vertex> nb;
    for (Vertex w = 0; w < n; ++w) {
      if (!gone[w] && adj[pick][w]) nb.push_back(w);
    }
    result.width = std::max(result.width, nb.size());
    for (Vertex a : nb) {
      for (Vertex b : nb) {
        if (a != b) adj[a][b] = 1;
      }
    }
    gone[pick] = 1;
    result.order.push_back(pick);
  }
  result.exact = false;
  return result;
}

TreewidthResult treewidth_exact(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kTreewidthExactMaxVertices) {
    throw CapacityError("exact treewidth limited to " + std::to_string(kTreewidthExactMaxVertices) +
                        " vertices, got " + std::to_string(n));
  }
  TreewidthResult upper = treewidth_upper_bound(g);
  upper.exact = true;
  if (n == 0) return upper;
  std::vector<Mask> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  const unsigned un = static_cast<unsigned>(n);
  for (std::size_t k = degeneracy(adj, un); k < upper.width; ++k) {
    std::vector<Vertex> order;
    if (order_within(adj, un, k, order)) return {k, std::move(order), true};
  }
  return upper;
}

TreewidthResult treewidth(const UndirectedGraph& g) {
  if (g.vertex_count() <= kTreewidthExactMaxVertices) return treewidth_exact(g);
  return treewidth_upper_bound(g);
}

}  // namespace dsnkit
