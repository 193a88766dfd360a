#include "oracles.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace oracle {

bool reach(std::size_t n, const std::vector<Pair>& arcs, Vertex s, Vertex t,
           const std::set<Vertex>& forbidden) {
  if (s == t) return true;
  std::vector<bool> seen(n, false);
  seen[s] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [u, v] : arcs) {
      if (!seen[u] || seen[v]) continue;
      if (u != s && forbidden.count(u)) continue;
      seen[v] = true;
      changed = true;
    }
  }
  return seen[t];
}

std::vector<Pair> arc_pairs(const dsnkit::WeightedDigraph& g) {
  std::vector<Pair> out;
  for (const auto& a : g.arcs()) out.emplace_back(a.tail, a.head);
  return out;
}

std::vector<Pair> arc_pairs(const dsnkit::WeightedDigraph& g, const dsnkit::SolutionSubgraph& sol) {
  std::vector<Pair> out;
  for (auto id : sol.arcs()) out.emplace_back(g.arc(id).tail, g.arc(id).head);
  return out;
}

bool valid(const dsnkit::DsnInstance& inst, const std::vector<Pair>& arcs) {
  const std::size_t n = inst.host().vertex_count();
  return std::all_of(inst.requests().begin(), inst.requests().end(),
                     [&](const dsnkit::Request& r) { return reach(n, arcs, r.source, r.target); });
}

bool inclusion_minimal(const dsnkit::DsnInstance& inst, const std::vector<Pair>& arcs) {
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    std::vector<Pair> rest = arcs;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (valid(inst, rest)) return false;
  }
  return true;
}

namespace {

void enumerate(const dsnkit::WeightedDigraph& g, Vertex t, std::vector<Vertex>& path, std::vector<bool>& on,
               Weight w, std::optional<PathOption>& best) {
  Vertex u = path.back();
  if (u == t) {
    if (!best || w < best->weight || (w == best->weight && path < best->vertices)) best = PathOption{w, path};
    return;
  }
  for (const auto& a : g.arcs()) {
    if (a.tail != u || on[a.head]) continue;
    on[a.head] = true;
    path.push_back(a.head);
    enumerate(g, t, path, on, w + a.weight, best);
    path.pop_back();
    on[a.head] = false;
  }
}

}  // namespace

std::optional<PathOption> shortest_by_enumeration(const dsnkit::WeightedDigraph& g, Vertex s, Vertex t) {
  std::optional<PathOption> best;
  std::vector<Vertex> path{s};
  std::vector<bool> on(g.vertex_count(), false);
  on[s] = true;
  enumerate(g, t, path, on, 0, best);
  return best;
}

std::optional<Weight> dsn_optimum(const dsnkit::DsnInstance& inst) {
  const auto& arcs = inst.host().arcs();
  const std::size_t m = arcs.size();
  if (m > 22) throw std::invalid_argument("oracle limited to 22 arcs");
  std::optional<Weight> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Weight w = 0;
    std::vector<Pair> chosen;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) {
        w += arcs[i].weight;
        chosen.emplace_back(arcs[i].tail, arcs[i].head);
      }
    }
    if (best && !(w < *best)) continue;
    if (valid(inst, chosen)) best = w;
  }
  return best;
}

std::optional<std::size_t> diameter(const dsnkit::UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t inf = std::numeric_limits<std::size_t>::max() / 2;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  std::size_t best = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i][j] >= inf) return std::nullopt;
      best = std::max(best, d[i][j]);
    }
  return best;
}

std::size_t treewidth(const dsnkit::UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  if (n > 20) throw std::invalid_argument("oracle limited to 20 vertices");
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  // |Q(S, v)|: vertices outside S + v reached from v through S.
  auto q_size = [&](std::uint32_t s, Vertex v) {
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{v};
    seen[v] = true;
    std::size_t count = 0;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (seen[w]) continue;
        seen[w] = true;
        if (s >> w & 1) {
          stack.push_back(w);
        } else {
          ++count;
        }
      }
    }
    return count;
  };
  std::vector<int> tw(std::size_t{full} + 1, std::numeric_limits<int>::max());
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    for (Vertex v = 0; v < n; ++v) {
      if (!(s >> v & 1)) continue;
      std::uint32_t rest = s & ~(std::uint32_t{1} << v);
      int value = std::max(tw[rest], static_cast<int>(q_size(rest, v)));
      tw[s] = std::min(tw[s], value);
    }
  }
  return static_cast<std::size_t>(std::max(tw[full], 0));
}

std::set<std::pair<std::pair<int, std::size_t>, std::pair<int, std::size_t>>> ladder_arcs(
    std::size_t n, const std::set<std::size_t>& identified) {
  using End = std::pair<int, std::size_t>;
  auto a = [&](std::size_t i) { return End{0, i}; };
  auto b = [&](std::size_t i) { return End{identified.count(i) ? 0 : 1, i}; };
  std::set<std::pair<End, End>> out;
  auto add = [&](End u, End v) {
    if (u != v) out.emplace(u, v);
  };
  // i ranges follow the families literally, with n/2 as a rational bound.
  for (std::size_t i = 0; 2 * i < n; ++i) add(a(2 * i + 1), b(2 * i + 1));
  for (std::size_t i = 1; 2 * i <= n; ++i) add(b(2 * i), a(2 * i));
  for (std::size_t i = 1; 2 * i <= n; ++i) add(a(2 * i), a(2 * i - 1));
  for (std::size_t i = 1; 2 * i < n; ++i) add(a(2 * i), a(2 * i + 1));
  for (std::size_t i = 1; 2 * i < n; ++i) add(b(2 * i + 1), b(2 * i));
  for (std::size_t i = 1; 2 * i <= n; ++i) add(b(2 * i - 1), b(2 * i));
  return out;
}

std::optional<dsnkit::Embedding> psi_embedding(const dsnkit::PsiInstance& psi) {
  const std::size_t k = psi.pattern.vertex_count();
  std::vector<std::vector<Vertex>> members(k);
  for (Vertex u = 0; u < psi.host.vertex_count(); ++u) members[psi.classes[u]].push_back(u);
  for (const auto& m : members)
    if (m.empty()) return std::nullopt;
  std::vector<std::size_t> pick(k, 0);
  for (;;) {
    dsnkit::Embedding phi(k);
    for (std::size_t x = 0; x < k; ++x) phi[x] = members[x][pick[x]];
    bool ok = true;
    for (auto [x, y] : psi.pattern.edges()) {
      if (!psi.host.has_edge(phi[x], phi[y])) {
        ok = false;
        break;
      }
    }
    if (ok) return phi;
    std::size_t i = 0;
    while (i < k && ++pick[i] == members[i].size()) pick[i++] = 0;
    if (i == k) return std::nullopt;
  }
}

std::vector<std::string> labelling_violations(const dsnkit::UndirectedGraph& pattern,
                                              const dsnkit::Labelling& lab) {
  std::vector<std::string> out;
  const std::size_t k = pattern.vertex_count();
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v)
      if (lab.alpha[u] == lab.alpha[v] && lab.beta[u] == lab.beta[v]) out.push_back("(i) fails");
  auto edges = pattern.edges();
  for (auto [u, v] : edges)
    if (lab.alpha[u] == lab.alpha[v] || lab.beta[u] == lab.beta[v]) out.push_back("(ii) fails");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (std::size_t f = e + 1; f < edges.size(); ++f) {
      auto [u1, v1] = edges[e];
      auto [u2, v2] = edges[f];
      if (lab.gamma_of(u1, v1) != lab.gamma_of(u2, v2)) continue;
      for (Vertex x : {u1, v1})
        for (Vertex y : {u2, v2})
          if (lab.alpha[x] == lab.alpha[y]) out.push_back("(iii) fails");
    }
  }
  return out;
}

std::vector<std::vector<bool>> terminal_matrix(std::size_t n, const std::vector<Pair>& arcs,
                                               const std::vector<Vertex>& terminals) {
  std::vector<std::vector<bool>> out(terminals.size(), std::vector<bool>(terminals.size(), false));
  for (std::size_t i = 0; i < terminals.size(); ++i)
    for (std::size_t j = 0; j < terminals.size(); ++j)
      out[i][j] = reach(n, arcs, terminals[i], terminals[j]);
  return out;
}

}  // namespace oracle
