#include "dsnkit/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dsnkit/errors.hpp"

namespace dsnkit {
namespace {

std::size_t ceil_sqrt(std::size_t k) {
  std::size_t r = 0;
  while (r * r < k) ++r;
  return r;
}

// Smallest colour not in `used`.
std::size_t first_free(const std::vector<char>& used) {
  std::size_t c = 0;
  while (c < used.size() && used[c]) ++c;
  return c;
}

std::size_t mark_used(std::vector<char>& used, std::size_t c) {
  if (c >= used.size()) used.resize(c + 1, 0);
  used[c] = 1;
  return c;
}

}  // namespace

PsiInstance::PsiInstance(UndirectedGraph host_graph, UndirectedGraph pattern_graph,
                         std::vector<Vertex> class_map)
    : host(std::move(host_graph)), pattern(std::move(pattern_graph)), classes(std::move(class_map)) {
  if (classes.size() != host.vertex_count()) {
    throw InputError("class map covers " + std::to_string(classes.size()) + " host vertices, expected " +
                     std::to_string(host.vertex_count()));
  }
  for (std::size_t u = 0; u < classes.size(); ++u) {
    if (classes[u] >= pattern.vertex_count()) {
      throw InputError("host vertex " + std::to_string(u) + " mapped to unknown pattern vertex " +
                       std::to_string(classes[u]));
    }
  }
  if (pattern.vertex_count() > host.vertex_count()) {
    throw InputError("pattern has more vertices than the host");
  }
}

std::size_t Labelling::gamma_of(Vertex u, Vertex v) const {
  auto key = std::minmax(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::pair<Vertex, Vertex>(key.first, key.second));
  if (it == edges.end() || *it != std::pair<Vertex, Vertex>(key.first, key.second)) {
    throw InputError("{" + std::to_string(u) + "," + std::to_string(v) + "} is not a pattern edge");
  }
  return gamma[static_cast<std::size_t>(it - edges.begin())];
}

LabellingAudit audit_labelling(const UndirectedGraph& pattern, const Labelling& lab) {
  LabellingAudit audit;
  const std::size_t k = pattern.vertex_count();
  audit.pairs_distinct = true;
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < k; ++v) {
      if (lab.alpha[u] == lab.alpha[v] && lab.beta[u] == lab.beta[v]) audit.pairs_distinct = false;
    }
  }
  audit.adjacent_differ = true;
  for (auto [u, v] : lab.edges) {
    if (lab.alpha[u] == lab.alpha[v] || lab.beta[u] == lab.beta[v]) audit.adjacent_differ = false;
  }
  audit.edge_labels_unique = true;
  for (std::size_t e = 0; e < lab.edges.size(); ++e) {
    for (std::size_t f = e + 1; f < lab.edges.size(); ++f) {
      if (lab.gamma[e] != lab.gamma[f]) continue;
      for (Vertex u : {lab.edges[e].first, lab.edges[e].second}) {
        for (Vertex v : {lab.edges[f].first, lab.edges[f].second}) {
          if (lab.alpha[u] == lab.alpha[v]) audit.edge_labels_unique = false;
        }
      }
    }
  }
  audit.x_bound = lab.x_count <= lab.r + 4;
  audit.y_bound = lab.y_count <= lab.r + 3;
  audit.z_bound = lab.edges.empty() || lab.z_count + 1 <= 6 * lab.r;
  if (!audit.pairs_distinct) audit.failures.push_back("two vertices share both alpha and beta");
  if (!audit.adjacent_differ) audit.failures.push_back("adjacent vertices share a label");
  if (!audit.edge_labels_unique) audit.failures.push_back("gamma repeats on edges with alpha-equal endpoints");
  if (!audit.x_bound) audit.failures.push_back("too many X labels");
  if (!audit.y_bound) audit.failures.push_back("too many Y labels");
  if (!audit.z_bound) audit.failures.push_back("too many Z labels");
  return audit;
}

std::vector<std::string> check_pattern_degrees(const UndirectedGraph& pattern) {
  std::vector<std::string> warnings;
  for (Vertex v = 0; v < pattern.vertex_count(); ++v) {
    if (pattern.degree(v) > 3) {
      throw DomainError("pattern vertex " + std::to_string(v) + " has degree " +
                        std::to_string(pattern.degree(v)) + ", above the maximum degree 3");
    }
  }
  for (Vertex v = 0; v < pattern.vertex_count(); ++v) {
    if (pattern.degree(v) != 3) {
      warnings.push_back("pattern is not 3-regular (vertex " + std::to_string(v) + " has degree " +
                         std::to_string(pattern.degree(v)) + ")");
      break;
    }
  }
  return warnings;
}

Labelling build_labelling(const PsiInstance& psi) {
  const UndirectedGraph& h = psi.pattern;
  const std::size_t k = h.vertex_count();
  Labelling lab;
  lab.warnings = check_pattern_degrees(h);
  lab.r = ceil_sqrt(k);

  lab.colour.assign(k, -1);
  for (Vertex v = 0; v < k; ++v) {
    std::vector<char> used(4, 0);
    for (Vertex u : h.neighbors(v)) {
      if (lab.colour[u] >= 0) used[static_cast<std::size_t>(lab.colour[u])] = 1;
    }
    lab.colour[v] = static_cast<int>(first_free(used));
  }

  lab.alpha.assign(k, 0);
  for (int c = 0; c < 4; ++c) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < k; ++v) {
      if (lab.colour[v] == c) members.push_back(v);
    }
    for (std::size_t i = 0; i < members.size(); i += lab.r) {
      std::vector<Vertex> chunk(members.begin() + static_cast<std::ptrdiff_t>(i),
                                members.begin() + static_cast<std::ptrdiff_t>(std::min(members.size(), i + lab.r)));
      for (Vertex v : chunk) lab.alpha[v] = lab.chunks.size();
      lab.chunks.push_back(std::move(chunk));
    }
  }
  lab.x_count = lab.chunks.size();

  // Pattern plus a clique on every chunk.
  UndirectedGraph augmented = h;
  for (const auto& chunk : lab.chunks) {
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      for (std::size_t j = i + 1; j < chunk.size(); ++j) augmented.add_edge(chunk[i], chunk[j]);
    }
  }
  lab.beta.assign(k, 0);
  std::vector<char> coloured(k, 0);
  for (Vertex v = 0; v < k; ++v) {
    std::vector<char> used;
    for (Vertex u : augmented.neighbors(v)) {
      if (coloured[u]) mark_used(used, lab.beta[u]);
    }
    lab.beta[v] = first_free(used);
    coloured[v] = 1;
    lab.y_count = std::max(lab.y_count, lab.beta[v] + 1);
  }

  // Edge colouring of the chunk multigraph: edges conflict when they share a
  // chunk endpoint.
  lab.edges = h.edges();
  lab.gamma.assign(lab.edges.size(), 0);
  for (std::size_t e = 0; e < lab.edges.size(); ++e) {
    const std::size_t ea = lab.alpha[lab.edges[e].first], eb = lab.alpha[lab.edges[e].second];
    std::vector<char> used;
    for (std::size_t f = 0; f < e; ++f) {
      const std::size_t fa = lab.alpha[lab.edges[f].first], fb = lab.alpha[lab.edges[f].second];
      if (ea == fa || ea == fb || eb == fa || eb == fb) mark_used(used, lab.gamma[f]);
    }
    lab.gamma[e] = first_free(used);
    lab.z_count = std::max(lab.z_count, lab.gamma[e] + 1);
  }

  LabellingAudit audit = audit_labelling(h, lab);
  if (!audit.all()) throw InvariantError("labelling audit failed: " + audit.failures.front());
  return lab;
}

Stratum ReductionOutput::stratum(Vertex v) const {
  if (v < w_offset) return Stratum::kV;
  if (v < x_offset) return Stratum::kW;
  if (v < y_offset) return Stratum::kX;
  if (v < z_offset) return Stratum::kY;
  return Stratum::kZ;
}

ReductionOutput build_dsn(const PsiInstance& psi, const Labelling& lab) {
  ReductionOutput out;
  out.labelling = lab;
  out.host_vertices = psi.host.vertex_count();
  out.host_edges = psi.host.edges();
  out.w_offset = static_cast<Vertex>(out.host_vertices);
  out.x_offset = out.w_offset + static_cast<Vertex>(out.host_edges.size());
  out.y_offset = out.x_offset + static_cast<Vertex>(lab.x_count);
  out.z_offset = out.y_offset + static_cast<Vertex>(lab.y_count);
  const std::size_t total = out.z_offset + lab.z_count;

  std::vector<Arc> arcs;
  for (Vertex u = 0; u < out.host_vertices; ++u) {
    Vertex c = psi.classes[u];
    arcs.push_back({out.x_vertex(lab.alpha[c]), u, 1});
    arcs.push_back({u, out.y_vertex(lab.beta[c]), 1});
  }
  for (std::size_t e = 0; e < out.host_edges.size(); ++e) {
    auto [u, v] = out.host_edges[e];
    Vertex w = out.w_vertex(e);
    arcs.push_back({u, w, 1});
    arcs.push_back({v, w, 1});
    // Host edges whose classes are not adjacent in the pattern have no
    // gamma label and hence no exit arc.
    if (psi.pattern.has_edge(psi.classes[u], psi.classes[v])) {
      arcs.push_back({w, out.z_vertex(lab.gamma_of(psi.classes[u], psi.classes[v])), 1});
    }
  }
  WeightedDigraph host(total, std::move(arcs));

  std::set<Request> requests;
  for (Vertex v = 0; v < psi.k(); ++v) {
    Request r{out.x_vertex(lab.alpha[v]), out.y_vertex(lab.beta[v])};
    out.pair_requests.push_back(r);
    requests.insert(r);
  }
  for (std::size_t e = 0; e < lab.edges.size(); ++e) {
    auto [u, v] = lab.edges[e];
    for (Vertex end : {u, v}) {
      Request r{out.x_vertex(lab.alpha[end]), out.z_vertex(lab.gamma[e])};
      out.edge_requests.push_back(r);
      requests.insert(r);
    }
  }
  if (requests.size() != out.pair_requests.size() + out.edge_requests.size()) {
    throw InvariantError("request strata overlap");
  }
  out.threshold = Weight(static_cast<std::int64_t>(2 * psi.k() + 3 * lab.edges.size()));

  for (ArcId id = 0; id < host.arc_count(); ++id) {
    const Arc& a = host.arc(id);
    Stratum from = out.stratum(a.tail), to = out.stratum(a.head);
    if ((from == Stratum::kX && to == Stratum::kV) || (from == Stratum::kV && to == Stratum::kY)) {
      out.vertex_arcs.push_back(id);
    } else if ((from == Stratum::kV && to == Stratum::kW) || (from == Stratum::kW && to == Stratum::kZ)) {
      out.edge_arcs.push_back(id);
    } else {
      throw InvariantError("arc outside the layered strata");
    }
  }

  InstanceMeta meta;
  meta.threshold = out.threshold;
  out.dsn = DsnInstance(std::move(host), std::vector<Request>(requests.begin(), requests.end()), meta);
  return out;
}

ReductionOutput build_dsn(const PsiInstance& psi) { return build_dsn(psi, build_labelling(psi)); }

PsiDecision decide_psi_via_dsn(const PsiInstance& psi, const Solver& solver) {
  PsiDecision d;
  d.reduction = build_dsn(psi);
  d.result = solver(d.reduction.dsn, d.reduction.threshold);
  d.yes = d.result.optimal() && d.result.cost <= d.reduction.threshold;
  if (d.yes) d.embedding = extract_embedding(psi, d.reduction, d.result.solution);
  return d;
}

std::optional<Embedding> solve_psi_bruteforce(const PsiInstance& psi) {
  const std::size_t k = psi.k();
  if (k > kPsiBruteForceMaxPattern) {
    throw CapacityError("PSI brute force limited to " + std::to_string(kPsiBruteForceMaxPattern) +
                        " pattern vertices");
  }
  std::vector<std::vector<Vertex>> candidates(k);
  for (Vertex u = 0; u < psi.host.vertex_count(); ++u) candidates[psi.classes[u]].push_back(u);
  Embedding phi(k, 0);
  auto place = [&](auto&& self, Vertex v) -> bool {
    if (v == k) return true;
    for (Vertex u : candidates[v]) {
      bool fits = true;
      for (Vertex w : psi.pattern.neighbors(v)) {
        if (w < v && !psi.host.has_edge(u, phi[w])) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      phi[v] = u;
      if (self(self, v + 1)) return true;
    }
    return false;
  };
  if (!place(place, 0)) return std::nullopt;
  return phi;
}

bool is_psi_embedding(const PsiInstance& psi, const Embedding& phi) {
  if (phi.size() != psi.k()) return false;
  std::set<Vertex> image;
  for (Vertex v = 0; v < phi.size(); ++v) {
    if (phi[v] >= psi.host.vertex_count() || psi.classes[phi[v]] != v) return false;
    image.insert(phi[v]);
  }
  if (image.size() != phi.size()) return false;
  for (auto [u, v] : psi.pattern.edges()) {
    if (!psi.host.has_edge(phi[u], phi[v])) return false;
  }
  return true;
}

Embedding extract_embedding(const PsiInstance& psi, const ReductionOutput& out, const SolutionSubgraph& sol) {
  if (!validate(out.dsn, sol).valid) throw PreconditionError("solution does not satisfy the requests");
  if (cost(out.dsn, sol) > out.threshold) throw PreconditionError("solution costs more than the threshold");
  const WeightedDigraph& g = out.dsn.host();
  const Labelling& lab = out.labelling;
  auto chosen = [&](Vertex tail, Vertex head) {
    auto id = g.find_arc(tail, head);
    return id && sol.contains(*id);
  };
  Embedding phi(psi.k(), 0);
  for (Vertex v = 0; v < psi.k(); ++v) {
    std::vector<Vertex> found;
    for (Vertex u = 0; u < out.host_vertices; ++u) {
      if (psi.classes[u] == v && chosen(out.x_vertex(lab.alpha[v]), u) && chosen(u, out.y_vertex(lab.beta[v]))) {
        found.push_back(u);
      }
    }
    if (found.size() != 1) {
      throw InvariantError("pattern vertex " + std::to_string(v) + " has " + std::to_string(found.size()) +
                           " candidate images in the solution");
    }
    phi[v] = found.front();
  }
  for (auto [u, v] : psi.pattern.edges()) {
    auto key = std::minmax(phi[u], phi[v]);
    auto it = std::lower_bound(out.host_edges.begin(), out.host_edges.end(),
                               std::pair<Vertex, Vertex>(key.first, key.second));
    bool realised = it != out.host_edges.end() && *it == std::pair<Vertex, Vertex>(key.first, key.second);
    if (realised) {
      Vertex w = out.w_vertex(static_cast<std::size_t>(it - out.host_edges.begin()));
      realised = chosen(phi[u], w) && chosen(phi[v], w) && chosen(w, out.z_vertex(lab.gamma_of(u, v)));
    }
    if (!realised) {
      throw InvariantError("pattern edge {" + std::to_string(u) + "," + std::to_string(v) +
                           "} is not routed through a shared W vertex");
    }
  }
  if (!is_psi_embedding(psi, phi)) throw InvariantError("extracted mapping is not an embedding");
  return phi;
}

SolutionSubgraph embedding_to_solution(const ReductionOutput& out, const Embedding& phi,
                                       const UndirectedGraph& pattern) {
  const WeightedDigraph& g = out.dsn.host();
  std::vector<char> keep(g.vertex_count(), 0);
  for (Vertex v = out.x_offset; v < g.vertex_count(); ++v) keep[v] = 1;
  for (Vertex u : phi) keep[u] = 1;
  for (auto [u, v] : pattern.edges()) {
    auto key = std::minmax(phi[u], phi[v]);
    auto it = std::lower_bound(out.host_edges.begin(), out.host_edges.end(),
                               std::pair<Vertex, Vertex>(key.first, key.second));
    if (it != out.host_edges.end() && *it == std::pair<Vertex, Vertex>(key.first, key.second)) {
      keep[out.w_vertex(static_cast<std::size_t>(it - out.host_edges.begin()))] = 1;
    }
  }
  std::vector<ArcId> ids;
  for (ArcId id = 0; id < g.arc_count(); ++id) {
    if (keep[g.arc(id).tail] && keep[g.arc(id).head]) ids.push_back(id);
  }
  return SolutionSubgraph(std::move(ids));
}

std::vector<NamedPattern> pattern_corpus() {
  using E = std::vector<std::pair<Vertex, Vertex>>;
  std::vector<NamedPattern> out;
  out.push_back({"k4", UndirectedGraph(4, E{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})});
  out.push_back({"k33", UndirectedGraph(6, E{{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}})});
  out.push_back({"prism", UndirectedGraph(6, E{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}})});
  E cube;
  for (Vertex v = 0; v < 8; ++v) {
    for (Vertex bit : {1u, 2u, 4u}) {
      if (!(v & bit)) cube.emplace_back(v, v | bit);
    }
  }
  out.push_back({"cube", UndirectedGraph(8, cube)});
  E wagner;
  for (Vertex v = 0; v < 8; ++v) {
    wagner.emplace_back(v, (v + 1) % 8);
    if (v < 4) wagner.emplace_back(v, v + 4);
  }
  out.push_back({"wagner", UndirectedGraph(8, wagner)});
  return out;
}

UndirectedGraph pattern_by_name(const std::string& name) {
  for (auto& p : pattern_corpus()) {
    if (p.name == name) return p.graph;
  }
  throw InputError("unknown pattern '" + name + "' (expected k4, k33, prism, cube or wagner)");
}

}  // namespace dsnkit
