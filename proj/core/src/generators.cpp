#include "dsnkit/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "dsnkit/errors.hpp"

namespace dsnkit {
namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : rng_() % bound; }
  bool percent(std::uint32_t p) { return below(100) < p; }
  // k distinct values from 0..n-1 by a partial Fisher-Yates shuffle.
  std::vector<Vertex> sample(std::size_t n, std::size_t k) {
    std::vector<Vertex> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Vertex>(i);
    for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + below(n - i)]);
    pool.resize(k);
    return pool;
  }
  Weight weight(std::int64_t max_weight, bool fractional) {
    auto num = static_cast<std::int64_t>(1 + below(static_cast<std::uint64_t>(max_weight)));
    auto den = fractional ? static_cast<std::int64_t>(1 + below(3)) : 1;
    return Rational(num, den);
  }

 private:
  std::mt19937_64 rng_;
};

class ArcSet {
 public:
  explicit ArcSet(std::size_t n) : n_(n) {}
  bool add(Vertex u, Vertex v, Weight w) {
    if (u == v) return false;
    return arcs_.emplace(std::pair(u, v), w).second;
  }
  std::size_t size() const { return arcs_.size(); }
  void fill_random(Draw& draw, std::size_t target, std::int64_t max_weight, bool fractional) {
    if (target > n_ * (n_ - 1)) throw InputError("more arcs requested than a simple digraph can hold");
    while (arcs_.size() < target) {
      Vertex u = static_cast<Vertex>(draw.below(n_));
      Vertex v = static_cast<Vertex>(draw.below(n_));
      if (u != v && !arcs_.contains({u, v})) arcs_.emplace(std::pair(u, v), draw.weight(max_weight, fractional));
    }
  }
  WeightedDigraph graph() const {
    std::vector<Arc> arcs;
    for (auto& [key, w] : arcs_) arcs.push_back({key.first, key.second, w});
    return WeightedDigraph(n_, std::move(arcs));
  }

 private:
  std::size_t n_;
  std::map<std::pair<Vertex, Vertex>, Weight> arcs_;
};

std::vector<Request> covering_requests(Draw& draw, const std::vector<Vertex>& terminals, std::size_t count) {
  const std::size_t q = terminals.size();
  if (q == 1) throw InputError("a single terminal cannot be covered by a request");
  if (count < (q + 1) / 2 || count > q * (q - 1)) {
    throw InputError(std::to_string(count) + " requests cannot cover " + std::to_string(q) + " terminals");
  }
  std::set<Request> out;
  for (std::size_t i = 0; i + 1 < q; i += 2) out.insert({terminals[i], terminals[i + 1]});
  if (q % 2 == 1) out.insert({terminals[q - 1], terminals[0]});
  while (out.size() < count) {
    Vertex s = terminals[draw.below(q)];
    Vertex t = terminals[draw.below(q)];
    if (s != t) out.insert({s, t});
  }
  return {out.begin(), out.end()};
}

}  // namespace

DsnInstance random_instance(const RandomSpec& spec) {
  if (spec.terminals > spec.vertices) throw InputError("more terminals than vertices");
  if (spec.max_weight < 1) throw InputError("maximum weight must be positive");
  Draw draw(spec.seed);
  std::vector<Vertex> terminals = draw.sample(spec.vertices, spec.terminals);
  std::vector<Request> requests = covering_requests(draw, terminals, spec.requests);
  ArcSet arcs(spec.vertices);
  if (spec.plant) {
    for (const Request& r : requests) {
      Vertex at = r.source;
      std::size_t hops = draw.below(3);
      for (std::size_t i = 0; i < hops && arcs.size() + 1 < spec.arcs; ++i) {
        Vertex next = static_cast<Vertex>(draw.below(spec.vertices));
        if (next == at || next == r.target) continue;
        arcs.add(at, next, draw.weight(spec.max_weight, spec.fractional));
        at = next;
      }
      if (arcs.size() < spec.arcs) arcs.add(at, r.target, draw.weight(spec.max_weight, spec.fractional));
    }
  }
  arcs.fill_random(draw, spec.arcs, spec.max_weight, spec.fractional);
  InstanceMeta meta;
  meta.seed = spec.seed;
  meta.name = "random-" + std::to_string(spec.vertices) + "-" + std::to_string(spec.arcs) + "-" +
              std::to_string(spec.terminals) + "-" + std::to_string(spec.requests);
  return DsnInstance(arcs.graph(), std::move(requests), meta);
}

DsnInstance random_out_star(std::size_t vertices, std::size_t arcs_wanted, std::size_t sinks, std::uint64_t seed,
                            std::int64_t max_weight, bool plant) {
  if (sinks + 1 > vertices) throw InputError("more terminals than vertices");
  if (max_weight < 1) throw InputError("maximum weight must be positive");
  Draw draw(seed);
  std::vector<Vertex> terminals = draw.sample(vertices, sinks + 1);
  const Vertex root = terminals.front();
  ArcSet arcs(vertices);
  if (plant) {
    std::vector<Vertex> tree{root};
    for (std::size_t i = 1; i < terminals.size(); ++i) {
      Vertex from = tree[draw.below(tree.size())];
      Vertex via = static_cast<Vertex>(draw.below(vertices));
      if (via != from && via != terminals[i] && arcs.size() + 2 <= arcs_wanted) {
        arcs.add(from, via, draw.weight(max_weight, false));
        tree.push_back(via);
        from = via;
      }
      if (arcs.size() < arcs_wanted) arcs.add(from, terminals[i], draw.weight(max_weight, false));
      tree.push_back(terminals[i]);
    }
  }
  arcs.fill_random(draw, arcs_wanted, max_weight, false);
  std::vector<Request> requests;
  for (std::size_t i = 1; i < terminals.size(); ++i) requests.push_back({root, terminals[i]});
  InstanceMeta meta;
  meta.seed = seed;
  meta.name = "outstar-" + std::to_string(vertices) + "-" + std::to_string(arcs_wanted) + "-" + std::to_string(sinks);
  return DsnInstance(arcs.graph(), std::move(requests), meta);
}

DsnInstance grid_instance(std::size_t width, std::size_t height, std::size_t terminals, std::uint64_t seed,
                          GridRequests kind, std::size_t requests, std::int64_t max_weight) {
  if (width == 0 || height == 0) throw InputError("grid sides must be positive");
  if (terminals < 2 || terminals > width * height) throw InputError("grid needs between 2 and w*h terminals");
  if (max_weight < 1) throw InputError("maximum weight must be positive");
  Draw draw(seed);
  ArcSet arcs(width * height);
  auto id = [&](std::size_t x, std::size_t y) { return static_cast<Vertex>(y * width + x); };
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      if (x + 1 < width) {
        arcs.add(id(x, y), id(x + 1, y), draw.weight(max_weight, false));
        arcs.add(id(x + 1, y), id(x, y), draw.weight(max_weight, false));
      }
      if (y + 1 < height) {
        arcs.add(id(x, y), id(x, y + 1), draw.weight(max_weight, false));
        arcs.add(id(x, y + 1), id(x, y), draw.weight(max_weight, false));
      }
    }
  }
  std::vector<Vertex> chosen = draw.sample(width * height, terminals);
  std::vector<Request> reqs;
  if (kind == GridRequests::kCycle) {
    for (std::size_t i = 0; i < chosen.size(); ++i) reqs.push_back({chosen[i], chosen[(i + 1) % chosen.size()]});
  } else {
    reqs = covering_requests(draw, chosen, requests);
  }
  InstanceMeta meta;
  meta.genus = 0;
  meta.seed = seed;
  meta.name = "grid-" + std::to_string(width) + "x" + std::to_string(height);
  return DsnInstance(arcs.graph(), std::move(reqs), meta);
}

DsnInstance ladder_instance(std::size_t n, const std::vector<std::size_t>& identified) {
  Ladder ladder = make_ladder(n, identified);
  std::vector<Vertex> corners = ladder.corners();
  std::vector<Request> requests;
  for (Vertex s : corners) {
    for (Vertex t : corners) {
      if (s != t) requests.push_back({s, t});
    }
  }
  InstanceMeta meta;
  meta.genus = 0;
  meta.name = "ladder-" + std::to_string(n);
  return DsnInstance(ladder.graph, std::move(requests), meta);
}

DsnInstance ladder_demo(std::size_t n) {
  Ladder ladder = make_ladder(n);
  const std::size_t base = ladder.graph.vertex_count();
  const Vertex s = static_cast<Vertex>(base), t = static_cast<Vertex>(base + 1);
  std::vector<Arc> arcs = ladder.graph.arcs();
  arcs.push_back({s, ladder.corner_a(), 1});
  arcs.push_back({ladder.corner_b(), s, 1});
  arcs.push_back({ladder.corner_d(), t, 1});
  arcs.push_back({t, ladder.corner_c(), 1});
  InstanceMeta meta;
  meta.genus = 0;
  meta.name = "ladder-demo-" + std::to_string(n);
  return DsnInstance(WeightedDigraph(base + 2, std::move(arcs)), {{s, t}, {t, s}}, meta);
}

PsiInstance random_psi(const UndirectedGraph& pattern, const PsiSpec& spec) {
  const std::size_t k = pattern.vertex_count();
  if (spec.host_vertices < k) throw InputError("host must have at least as many vertices as the pattern");
  Draw draw(spec.seed);
  std::vector<Vertex> classes(spec.host_vertices);
  for (std::size_t u = 0; u < spec.host_vertices; ++u) {
    classes[u] = u < k ? static_cast<Vertex>(u) : static_cast<Vertex>(draw.below(k));
  }
  // Shuffle so class representatives are not always the low ids.
  for (std::size_t i = spec.host_vertices; i > 1; --i) std::swap(classes[i - 1], classes[draw.below(i)]);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < spec.host_vertices; ++u) {
    for (Vertex v = u + 1; v < spec.host_vertices; ++v) {
      bool cross = pattern.has_edge(classes[u], classes[v]);
      if (draw.percent(cross ? spec.edge_percent : spec.noise_percent)) edges.emplace_back(u, v);
    }
  }
  if (spec.plant) {
    std::vector<std::vector<Vertex>> members(k);
    for (Vertex u = 0; u < spec.host_vertices; ++u) members[classes[u]].push_back(u);
    std::vector<Vertex> phi(k);
    for (Vertex x = 0; x < k; ++x) phi[x] = members[x][draw.below(members[x].size())];
    for (auto [x, y] : pattern.edges()) edges.emplace_back(phi[x], phi[y]);
  }
  return PsiInstance(UndirectedGraph(spec.host_vertices, edges), pattern, std::move(classes));
}

}  // namespace dsnkit
