#include "dsnkit/ladder.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "dsnkit/algorithms.hpp"
#include "dsnkit/errors.hpp"
#include "dsnkit/instance.hpp"

namespace dsnkit {

std::vector<Vertex> Ladder::corners() const {
  std::vector<Vertex> out{corner_a(), corner_b(), corner_c(), corner_d()};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Ladder make_ladder(std::size_t n, std::vector<std::size_t> identified) {
  if (n == 0) throw InputError("ladder length must be positive");
  std::sort(identified.begin(), identified.end());
  identified.erase(std::unique(identified.begin(), identified.end()), identified.end());
  for (std::size_t i : identified) {
    if (i < 1 || i > n) throw InputError("identified rung " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
  Ladder L;
  L.n = n;
  L.identified = identified;
  L.a.assign(n + 1, 0);
  L.b.assign(n + 1, 0);
  Vertex next = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    L.a[i] = next++;
    L.b[i] = std::binary_search(identified.begin(), identified.end(), i) ? L.a[i] : next++;
  }
  std::set<std::pair<Vertex, Vertex>> pairs;
  auto add = [&](Vertex u, Vertex v) {
    if (u != v) pairs.emplace(u, v);
  };
  const auto& a = L.a;
  const auto& b = L.b;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i % 2 == 1) add(a[i], b[i]);             // odd rungs point a -> b
    else add(b[i], a[i]);                        // even rungs point b -> a
  }
  for (std::size_t i = 2; i <= n; i += 2) {
    add(a[i], a[i - 1]);
    add(b[i - 1], b[i]);
    if (i + 1 <= n) {
      add(a[i], a[i + 1]);
      add(b[i + 1], b[i]);
    }
  }
  std::vector<Arc> arcs;
  for (auto [u, v] : pairs) arcs.push_back({u, v, 1});
  L.graph = WeightedDigraph(next, std::move(arcs));

  auto dedupe = [](std::vector<Vertex> seq) {
    seq.erase(std::unique(seq.begin(), seq.end()), seq.end());
    return DirectedPath(std::move(seq));
  };
  std::vector<Vertex> first, second;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i % 2 == 1) first.insert(first.end(), {a[i], b[i]});
    else first.insert(first.end(), {b[i], a[i]});
  }
  for (std::size_t i = n; i >= 1; --i) {
    if (i % 2 == 1) second.insert(second.end(), {a[i], b[i]});
    else second.insert(second.end(), {b[i], a[i]});
  }
  L.first_path = dedupe(std::move(first));
  L.second_path = dedupe(std::move(second));
  return L;
}

namespace {

// Mutable arc set used while peeling a candidate ladder.
struct Work {
  std::set<std::pair<Vertex, Vertex>> arcs;
  std::set<Vertex> alive;

  std::vector<Vertex> outs(Vertex v) const {
    std::vector<Vertex> r;
    for (auto it = arcs.lower_bound({v, 0}); it != arcs.end() && it->first == v; ++it) r.push_back(it->second);
    return r;
  }
  std::vector<Vertex> ins(Vertex v) const {
    std::vector<Vertex> r;
    for (auto [x, y] : arcs) {
      if (y == v) r.push_back(x);
    }
    return r;
  }
  std::vector<Vertex> neighbours(Vertex v) const {
    auto r = outs(v);
    auto i = ins(v);
    r.insert(r.end(), i.begin(), i.end());
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
  }
  bool has(Vertex u, Vertex v) const { return arcs.count({u, v}) > 0; }
  void erase_vertex(Vertex v) {
    for (auto it = arcs.begin(); it != arcs.end();) {
      if (it->first == v || it->second == v) it = arcs.erase(it);
      else ++it;
    }
    alive.erase(v);
  }
  WeightedDigraph as_graph(std::vector<Vertex>& ids) const {
    ids.assign(alive.begin(), alive.end());
    std::map<Vertex, Vertex> index;
    for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<Vertex>(i);
    std::vector<Arc> out;
    for (auto [u, v] : arcs) out.push_back({index.at(u), index.at(v), 1});
    return WeightedDigraph(ids.size(), std::move(out));
  }
  bool reaches_in(Vertex s, Vertex t) const {
    std::vector<Vertex> ids;
    WeightedDigraph g = as_graph(ids);
    auto pos = [&](Vertex v) {
      return static_cast<Vertex>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    };
    return reaches(g, pos(s), pos(t));
  }
};

LadderVerdict reject(std::string reason) { return {false, std::nullopt, std::move(reason)}; }

std::string hypotheses(const Work& w, Vertex a, Vertex b, Vertex c, Vertex d) {
  for (Vertex v : {a, b, c, d}) {
    if (!w.alive.count(v)) return "corner " + std::to_string(v) + " is not a vertex";
  }
  if (a != b) {
    if (!w.has(a, b)) return "corners a, b are distinct but ab is not an arc";
    if (w.ins(b) != std::vector<Vertex>{a} || w.outs(a) != std::vector<Vertex>{b}) {
      return "ab is not the only arc out of a and into b";
    }
  }
  if (c != d) {
    if (!w.has(c, d)) return "corners c, d are distinct but cd is not an arc";
    if (w.ins(d) != std::vector<Vertex>{c} || w.outs(c) != std::vector<Vertex>{d}) {
      return "cd is not the only arc out of c and into d";
    }
  }
  if (!w.reaches_in(a, d)) return "a does not reach d";
  if (!w.reaches_in(c, b)) return "c does not reach b";
  return {};
}

// Replaces in/out-degree-one vertices outside the corners by a single arc.
std::string suppress(Work& w, const std::set<Vertex>& corners) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v : std::vector<Vertex>(w.alive.begin(), w.alive.end())) {
      if (corners.count(v)) continue;
      auto in = w.ins(v);
      auto out = w.outs(v);
      if (in.empty() || out.empty()) return "vertex " + std::to_string(v) + " is a source or sink";
      if (in.size() != 1 || out.size() != 1) continue;
      if (in[0] == out[0]) return "vertex " + std::to_string(v) + " hangs off a single neighbour";
      if (w.has(in[0], out[0])) return "suppressing " + std::to_string(v) + " creates a parallel arc";
      w.erase_vertex(v);
      w.arcs.emplace(in[0], out[0]);
      changed = true;
    }
  }
  return {};
}

std::optional<LadderMatch> match_base(const Work& w, Vertex a, Vertex b, Vertex c, Vertex d) {
  std::vector<Vertex> ids(w.alive.begin(), w.alive.end());
  for (std::size_t n = 1; n <= 4; ++n) {
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
      std::vector<std::size_t> ident;
      for (std::size_t i = 0; i < n; ++i) {
        if (bits >> i & 1) ident.push_back(i + 1);
      }
      Ladder L = make_ladder(n, ident);
      if (L.graph.vertex_count() != ids.size() || L.graph.arc_count() != w.arcs.size()) continue;
      std::vector<Vertex> perm = ids;
      do {
        // perm[x] is the image of ladder vertex x.
        if (perm[L.corner_a()] != a || perm[L.corner_b()] != b || perm[L.corner_c()] != c ||
            perm[L.corner_d()] != d) {
          continue;
        }
        bool same = true;
        for (const Arc& arc : L.graph.arcs()) {
          if (!w.has(perm[arc.tail], perm[arc.head])) {
            same = false;
            break;
          }
        }
        if (same) return LadderMatch{n, ident};
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return std::nullopt;
}

LadderVerdict peel(Work w, Vertex a, Vertex b, Vertex c, Vertex d) {
  if (auto why = hypotheses(w, a, b, c, d); !why.empty()) return reject(why);
  if (auto why = suppress(w, {a, b, c, d}); !why.empty()) return reject(why);
  if (w.alive.size() <= 4) {
    auto m = match_base(w, a, b, c, d);
    if (!m) return reject("small remainder is not a ladder with these corners");
    return {true, m, {}};
  }
  if (a == c || a == d || b == c || b == d) return reject("corners meet before the ladder is exhausted");
  Vertex a_in, b_out;
  if (a != b) {
    auto in = w.ins(a);
    auto out = w.outs(b);
    if (in.size() != 1 || out.size() != 1) return reject("end rung has extra arcs");
    if (w.neighbours(a).size() != 2 || w.neighbours(b).size() != 2) return reject("end rung has extra neighbours");
    a_in = in[0];
    b_out = out[0];
  } else {
    auto in = w.ins(a);
    auto out = w.outs(a);
    if (in.size() != 1 || out.size() != 1) return reject("identified end rung has extra arcs");
    a_in = in[0];
    b_out = out[0];
  }
  if (a_in == a || a_in == b || b_out == a || b_out == b) return reject("end rung folds onto itself");
  w.erase_vertex(a);
  if (b != a) w.erase_vertex(b);
  LadderVerdict rest = peel(std::move(w), b_out, a_in, c, d);
  if (!rest.is_ladder) return rest;
  LadderMatch m;
  m.n = rest.match->n + 1;
  if (a == b) m.identified.push_back(1);
  for (std::size_t i : rest.match->identified) m.identified.push_back(i + 1);
  return {true, m, {}};
}

}  // namespace

LadderVerdict is_ladder_subdivision(const WeightedDigraph& k, Vertex a, Vertex b, Vertex c, Vertex d) {
  for (Vertex v : {a, b, c, d}) {
    if (!k.contains(v)) throw InputError("unknown corner " + std::to_string(v));
  }
  Work w;
  for (const Arc& arc : k.arcs()) w.arcs.emplace(arc.tail, arc.head);
  for (Vertex v : live_vertices(k, {a, b, c, d})) w.alive.insert(v);
  if (auto why = hypotheses(w, a, b, c, d); !why.empty()) return reject(why);

  std::vector<Request> requests;
  if (a != d) requests.push_back({a, d});
  if (c != b && !(c == a && b == d)) requests.push_back({c, b});
  if (!requests.empty()) {
    DsnInstance inst(k, requests);
    if (!is_inclusion_minimal(inst, SolutionSubgraph::all_arcs(k))) {
      return reject("not inclusion-minimal for the connections a->d and c->b");
    }
  } else if (k.arc_count() != 0) {
    return reject("not inclusion-minimal for the connections a->d and c->b");
  }
  return peel(std::move(w), a, b, c, d);
}

bool is_ladder_undirected(const UndirectedGraph& u, Vertex a, Vertex b, Vertex c, Vertex d) {
  const std::size_t n = u.vertex_count();
  for (Vertex v : {a, b, c, d}) {
    if (v >= n) throw InputError("unknown corner " + std::to_string(v));
  }
  std::set<Vertex> corners{a, b, c, d};
  if (corners.size() != 4) return false;
  if (!u.has_edge(a, b) || !u.has_edge(c, d)) return false;
  for (Vertex v = 0; v < n; ++v) {
    std::size_t want = corners.count(v) ? 2 : 3;
    if (u.degree(v) != want) return false;
  }
  return is_biconnected(u) && is_outerplanar(u);
}

}  // namespace dsnkit
