#include "dsnkit/structure.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "dsnkit/algorithms.hpp"
#include "dsnkit/errors.hpp"

namespace dsnkit {
namespace {

std::string vname(Vertex v) { return std::to_string(v); }

std::vector<char> mask_of(std::size_t n, std::span<const Vertex> vs) {
  std::vector<char> m(n, 0);
  for (Vertex v : vs) {
    if (v < n) m[v] = 1;
  }
  return m;
}

std::vector<char> path_mask(const WeightedDigraph& h, const DirectedPath& p) {
  return mask_of(h.vertex_count(), p.vertices());
}

void check_terminal_path(const WeightedDigraph& h, std::span<const Vertex> terminals,
                         const DirectedPath& p) {
  if (!p.is_valid_in(h)) throw PreconditionError("P is not a simple path of the solution");
  auto is_terminal = mask_of(h.vertex_count(), terminals);
  if (!is_terminal[p.source()] || !is_terminal[p.target()]) {
    throw PreconditionError("P must start and end at terminals");
  }
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    if (is_terminal[p[i]]) throw PreconditionError("P passes through terminal " + vname(p[i]));
  }
}

}  // namespace

// ---- suppression ------------------------------------------------------------

SuppressedGraph suppress_degree_two(const WeightedDigraph& h, std::span<const Vertex> terminals) {
  const std::size_t n = h.vertex_count();
  auto is_terminal = mask_of(n, terminals);
  std::map<std::pair<Vertex, Vertex>, Weight> arcs;
  std::vector<std::set<Vertex>> outs(n), ins(n);
  for (const Arc& a : h.arcs()) {
    arcs[{a.tail, a.head}] = a.weight;
    outs[a.tail].insert(a.head);
    ins[a.head].insert(a.tail);
  }
  SuppressedGraph result;
  auto sequence = [&](Vertex u, Vertex w) {
    auto it = result.expansion.find({u, w});
    return it != result.expansion.end() ? it->second : std::vector<Vertex>{u, w};
  };
  auto neighbours = [&](Vertex v) {
    std::set<Vertex> nb(outs[v].begin(), outs[v].end());
    nb.insert(ins[v].begin(), ins[v].end());
    return nb;
  };
  auto drop = [&](Vertex u, Vertex w) {
    arcs.erase({u, w});
    outs[u].erase(w);
    ins[w].erase(u);
    result.expansion.erase({u, w});
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (is_terminal[v]) continue;
      auto nb = neighbours(v);
      if (nb.empty() || nb.size() > 2) continue;
      if (nb.size() == 1) {
        throw InconsistencyError("non-terminal " + vname(v) + " has a single neighbour " +
                                 vname(*nb.begin()) + "; the solution is not inclusion-minimal");
      }
      Vertex u = *nb.begin();
      Vertex w = *nb.rbegin();
      std::vector<std::pair<std::pair<Vertex, Vertex>, std::pair<Weight, std::vector<Vertex>>>> added;
      for (auto [x, y] : {std::pair{u, w}, std::pair{w, u}}) {
        if (arcs.count({x, v}) && arcs.count({v, y})) {
          if (arcs.count({x, y})) {
            throw InconsistencyError("suppressing " + vname(v) + " duplicates arc (" + vname(x) +
                                     "," + vname(y) + "); the solution is not inclusion-minimal");
          }
          auto seq = sequence(x, v);
          auto rest = sequence(v, y);
          seq.insert(seq.end(), rest.begin() + 1, rest.end());
          added.push_back({{x, y}, {arcs[{x, v}] + arcs[{v, y}], std::move(seq)}});
        }
      }
      for (Vertex x : std::vector<Vertex>(outs[v].begin(), outs[v].end())) drop(v, x);
      for (Vertex x : std::vector<Vertex>(ins[v].begin(), ins[v].end())) drop(x, v);
      for (auto& [key, val] : added) {
        arcs[key] = val.first;
        outs[key.first].insert(key.second);
        ins[key.second].insert(key.first);
        result.expansion[key] = std::move(val.second);
      }
      result.removed.push_back(v);
      changed = true;
      break;
    }
  }
  std::vector<Arc> out;
  for (auto& [key, w] : arcs) out.push_back({key.first, key.second, w});
  result.graph = WeightedDigraph(n, std::move(out));
  return result;
}

DirectedPath expand_path(const SuppressedGraph& s, const DirectedPath& p) {
  if (p.empty()) return p;
  std::vector<Vertex> seq{p.source()};
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    auto it = s.expansion.find({p[i], p[i + 1]});
    if (it == s.expansion.end()) {
      seq.push_back(p[i + 1]);
    } else {
      seq.insert(seq.end(), it->second.begin() + 1, it->second.end());
    }
  }
  return DirectedPath(std::move(seq));
}

// ---- important vertices -----------------------------------------------------

std::vector<Vertex> ImportantSet::vertices() const {
  std::vector<Vertex> out;
  for (std::size_t i : positions) out.push_back(path[i]);
  return out;
}

ImportantSet important_vertices(const WeightedDigraph& h, std::span<const Vertex> terminals,
                                const DirectedPath& p) {
  check_terminal_path(h, terminals, p);
  const std::size_t n = h.vertex_count();
  auto on_path = path_mask(h, p);
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t i = 0; i < p.size(); ++i) pos[p[i]] = i;

  ImportantSet imp;
  imp.path = p;
  std::set<std::size_t> important;
  std::vector<Vertex> ts(terminals.begin(), terminals.end());
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (Vertex x : ts) {
    if (on_path[x]) continue;
    Vertex src[] = {x};
    for (bool backward : {false, true}) {
      auto seen = reachable_avoiding(h, src, on_path, backward);
      std::optional<std::size_t> extreme;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (!seen[p[i]]) continue;
        important.insert(i);
        if (!extreme || (backward ? i > *extreme : i < *extreme)) extreme = i;
      }
      if (extreme) {
        imp.labels[p[*extreme]].push_back(
            {x, backward ? Side::kTowardTarget : Side::kTowardSource});
      }
    }
  }
  imp.positions.assign(important.begin(), important.end());

  auto blocked = on_path;
  for (Vertex t : ts) blocked[t] = 1;
  for (std::size_t i : imp.positions) {
    Vertex v = p[i];
    auto it = imp.labels.find(v);
    if (it == imp.labels.end()) {
      imp.unlabelled.push_back(v);
      imp.unanchored.push_back(v);
      continue;
    }
    std::sort(it->second.begin(), it->second.end());
    bool found = false;
    for (const Label& label : it->second) {
      auto path = label.side == Side::kTowardSource
                      ? find_path_avoiding(h, label.terminal, v, blocked)
                      : find_path_avoiding(h, v, label.terminal, blocked);
      if (path) {
        imp.anchor[v] = label.terminal;
        imp.anchor_path[v] = std::move(*path);
        found = true;
        break;
      }
    }
    if (!found) imp.unanchored.push_back(v);
  }
  return imp;
}

// ---- marked vertices --------------------------------------------------------

MarkedSet marked_vertices(const WeightedDigraph& h, const DirectedPath& p, const ImportantSet& imp) {
  if (!(imp.path == p)) throw PreconditionError("important set belongs to a different path");
  if (!p.is_valid_in(h)) throw PreconditionError("P is not a simple path of the solution");
  auto on_path = path_mask(h, p);
  std::vector<std::size_t> pos(h.vertex_count(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) pos[p[i]] = i;
  // jumps[x]: path indices reached from p_x by a P-avoiding path of length >= 1.
  std::vector<std::vector<std::size_t>> jumps(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    Vertex src[] = {p[x]};
    auto seen = reachable_avoiding(h, src, on_path);
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (y != x && seen[p[y]]) jumps[x].push_back(y);
    }
  }
  auto jump_path = [&](std::size_t from, std::size_t to) {
    if (from == to) return DirectedPath({p[from]});
    auto q = find_path_avoiding(h, p[from], p[to], on_path);
    if (!q) throw InvariantError("lost a P-avoiding path while marking");
    return *q;
  };
  MarkedSet out;
  std::set<std::size_t> all;
  for (std::size_t j : imp.positions) {
    MarkedQuad m;
    m.position = j;
    m.leftmost_target = j;
    for (std::size_t x = j; x < p.size(); ++x) {
      for (std::size_t y : jumps[x]) m.leftmost_target = std::min(m.leftmost_target, y);
    }
    m.leftmost_source = j;
    if (m.leftmost_target != j) {
      for (std::size_t x = j; x < p.size(); ++x) {
        const auto& js = jumps[x];
        if (std::find(js.begin(), js.end(), m.leftmost_target) != js.end()) {
          m.leftmost_source = x;
          break;
        }
      }
    }
    m.rightmost_source = j;
    for (std::size_t x = 0; x < p.size(); ++x) {
      for (std::size_t y : jumps[x]) {
        if (y <= j) m.rightmost_source = std::max(m.rightmost_source, x);
      }
    }
    m.rightmost_target = j;
    if (m.rightmost_source != j) {
      for (std::size_t y : jumps[m.rightmost_source]) {
        if (y <= j) m.rightmost_target = y;  // jumps are ascending
      }
    }
    m.left_jump = jump_path(m.leftmost_source, m.leftmost_target);
    m.right_jump = jump_path(m.rightmost_source, m.rightmost_target);
    all.insert({m.leftmost_target, m.rightmost_target, m.leftmost_source, m.rightmost_source});
    out.quads.push_back(std::move(m));
  }
  out.positions.assign(all.begin(), all.end());
  return out;
}

// ---- lemma checks -----------------------------------------------------------

std::vector<std::array<std::size_t, 3>> indegree_lemma_violations(const WeightedDigraph& h,
                                                                  std::span<const Vertex> terminals,
                                                                  const DirectedPath& p) {
  std::vector<std::array<std::size_t, 3>> bad;
  const std::size_t len = p.size();
  for (std::size_t j = 1; j + 1 < len; ++j) {
    auto in = h.in_arcs(p[j]);
    if (in.size() == 1 && h.arc(in[0]).tail == p[j - 1]) continue;
    for (std::size_t k = j + 1; k < len; ++k) {
      // Hypothesis (3): every terminal path into p_j meets {p_l : l <= k, l != j}.
      std::vector<char> fence(h.vertex_count(), 0);
      for (std::size_t l = 0; l <= k; ++l) {
        if (l != j) fence[p[l]] = 1;
      }
      std::vector<Vertex> sources;
      for (Vertex t : terminals) {
        if (!fence[t]) sources.push_back(t);
      }
      if (!sources.empty() && reachable_avoiding(h, sources, fence)[p[j]]) continue;
      Vertex skip[] = {p[j]};
      for (std::size_t i = 0; i < j; ++i) {
        if (reaches(h, p[k], p[i], skip)) bad.push_back({i, j, k});
      }
    }
  }
  return bad;
}

LemmaChecks check_path_lemmas(const WeightedDigraph& h, std::span<const Vertex> terminals,
                              const ImportantSet& imp, const MarkedSet& marked,
                              std::size_t indegree_limit) {
  LemmaChecks c;
  const DirectedPath& p = imp.path;
  auto fail = [&](bool& flag, std::string what) {
    flag = false;
    c.failures.push_back(std::move(what));
  };
  std::set<Vertex> ts(terminals.begin(), terminals.end());
  const std::size_t q = ts.size();
  if (imp.positions.size() + 2 > 2 * q) {
    fail(c.important_bound, std::to_string(imp.positions.size()) + " important vertices exceed 2q-2 = " +
                                std::to_string(2 * q - 2));
  }
  if (!imp.unlabelled.empty()) fail(c.every_important_labelled, "important vertex " + vname(imp.unlabelled[0]) + " has no label");
  std::map<Vertex, std::size_t> fibre;
  for (auto [v, x] : imp.anchor) ++fibre[x];
  for (auto [x, count] : fibre) {
    if (count > 2) fail(c.anchor_fibres, "terminal " + vname(x) + " anchors " + std::to_string(count) + " vertices");
  }
  if (!imp.unanchored.empty()) fail(c.anchor_fibres, "important vertex " + vname(imp.unanchored[0]) + " has no anchor");
  auto on_path = path_mask(h, p);
  for (auto& [v, path] : imp.anchor_path) {
    bool ok = path.is_valid_in(h) && (path.source() == v || path.target() == v);
    for (std::size_t i = 1; ok && i + 1 < path.size(); ++i) ok = !on_path[path[i]] && !ts.count(path[i]);
    if (!ok) fail(c.anchors_avoid, "anchor path of " + vname(v) + " touches P or a terminal");
  }
  std::set<std::size_t> important(imp.positions.begin(), imp.positions.end());
  for (const MarkedQuad& m : marked.quads) {
    if (!(m.leftmost_target <= m.rightmost_target && m.rightmost_target <= m.position &&
          m.position <= m.leftmost_source && m.leftmost_source <= m.rightmost_source)) {
      fail(c.marked_order, "marks around position " + std::to_string(m.position) + " are out of order");
    }
    std::size_t others = 0;
    for (std::size_t x = m.leftmost_target; x <= m.rightmost_source; ++x) {
      if (!important.count(x) && x != m.rightmost_target && x != m.leftmost_source) ++others;
    }
    if (others > 2) {
      fail(c.marked_neighbourhood, std::to_string(others) + " unmarked vertices around position " +
                                       std::to_string(m.position));
    }
  }
  if (marked.positions.size() > 4 * imp.positions.size()) {
    fail(c.marked_bound, "marked set larger than 4|I_P|");
  }
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (important.count(x)) continue;
    Vertex v = p[x];
    if (h.out_degree(v) > 2) {
      fail(c.nonimportant_out_degree, "non-important " + vname(v) + " has out-degree " + std::to_string(h.out_degree(v)));
      continue;
    }
    for (ArcId id : h.out_arcs(v)) {
      Vertex u = h.arc(id).head;
      if (on_path[u]) continue;
      Vertex src[] = {u};
      auto seen = reachable_avoiding(h, src, on_path);
      bool back = false;
      for (std::size_t y = 0; y < x && !back; ++y) back = seen[p[y]] != 0;
      if (!back) fail(c.nonimportant_out_degree, "off-path out-neighbour " + vname(u) + " of " + vname(v) + " never returns earlier");
    }
  }
  if (p.size() <= indegree_limit) {
    auto bad = indegree_lemma_violations(h, terminals, p);
    if (!bad.empty()) {
      fail(c.indegree, "in-degree lemma fails at triple (" + std::to_string(bad[0][0]) + "," +
                           std::to_string(bad[0][1]) + "," + std::to_string(bad[0][2]) + ")");
    }
  }
  return c;
}

}  // namespace dsnkit
