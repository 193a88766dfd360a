#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <string>

#include "dsnkit/algorithms.hpp"
#include "dsnkit/errors.hpp"
#include "dsnkit/structure.hpp"

namespace dsnkit {
namespace {

// Component of sym(h) minus `cut` that holds `start`, ascending.
std::vector<Vertex> component_avoiding(const WeightedDigraph& h, Vertex start,
                                       const std::set<Vertex>& cut) {
  std::vector<char> seen(h.vertex_count(), 0);
  std::vector<Vertex> comp{start};
  seen[start] = 1;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    for (Vertex w : h.neighbors(comp[i])) {
      if (!seen[w] && !cut.count(w)) {
        seen[w] = 1;
        comp.push_back(w);
      }
    }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

struct Local {
  WeightedDigraph graph;
  std::vector<Vertex> ids;  // local index -> vertex of h
  Vertex at(Vertex v) const {
    return static_cast<Vertex>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  }
};

Local induced_on(const WeightedDigraph& h, std::vector<Vertex> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  return {h.induced(keep), keep};
}

LadderVerdict recognise(const WeightedDigraph& h, const std::vector<Vertex>& component, Vertex a,
                        Vertex b, Vertex c, Vertex d) {
  std::vector<Vertex> keep = component;
  keep.insert(keep.end(), {a, b, c, d});
  Local k = induced_on(h, keep);
  return is_ladder_subdivision(k.graph, k.at(a), k.at(b), k.at(c), k.at(d));
}

}  // namespace

std::vector<std::size_t> segment_markers(const DirectedPath& p, const ImportantSet& imp,
                                         const MarkedSet& marked) {
  std::set<std::size_t> all{0, p.size() - 1};
  all.insert(imp.positions.begin(), imp.positions.end());
  all.insert(marked.positions.begin(), marked.positions.end());
  return {all.begin(), all.end()};
}

std::vector<LadderSegment> detect_ladder_segments(const WeightedDigraph& h,
                                                  std::span<const Vertex> terminals,
                                                  const DirectedPath& p,
                                                  const std::vector<std::size_t>& markers) {
  std::set<Vertex> ts(terminals.begin(), terminals.end());
  std::vector<LadderSegment> out;
  for (std::size_t m = 0; m + 1 < markers.size(); ++m) {
    std::size_t i = markers[m];
    std::size_t j = markers[m + 1];
    if (j < i + 5) continue;
    LadderSegment seg;
    seg.from = i;
    seg.to = j;
    seg.boundary = {p[i + 1], p[i + 2], p[j - 2], p[j - 1]};
    // Four corner shapes: b is p_{i+2} or collapses onto a, c is p_{j-2} or collapses onto d.
    for (bool long_left : {true, false}) {
      for (bool long_right : {true, false}) {
        Vertex a = p[i + 1];
        Vertex b = long_left ? p[i + 2] : a;
        Vertex d = p[j - 1];
        Vertex c = long_right ? p[j - 2] : d;
        std::set<Vertex> corners{a, b, c, d};
        std::optional<Vertex> start;
        for (std::size_t x = i + 2; x + 1 < j && !start; ++x) {
          if (!corners.count(p[x])) start = p[x];
        }
        if (!start) continue;
        auto comp = component_avoiding(h, *start, corners);
        LadderVerdict v = recognise(h, comp, a, b, c, d);
        if (seg.reason.empty() && !v.is_ladder) seg.reason = v.reason;
        if (!v.is_ladder) continue;
        seg.a = a;
        seg.b = b;
        seg.c = c;
        seg.d = d;
        seg.component = std::move(comp);
        seg.verified = true;
        seg.match = v.match;
        seg.reason.clear();
        break;
      }
      if (seg.verified) break;
    }
    for (Vertex v : seg.component) seg.terminal_free = seg.terminal_free && !ts.count(v);
    out.push_back(std::move(seg));
  }
  return out;
}

ProtrusionResult protrusion_replace(const WeightedDigraph& h, std::span<const Vertex> terminals,
                                    const std::vector<Request>& requests,
                                    const std::vector<Vertex>& component, Vertex a, Vertex b,
                                    Vertex c, Vertex d) {
  std::set<Vertex> ts(terminals.begin(), terminals.end());
  std::set<Vertex> corners{a, b, c, d};
  std::set<Vertex> f(component.begin(), component.end());
  if (f.empty()) throw PreconditionError("empty protrusion");
  for (Vertex v : f) {
    if (ts.count(v)) throw PreconditionError("protrusion contains terminal " + std::to_string(v));
    if (corners.count(v)) throw PreconditionError("protrusion contains a corner");
    for (Vertex w : h.neighbors(v)) {
      if (!f.count(w) && !corners.count(w)) {
        throw PreconditionError("protrusion vertex " + std::to_string(v) + " has neighbour " +
                                std::to_string(w) + " outside the corners");
      }
    }
  }
  if (component_avoiding(h, *f.begin(), corners).size() != f.size()) {
    throw PreconditionError("protrusion is not connected");
  }
  LadderVerdict verdict = recognise(h, component, a, b, c, d);
  if (!verdict.is_ladder) throw PreconditionError("protrusion is not a ladder: " + verdict.reason);

  ProtrusionResult result;
  result.graph = h;
  result.old_length = verdict.match->n;
  result.new_length = verdict.match->n;
  if (verdict.match->n <= 7) return result;

  const std::size_t target = verdict.match->n % 2 == 0 ? 6 : 7;
  std::vector<std::size_t> ident;
  if (a == b) ident.push_back(1);
  if (c == d) ident.push_back(target);
  Ladder small = make_ladder(target, ident);
  const std::size_t fresh_count = small.graph.vertex_count() - corners.size();
  if (fresh_count >= f.size()) return result;  // cannot shorten by vertex count

  std::vector<Vertex> image(small.graph.vertex_count());
  Vertex next = static_cast<Vertex>(h.vertex_count());
  for (Vertex x = 0; x < small.graph.vertex_count(); ++x) {
    if (x == small.corner_a()) image[x] = a;
    else if (x == small.corner_b()) image[x] = b;
    else if (x == small.corner_c()) image[x] = c;
    else if (x == small.corner_d()) image[x] = d;
    else {
      image[x] = next++;
      result.fresh.push_back(image[x]);
    }
  }
  std::map<std::pair<Vertex, Vertex>, Weight> arcs;
  for (const Arc& arc : h.arcs()) {
    if (!f.count(arc.tail) && !f.count(arc.head)) arcs[{arc.tail, arc.head}] = arc.weight;
  }
  for (const Arc& arc : small.graph.arcs()) arcs.emplace(std::pair{image[arc.tail], image[arc.head]}, Weight(1));
  std::vector<Arc> list;
  for (auto& [key, w] : arcs) list.push_back({key.first, key.second, w});
  result.graph = WeightedDigraph(next, std::move(list));
  result.new_length = target;
  result.replaced = true;

  // Post-conditions.
  const WeightedDigraph& g = result.graph;
  std::set<Vertex> fresh(result.fresh.begin(), result.fresh.end());
  auto outside = [](const WeightedDigraph& x, const std::set<Vertex>& drop) {
    std::set<std::tuple<Vertex, Vertex, Weight>> kept;
    for (const Arc& arc : x.arcs()) {
      if (!drop.count(arc.tail) && !drop.count(arc.head)) kept.emplace(arc.tail, arc.head, arc.weight);
    }
    return kept;
  };
  if (outside(g, fresh) != outside(h, f)) throw InvariantError("replacement changed H outside the protrusion");
  std::set<Vertex> attach;
  for (Vertex v : fresh) {
    for (Vertex w : g.neighbors(v)) {
      if (!fresh.count(w)) attach.insert(w);
    }
  }
  if (attach != corners) throw InvariantError("replacement attaches outside the corners");
  if (fresh.size() > 14) throw InvariantError("replacement has more than 14 vertices");
  DsnInstance after(g, requests);
  auto all = SolutionSubgraph::all_arcs(g);
  if (!validate(after, all).valid) throw InvariantError("replacement breaks a request");
  if (!is_inclusion_minimal(after, all)) throw InvariantError("replacement is not inclusion-minimal");
  std::vector<Vertex> tv(ts.begin(), ts.end());
  if (normalize_requests(g, tv) != normalize_requests(h, tv)) {
    throw InvariantError("replacement changes terminal reachability");
  }
  auto check = recognise(g, result.fresh, a, b, c, d);
  if (!check.is_ladder || check.match->n != target) throw InvariantError("replacement is not the intended ladder");
  return result;
}

}  // namespace dsnkit
