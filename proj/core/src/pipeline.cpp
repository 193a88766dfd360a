#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "dsnkit/algorithms.hpp"
#include "dsnkit/errors.hpp"
#include "dsnkit/structure.hpp"
#include "dsnkit/treewidth.hpp"

namespace dsnkit {
namespace {

constexpr std::size_t kMaxRounds = 10000;

std::string describe(const Request& r) {
  return std::to_string(r.source) + "->" + std::to_string(r.target);
}

std::vector<PathReport> analyse(const WeightedDigraph& h, const std::vector<Vertex>& terminals,
                                const std::vector<Request>& requests) {
  std::vector<PathReport> out;
  for (const Request& r : requests) {
    auto p = shortest_path(h, r.source, r.target, terminals);
    if (!p) throw InvariantError("normalised request " + describe(r) + " has no terminal-avoiding path");
    PathReport rep;
    rep.request = r;
    rep.path = *p;
    rep.important = important_vertices(h, terminals, rep.path);
    rep.marked = marked_vertices(h, rep.path, rep.important);
    rep.markers = segment_markers(rep.path, rep.important, rep.marked);
    rep.segments = detect_ladder_segments(h, terminals, rep.path, rep.markers);
    rep.checks = check_path_lemmas(h, terminals, rep.important, rep.marked);
    out.push_back(std::move(rep));
  }
  return out;
}

// Largest distance between two terminals of one component of sym(h).
std::size_t terminal_distance(const WeightedDigraph& h, const std::vector<Vertex>& terminals) {
  std::size_t best = 0;
  for (Vertex s : terminals) {
    std::vector<std::size_t> dist(h.vertex_count(), static_cast<std::size_t>(-1));
    std::deque<Vertex> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : h.neighbors(u)) {
        if (dist[w] == static_cast<std::size_t>(-1)) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    for (Vertex t : terminals) {
      if (dist[t] != static_cast<std::size_t>(-1)) best = std::max(best, dist[t]);
    }
  }
  return best;
}

}  // namespace

ReduceResult reduce_length(const WeightedDigraph& h, const std::vector<Request>& requests) {
  DsnInstance start(h, requests);
  if (!is_inclusion_minimal(start, SolutionSubgraph::all_arcs(h))) {
    throw PreconditionError("reduce_length needs an inclusion-minimal solution");
  }
  const std::vector<Vertex> terminals = start.terminals();
  ReduceResult result;
  StructureReport& rep = result.report;
  rep.q = terminals.size();
  rep.requests = start.requests();
  rep.vertices_before = live_vertices(h, terminals).size();

  WeightedDigraph current = h;
  for (;;) {
    if (++rep.rounds > kMaxRounds) throw InvariantError("length reduction does not terminate");
    current = suppress_degree_two(current, terminals).graph;
    rep.normalized_requests = normalize_requests(current, terminals);
    rep.paths = analyse(current, terminals, rep.normalized_requests);
    bool progressed = false;
    for (const PathReport& pr : rep.paths) {
      for (const LadderSegment& seg : pr.segments) {
        if (!seg.verified || !seg.terminal_free || seg.match->n <= 7) continue;
        ProtrusionResult pr2 = protrusion_replace(current, terminals, rep.normalized_requests,
                                                  seg.component, seg.a, seg.b, seg.c, seg.d);
        if (!pr2.replaced) continue;
        Replacement r;
        r.round = rep.rounds;
        r.request = pr.request;
        r.corners = {seg.a, seg.b, seg.c, seg.d};
        r.old_length = pr2.old_length;
        r.new_length = pr2.new_length;
        r.vertices_before = live_vertices(current, terminals).size();
        r.vertices_after = live_vertices(pr2.graph, terminals).size();
        if (r.vertices_after >= r.vertices_before) {
          throw InvariantError("length reduction round did not shrink the solution");
        }
        rep.replacements.push_back(r);
        current = std::move(pr2.graph);
        progressed = true;
        break;
      }
      if (progressed) break;
    }
    if (!progressed) break;
  }

  rep.vertices_after = live_vertices(current, terminals).size();
  for (const PathReport& pr : rep.paths) {
    std::size_t denom = std::max<std::size_t>(1, pr.important.positions.size());
    Rational ratio(static_cast<std::int64_t>(pr.path.length()), static_cast<std::int64_t>(denom));
    rep.path_constant = std::max(rep.path_constant, ratio);
    for (const auto& failure : pr.checks.failures) {
      rep.counterexample_candidates.push_back(describe(pr.request) + ": " + failure);
    }
    std::set<std::size_t> genuine(pr.important.positions.begin(), pr.important.positions.end());
    genuine.insert(pr.marked.positions.begin(), pr.marked.positions.end());
    for (const LadderSegment& seg : pr.segments) {
      bool covered = genuine.count(seg.from) && genuine.count(seg.to);
      if (covered && (!seg.verified || !seg.terminal_free)) {
        rep.counterexample_candidates.push_back(
            describe(pr.request) + ": segment " + std::to_string(seg.from) + ".." +
            std::to_string(seg.to) + " is not a terminal-free ladder (" + seg.reason + ")");
      }
    }
  }
  rep.terminal_distance = terminal_distance(current, terminals);
  UndirectedGraph sym = live_underlying(current, terminals);
  if (is_connected(sym)) rep.diameter = diameter(sym);
  Rational bound = rep.path_constant * Rational(8 * static_cast<std::int64_t>(rep.q));
  rep.distance_within_bound = Rational(static_cast<std::int64_t>(rep.terminal_distance)) <= bound;
  rep.diameter_within_bound =
      rep.diameter && Rational(static_cast<std::int64_t>(*rep.diameter)) <= bound;
  result.reduced = std::move(current);
  result.terminals = terminals;
  return result;
}

ReduceResult reduce_length(const DsnInstance& inst, const SolutionSubgraph& sol) {
  return reduce_length(solution_graph(inst, sol), inst.requests());
}

TreewidthCertificate certify_treewidth_bound(const DsnInstance& inst, const SolutionSubgraph& sol,
                                             std::optional<int> genus) {
  if (!validate(inst, sol).valid) throw PreconditionError("certificate asked for an invalid solution");
  WeightedDigraph h = solution_graph(inst, sol);
  ReduceResult reduced = reduce_length(h, inst.requests());
  TreewidthCertificate cert;
  cert.genus = genus ? genus : inst.meta().genus;
  cert.q = inst.q();
  UndirectedGraph before = live_underlying(h, inst.terminals());
  UndirectedGraph after = live_underlying(reduced.reduced, inst.terminals());
  cert.original_vertices = before.vertex_count();
  cert.reduced_vertices = after.vertex_count();
  TreewidthResult tw_before = treewidth(before);
  TreewidthResult tw_after = treewidth(after);
  cert.original_treewidth = tw_before.width;
  cert.original_exact = tw_before.exact;
  cert.reduced_treewidth = tw_after.width;
  cert.reduced_exact = tw_after.exact;
  cert.treewidth_per_terminal = Rational(static_cast<std::int64_t>(cert.original_treewidth),
                                         static_cast<std::int64_t>(std::max<std::size_t>(1, cert.q)));
  cert.treewidth_increased = cert.reduced_treewidth > cert.original_treewidth;
  if (cert.reduced_vertices > 0) {
    Rational scaled = Rational(static_cast<std::int64_t>(cert.reduced_treewidth)) *
                      Rational(static_cast<std::int64_t>(cert.original_vertices),
                               static_cast<std::int64_t>(cert.reduced_vertices));
    cert.scaling_flag = Rational(static_cast<std::int64_t>(cert.original_treewidth)) > scaled;
  }
  cert.structure = std::move(reduced.report);
  return cert;
}

}  // namespace dsnkit
