// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dsnkit/corpus.hpp"
#include "dsnkit/errors.hpp"
#include "dsnkit/generators.hpp"
#include "dsnkit/ladder.hpp"
#include "dsnkit/reduction.hpp"
#include "dsnkit/solvers.hpp"
#include "dsnkit/structure.hpp"
#include "dsnkit/treewidth.hpp"
#include "dsnkit/undirected.hpp"
#include "oracles.hpp"

using namespace dsnkit;

namespace {

// ---- pinned tolerances and budgets -----------------------------------------

// Costs are exact rationals; any difference is a failure.
const Rational kCostTolerance = 0;
constexpr std::size_t kMinRandomInstances = 200;
constexpr std::size_t kMinOutStars = 100;
constexpr std::size_t kMinHostsPerPattern = 30;
constexpr std::size_t kMinLadderSpecs = 100;
constexpr std::size_t kMinReplacements = 20;
constexpr std::size_t kMaxCertifiedVertices = 22;
constexpr std::size_t kMaxOracleTreewidthVertices = 20;
// Engineering slack on tw(sym H) <= slack * q; not a proven constant.
constexpr std::size_t kTreewidthSlack = 4;
constexpr std::size_t kDiameterFactor = 8;
constexpr std::size_t kMaxReplacedComponent = 14;
constexpr double kBudgetOracleSeconds = 60;
constexpr double kBudgetDstSeconds = 60;
constexpr double kBudgetReductionSeconds = 600;

// ---- reporting --------------------------------------------------------------

struct Outcome {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void fail(const std::string& what) { failures.push_back(what); }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

int failed_criteria = 0;

void report(int id, const std::string& title, const Outcome& o, const std::string& detail) {
  bool pass = o.failures.empty();
  if (!pass) ++failed_criteria;
  std::printf("%s criterion %d (%s): %s\n", pass ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  for (std::size_t i = 0; i < o.failures.size() && i < 10; ++i)
    std::printf("    %s\n", o.failures[i].c_str());
  if (o.failures.size() > 10) std::printf("    ... %zu more\n", o.failures.size() - 10);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string name_of(const DsnInstance& inst, std::size_t index) {
  return inst.meta().name.empty() ? "#" + std::to_string(index) : inst.meta().name;
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f s", s);
  return buf;
}

bool costs_agree(const Weight& a, const Weight& b) {
  Rational diff = a > b ? a - b : b - a;
  return diff <= kCostTolerance;
}

// Largest eccentricity inside any connected component of sym(H), over the
// vertices that carry an arc.
std::size_t component_diameter(const UndirectedGraph& g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    std::vector<std::size_t> dist(g.vertex_count(), SIZE_MAX);
    std::queue<Vertex> bfs;
    dist[s] = 0;
    bfs.push(s);
    while (!bfs.empty()) {
      Vertex u = bfs.front();
      bfs.pop();
      best = std::max(best, dist[u]);
      for (Vertex w : g.neighbors(u))
        if (dist[w] == SIZE_MAX) {
          dist[w] = dist[u] + 1;
          bfs.push(w);
        }
    }
  }
  return best;
}

std::vector<DsnInstance> full_corpus() {
  std::vector<DsnInstance> all = random_corpus(kMinRandomInstances);
  for (DsnInstance& inst : out_star_corpus(kMinOutStars)) all.push_back(std::move(inst));
  for (DsnInstance& inst : planar_corpus()) all.push_back(std::move(inst));
  return all;
}

struct Solved {
  DsnInstance inst;
  SolutionSubgraph minimal;
};

// Optimal solutions of the full corpus, minimized.
const std::vector<Solved>& solved_corpus() {
  static const std::vector<Solved> solved = [] {
    std::vector<Solved> out;
    for (DsnInstance& inst : full_corpus()) {
      SolveResult r = solve_bnb(inst);
      if (!r.optimal() || inst.p() == 0) continue;
      SolutionSubgraph m = minimize(inst, r.solution);
      out.push_back({std::move(inst), std::move(m)});
    }
    return out;
  }();
  return solved;
}

// ---- criteria ---------------------------------------------------------------

void oracle_equivalence() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  std::vector<DsnInstance> corpus = random_corpus(kMinRandomInstances);
  std::size_t feasible = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const DsnInstance& inst = corpus[i];
    std::string name = name_of(inst, i);
    o.expect(inst.host().vertex_count() <= 8 && inst.host().arc_count() <= 20 && inst.q() <= 4,
             name + ": outside n <= 8, m <= 20, q <= 4");
    SolveResult bnb = solve_bnb(inst);
    SolveResult ex = solve_exhaustive(inst);
    ++o.checked;
    if (bnb.status != ex.status) {
      o.fail(name + ": status differs");
      continue;
    }
    if (!ex.optimal()) continue;
    ++feasible;
    if (!costs_agree(bnb.cost, ex.cost))
      o.fail(name + ": bnb " + bnb.cost.to_string() + " vs exhaustive " + ex.cost.to_string());
    o.expect(validate(inst, bnb.solution).valid, name + ": bnb solution invalid");
  }
  o.expect(o.checked >= kMinRandomInstances, "too few instances");
  double t = seconds_since(start);
  o.expect(t < kBudgetOracleSeconds, "over the " + fmt_seconds(kBudgetOracleSeconds) + " budget");
  report(1, "bnb equals exhaustive", o,
         std::to_string(o.checked) + " instances, " + std::to_string(feasible) + " feasible, " +
             std::to_string(o.failures.size()) + " mismatches, " + fmt_seconds(t));
}

void dst_equivalence() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  std::vector<DsnInstance> corpus = out_star_corpus(kMinOutStars);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const DsnInstance& inst = corpus[i];
    std::string name = name_of(inst, i);
    o.expect(inst.host().vertex_count() <= 10 && inst.q() <= 5 && is_out_star(inst),
             name + ": not an out-star with n <= 10, |T| <= 5");
    SolveResult dst = solve_dst(inst);
    SolveResult ex = solve_exhaustive(inst);
    ++o.checked;
    if (dst.status != ex.status) {
      o.fail(name + ": status differs");
      continue;
    }
    if (ex.optimal() && !costs_agree(dst.cost, ex.cost))
      o.fail(name + ": dst " + dst.cost.to_string() + " vs exhaustive " + ex.cost.to_string());
  }
  o.expect(o.checked >= kMinOutStars, "too few instances");
  double t = seconds_since(start);
  o.expect(t < kBudgetDstSeconds, "over the " + fmt_seconds(kBudgetDstSeconds) + " budget");
  report(2, "dst equals exhaustive", o,
         std::to_string(o.checked) + " out-stars, " + std::to_string(o.failures.size()) + " mismatches, " +
             fmt_seconds(t));
}

void reduction_correctness() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  std::vector<PsiCase> cases = psi_corpus(kMinHostsPerPattern, {4, 6, 8});
  std::map<std::string, std::size_t> per_pattern;
  std::size_t yes = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const PsiCase& c = cases[i];
    std::string name = c.pattern + " host " + std::to_string(i);
    o.expect(c.psi.host.vertex_count() <= 12, name + ": host above 12 vertices");
    PsiDecision d = decide_psi_via_dsn(c.psi, make_solver(Engine::kBranchAndBound));
    bool truth = solve_psi_bruteforce(c.psi).has_value();
    ++o.checked;
    ++per_pattern[c.pattern];
    Weight threshold = Weight(static_cast<std::int64_t>(2 * c.psi.k() + 3 * c.psi.pattern.edge_count()));
    o.expect(d.reduction.threshold == threshold, name + ": threshold is not 2k + 3|E|");
    if (d.yes != truth) {
      o.fail(name + ": decide says " + (d.yes ? "yes" : "no") + ", brute force disagrees");
      continue;
    }
    if (truth) {
      ++yes;
      o.expect(d.result.optimal() && d.result.cost == threshold,
               name + ": yes-instance optimum " + d.result.cost.to_string() + " != " + threshold.to_string());
      o.expect(d.embedding && is_psi_embedding(c.psi, *d.embedding), name + ": no embedding read back");
    } else {
      bool above = d.result.status == SolveStatus::kInfeasible ||
                   d.result.status == SolveStatus::kAboveCutoff ||
                   (d.result.optimal() && d.result.cost > threshold);
      o.expect(above, name + ": no-instance within threshold");
    }
  }
  for (const NamedPattern& p : pattern_corpus()) {
    std::size_t k = p.graph.vertex_count();
    if (k != 4 && k != 6 && k != 8) continue;
    o.expect(per_pattern[p.name] >= kMinHostsPerPattern, p.name + ": too few hosts");
  }
  double t = seconds_since(start);
  o.expect(t < kBudgetReductionSeconds, "over the " + fmt_seconds(kBudgetReductionSeconds) + " budget");
  report(3, "reduction agrees with brute force", o,
         std::to_string(o.checked) + " hosts over " + std::to_string(per_pattern.size()) + " patterns, " +
             std::to_string(yes) + " yes, " + std::to_string(o.failures.size()) + " failures, " +
             fmt_seconds(t));
}

// Deterministic subcubic patterns beyond the shipped corpus.
std::vector<UndirectedGraph> random_subcubic_patterns(std::size_t count) {
  std::vector<UndirectedGraph> out;
  std::mt19937_64 rng(4242);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t k = 3 + rng() % 10;
    UndirectedGraph g(k);
    for (std::size_t tries = 0; tries < 4 * k; ++tries) {
      Vertex u = static_cast<Vertex>(rng() % k), v = static_cast<Vertex>(rng() % k);
      if (u == v || g.has_edge(u, v) || g.degree(u) >= 3 || g.degree(v) >= 3) continue;
      g.add_edge(u, v);
    }
    out.push_back(std::move(g));
  }
  return out;
}

void labelling_identities() {
  Outcome o;
  std::vector<std::pair<std::string, UndirectedGraph>> patterns;
  for (const NamedPattern& p : pattern_corpus()) patterns.emplace_back(p.name, p.graph);
  std::size_t r_index = 0;
  for (UndirectedGraph& g : random_subcubic_patterns(40))
    patterns.emplace_back("subcubic " + std::to_string(r_index++), std::move(g));
  for (const auto& [name, pattern] : patterns) {
    std::vector<Vertex> id(pattern.vertex_count());
    for (Vertex v = 0; v < id.size(); ++v) id[v] = v;
    PsiInstance psi(pattern, pattern, id);
    Labelling lab = build_labelling(psi);
    ++o.checked;
    for (const std::string& v : oracle::labelling_violations(pattern, lab)) o.fail(name + ": " + v);
    std::size_t r = lab.r;
    o.expect(r * r >= pattern.vertex_count() && (r - 1) * (r - 1) < pattern.vertex_count(),
             name + ": r is not ceil(sqrt(k))");
    o.expect(lab.x_count <= r + 4, name + ": |X| above r + 4");
    o.expect(lab.y_count <= r + 3, name + ": |Y| above r + 3");
    o.expect(lab.z_count <= 6 * r - 1, name + ": |Z| above 6r - 1");
    ReductionOutput out = build_dsn(psi, lab);
    o.expect(out.pair_requests.size() == pattern.vertex_count(), name + ": |A_Y| != k");
    o.expect(out.edge_requests.size() == 2 * pattern.edge_count(), name + ": |A_Z| != 2|E|");
  }
  report(4, "labelling identities", o,
         std::to_string(o.checked) + " labellings, " + std::to_string(o.failures.size()) + " violations");
}

void important_vertex_bound() {
  Outcome o;
  std::size_t paths = 0, max_important = 0;
  for (const Solved& s : solved_corpus()) {
    ReduceResult red = reduce_length(s.inst, s.minimal);
    std::size_t q = red.report.q;
    ++o.checked;
    for (const PathReport& pr : red.report.paths) {
      ++paths;
      std::size_t important = pr.important.positions.size();
      std::size_t marked = pr.marked.positions.size();
      max_important = std::max(max_important, important);
      std::string name = s.inst.meta().name + " path " + std::to_string(pr.request.source + 1) + "->" +
                         std::to_string(pr.request.target + 1);
      o.expect(important + 2 <= 2 * q, name + ": |I_P| = " + std::to_string(important) + " > 2q - 2");
      o.expect(marked <= 4 * important, name + ": |Q_P| = " + std::to_string(marked) + " > 4|I_P|");
      o.expect(pr.important.unlabelled.empty(), name + ": important vertex without label");
    }
  }
  report(5, "important-vertex bound", o,
         std::to_string(o.checked) + " minimized solutions, " + std::to_string(paths) + " request paths, max |I_P| " +
             std::to_string(max_important) + ", " + std::to_string(o.failures.size()) + " violations");
}

void ladder_suite() {
  Outcome o;
  std::vector<LadderCase> cases = ladder_corpus(120);
  for (const LadderCase& c : cases) {
    std::ostringstream name;
    name << "n=" << c.n << " I={";
    for (std::size_t i : c.identified) name << i << ",";
    name << "}";
    Ladder l = make_ladder(c.n, c.identified);
    ++o.checked;
    if (l.graph.arc_count() == 0) continue;  // n = 1 with the rung identified
    LadderVerdict v = is_ladder_subdivision(l.graph, l.corner_a(), l.corner_b(), l.corner_c(), l.corner_d());
    o.expect(v.is_ladder, name.str() + ": not recognised (" + v.reason + ")");
    if (c.identified.empty() && c.n >= 2)
      o.expect(is_ladder_undirected(underlying_undirected(l.graph), l.corner_a(), l.corner_b(), l.corner_c(),
                                    l.corner_d()),
               name.str() + ": undirected characterisation fails");
    std::set<ArcId> arcs;
    for (ArcId id : l.first_path.arc_ids_in(l.graph)) arcs.insert(id);
    for (ArcId id : l.second_path.arc_ids_in(l.graph)) arcs.insert(id);
    o.expect(arcs.size() == l.graph.arc_count(), name.str() + ": two paths miss an arc");
    o.expect(l.first_path.source() == l.corner_a() && l.first_path.target() == l.corner_d() &&
                 l.second_path.source() == l.corner_c() && l.second_path.target() == l.corner_b(),
             name.str() + ": path endpoints are not the corners");
    std::vector<Vertex> corners = l.corners();
    std::sort(corners.begin(), corners.end());
    corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
    std::vector<Request> req;
    for (Vertex s : corners)
      for (Vertex t : corners)
        if (s != t) req.push_back({s, t});
    // G_1 is the single arc a1 -> b1; only the two corner connections apply.
    if (c.n == 1) req = {{l.corner_a(), l.corner_d()}};
    DsnInstance scss(l.graph, req);
    o.expect(is_inclusion_minimal(scss, SolutionSubgraph::all_arcs(l.graph)), name.str() + ": not minimal");
  }
  o.expect(o.checked >= kMinLadderSpecs, "too few ladder specs");
  report(6, "ladder suite", o,
         std::to_string(o.checked) + " ladder specs, " + std::to_string(o.failures.size()) + " failures");
}

struct LongLadder {
  std::string name;
  DsnInstance inst;
  Ladder ladder;
};

std::vector<LongLadder> long_ladders() {
  std::vector<LongLadder> out;
  for (std::size_t n = 8; n <= 27; ++n) out.push_back({"demo " + std::to_string(n), ladder_demo(n), make_ladder(n)});
  for (std::size_t n = 8; n <= 12; ++n)
    for (std::vector<std::size_t> ident : {std::vector<std::size_t>{1}, {n}, {1, n}})
      out.push_back({"scss " + std::to_string(n) + " ident " + std::to_string(ident.size()),
                     ladder_instance(n, ident), make_ladder(n, ident)});
  return out;
}

void protrusion_replacement() {
  Outcome o;
  std::size_t replaced = 0;
  for (const LongLadder& c : long_ladders()) {
    const DsnInstance& inst = c.inst;
    const Ladder& l = c.ladder;
    std::vector<Vertex> corners = l.corners();
    std::set<Vertex> corner_set(corners.begin(), corners.end());
    std::vector<Vertex> f;
    for (Vertex v = 0; v < l.graph.vertex_count(); ++v)
      if (!corner_set.count(v)) f.push_back(v);
    ++o.checked;
    ProtrusionResult r;
    try {
      r = protrusion_replace(inst.host(), inst.terminals(), inst.requests(), f, l.corner_a(), l.corner_b(),
                             l.corner_c(), l.corner_d());
    } catch (const std::exception& e) {
      o.fail(c.name + ": " + e.what());
      continue;
    }
    if (!r.replaced) {
      o.fail(c.name + ": not replaced");
      continue;
    }
    ++replaced;
    o.expect(r.fresh.size() <= kMaxReplacedComponent, c.name + ": |F'| = " + std::to_string(r.fresh.size()));
    std::set<Vertex> fresh(r.fresh.begin(), r.fresh.end()), old(f.begin(), f.end());
    std::set<std::pair<Vertex, Vertex>> before, after;
    for (const Arc& a : inst.host().arcs())
      if (!old.count(a.tail) && !old.count(a.head)) before.emplace(a.tail, a.head);
    for (const Arc& a : r.graph.arcs())
      if (!fresh.count(a.tail) && !fresh.count(a.head)) after.emplace(a.tail, a.head);
    o.expect(before == after, c.name + ": H' - F' differs from H - F");
    std::set<Vertex> boundary;
    for (Vertex v : r.fresh)
      for (Vertex w : r.graph.neighbors(v))
        if (!fresh.count(w)) boundary.insert(w);
    o.expect(boundary == corner_set, c.name + ": neighbourhood of F' is not the corner set");
    DsnInstance next(r.graph, inst.requests());
    auto all = SolutionSubgraph::all_arcs(r.graph);
    o.expect(validate(next, all).valid, c.name + ": replaced graph invalid");
    o.expect(is_inclusion_minimal(next, all), c.name + ": replaced graph not minimal");
    o.expect(oracle::terminal_matrix(inst.host().vertex_count(), oracle::arc_pairs(inst.host()), inst.terminals()) ==
                 oracle::terminal_matrix(r.graph.vertex_count(), oracle::arc_pairs(r.graph), inst.terminals()),
             c.name + ": terminal reachability changed");
  }
  o.expect(replaced >= kMinReplacements, "too few replacements");
  report(7, "protrusion replacement", o,
         std::to_string(replaced) + " of " + std::to_string(o.checked) + " long ladders replaced, " +
             std::to_string(o.failures.size()) + " failures");
}

void treewidth_certification() {
  Outcome o;
  std::size_t skipped = 0, max_tw = 0;
  Rational worst_ratio = 0;
  for (const DsnInstance& inst : planar_corpus()) {
    SolveResult r = solve_bnb(inst);
    if (!r.optimal()) {
      o.fail(inst.meta().name + ": no optimum");
      continue;
    }
    SolutionSubgraph m = minimize(inst, r.solution);
    WeightedDigraph h = solution_graph(inst, m);
    UndirectedGraph sym = live_underlying(h, inst.terminals());
    if (sym.vertex_count() > kMaxCertifiedVertices) {
      ++skipped;
      continue;
    }
    ++o.checked;
    const std::string& name = inst.meta().name;
    std::size_t q = inst.q();
    std::size_t tw = treewidth_exact(sym).width;
    if (sym.vertex_count() <= kMaxOracleTreewidthVertices)
      o.expect(oracle::treewidth(sym) == tw, name + ": library treewidth disagrees with oracle");
    max_tw = std::max(max_tw, tw);
    worst_ratio = std::max(worst_ratio, Rational(static_cast<std::int64_t>(tw), static_cast<std::int64_t>(q)));
    o.expect(tw <= kTreewidthSlack * q, name + ": tw " + std::to_string(tw) + " > 4q");
    TreewidthCertificate cert = certify_treewidth_bound(inst, m, inst.meta().genus);
    o.expect(!cert.treewidth_increased, name + ": pipeline increased treewidth");
    ReduceResult red = reduce_length(inst, m);
    UndirectedGraph reduced = live_underlying(red.reduced, red.terminals);
    o.expect(treewidth_exact(reduced).width <= tw, name + ": reduced graph has larger treewidth");
    Rational bound = Rational(static_cast<std::int64_t>(kDiameterFactor * q)) * red.report.path_constant;
    std::size_t diam = component_diameter(reduced);
    o.expect(Rational(static_cast<std::int64_t>(diam)) <= bound,
             name + ": diameter " + std::to_string(diam) + " > 8Cq = " + bound.to_string());
  }
  report(8, "treewidth and diameter certification", o,
         std::to_string(o.checked) + " planar solutions (" + std::to_string(skipped) + " above " +
             std::to_string(kMaxCertifiedVertices) + " vertices), max tw " + std::to_string(max_tw) +
             ", max tw/q " + worst_ratio.to_string() + ", " + std::to_string(o.failures.size()) + " failures");
}

void symmetry_and_idempotence() {
  Outcome o;
  for (const DsnInstance& inst : full_corpus()) {
    const std::string& name = inst.meta().name;
    ++o.checked;
    SolveResult fwd = solve_bnb(inst);
    DsnInstance back = reverse(inst);
    SolveResult bwd = solve_bnb(back);
    o.expect(reverse(back) == inst, name + ": reversal is not an involution");
    if (fwd.status != bwd.status) {
      o.fail(name + ": reversal changes feasibility");
      continue;
    }
    if (!fwd.optimal()) continue;
    o.expect(costs_agree(fwd.cost, bwd.cost), name + ": reversal changes the optimum");
    SolutionSubgraph m = minimize(inst, fwd.solution);
    o.expect(minimize(inst, m) == m, name + ": minimize not idempotent");
    if (inst.p() == 0) continue;
    std::vector<Request> normalized = normalize_requests(inst, m);
    DsnInstance again(inst.host(), normalized, inst.meta());
    o.expect(validate(again, m).valid && is_inclusion_minimal(again, m),
             name + ": solution not minimal for its normalized requests");
    o.expect(normalize_requests(again, m) == normalized, name + ": normalize not stable");
  }
  report(9, "symmetry and idempotence", o,
         std::to_string(o.checked) + " corpus instances, " + std::to_string(o.failures.size()) + " failures");
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<void()>>> criteria = {
      {1, oracle_equivalence},     {2, dst_equivalence},       {3, reduction_correctness},
      {4, labelling_identities},   {5, important_vertex_bound}, {6, ladder_suite},
      {7, protrusion_replacement}, {8, treewidth_certification}, {9, symmetry_and_idempotence},
  };
  for (const auto& [id, run] : criteria) {
    try {
      run();
    } catch (const std::exception& e) {
      Outcome o;
      o.fail(std::string("uncaught exception: ") + e.what());
      report(id, "aborted", o, "exception");
    }
  }
  std::printf("%d of %zu criteria failed\n", failed_criteria, criteria.size());
  return failed_criteria == 0 ? 0 : 1;
}
