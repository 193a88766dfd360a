#include "dsnkit/solvers.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <queue>
#include <set>

#include "dsnkit/algorithms.hpp"
#include "dsnkit/errors.hpp"

namespace dsnkit {
namespace {

using Cost = std::int64_t;
constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;

// Host weights scaled to integers by the lcm of their denominators.
struct Scaled {
  std::vector<Cost> w;
  std::int64_t scale = 1;
  Weight back(Cost c) const { return Rational(c, scale); }
};

Scaled scale_weights(const WeightedDigraph& g) {
  Scaled s;
  for (const Arc& a : g.arcs()) {
    std::int64_t den = a.weight.den();
    std::int64_t l = std::lcm(s.scale, den);
    if (l <= 0 || l / den != s.scale / std::gcd(s.scale, den)) throw CapacityError("weight denominators overflow");
    s.scale = l;
  }
  const Cost per_arc_cap = kInf / static_cast<Cost>(std::max<std::size_t>(1, g.arc_count()));
  for (const Arc& a : g.arcs()) {
    Cost v = 0;
    if (__builtin_mul_overflow(a.weight.num(), s.scale / a.weight.den(), &v) || v > per_arc_cap) {
      throw CapacityError("scaled weights overflow");
    }
    s.w.push_back(v);
  }
  return s;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

SolveResult infeasible(Engine e) {
  SolveResult r;
  r.status = SolveStatus::kInfeasible;
  r.stats.engine = e;
  return r;
}

bool feasible(const DsnInstance& inst) {
  return validate(inst, SolutionSubgraph::all_arcs(inst.host())).valid;
}

// ---- branch and bound -------------------------------------------------------

class BranchAndBound {
 public:
  BranchAndBound(const DsnInstance& inst, Cost cutoff)
      : inst_(inst), g_(inst.host()), scaled_(scale_weights(g_)), best_(cutoff) {
    const std::size_t m = g_.arc_count();
    state_.assign(m, kUndecided);
    // Arcs on no source-to-target walk of any request never help.
    std::vector<char> useful(m, 0);
    for (const Request& r : inst.requests()) {
      Vertex s[] = {r.source};
      Vertex t[] = {r.target};
      auto from = reachable_avoiding(g_, s, {});
      auto to = reachable_avoiding(g_, t, {}, true);
      for (ArcId id = 0; id < m; ++id) {
        if (from[g_.arc(id).tail] && to[g_.arc(id).head]) useful[id] = 1;
      }
    }
    for (ArcId id = 0; id < m; ++id) {
      if (!useful[id]) state_[id] = kOut;
    }
    const std::size_t q = inst.requests().size();
    share_.assign(q * m, 0.0);
    for (std::size_t k = 0; k < q; ++k) {
      for (ArcId id = 0; id < m; ++id) {
        share_[k * m + id] = static_cast<double>(scaled_.w[id]) / static_cast<double>(q);
      }
    }
  }

  void run() { search(0); }
  std::uint64_t nodes() const { return nodes_; }
  bool found() const { return !best_arcs_.empty() || (found_empty_); }
  Cost best() const { return best_; }
  const std::vector<ArcId>& best_arcs() const { return best_arcs_; }

 private:
  static constexpr char kUndecided = 0, kIn = 1, kOut = 2;
  static constexpr int kRootIterations = 200;
  static constexpr int kNodeIterations = 30;

  bool satisfied(const Request& r) const {
    std::vector<char> seen(g_.vertex_count(), 0);
    std::vector<Vertex> stack{r.source};
    seen[r.source] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      if (u == r.target) return true;
      for (ArcId id : g_.out_arcs(u)) {
        Vertex v = g_.arc(id).head;
        if (state_[id] == kIn && !seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    return false;
  }

  // Cheapest path where chosen arcs are free; fills `path_arcs` on success.
  Cost cheapest(const Request& r, std::vector<ArcId>* path_arcs) const {
    const std::size_t n = g_.vertex_count();
    std::vector<Cost> dist(n, kInf);
    std::vector<ArcId> via(n, static_cast<ArcId>(-1));
    using Item = std::pair<Cost, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[r.source] = 0;
    heap.emplace(0, r.source);
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d != dist[u]) continue;
      if (u == r.target) break;
      for (ArcId id : g_.out_arcs(u)) {
        if (state_[id] == kOut) continue;
        Vertex v = g_.arc(id).head;
        Cost nd = d + (state_[id] == kIn ? 0 : scaled_.w[id]);
        if (nd < dist[v]) {
          dist[v] = nd;
          via[v] = id;
          heap.emplace(nd, v);
        }
      }
    }
    if (dist[r.target] >= kInf) return kInf;
    if (path_arcs) {
      path_arcs->clear();
      for (Vertex v = r.target; v != r.source; v = g_.arc(via[v]).tail) path_arcs->push_back(via[v]);
      std::reverse(path_arcs->begin(), path_arcs->end());
    }
    return dist[r.target];
  }

  struct Dual {
    Cost bound = 0;
    std::vector<Cost> residual;  // reduced arc costs left by the ascent
  };

  // Dual ascent on the cut formulation: repeatedly take the set of vertices
  // joined to one end of an open request by zero-residual arcs and raise the
  // cut around it by its cheapest crossing arc. Backward cuts grow from the
  // target, which keeps requests sharing a source from sharing every cut.
  Dual dual_ascent(const std::vector<const Request*>& open, bool backward) const {
    const std::size_t n = g_.vertex_count();
    Dual dual;
    dual.residual.resize(g_.arc_count());
    for (ArcId id = 0; id < g_.arc_count(); ++id) {
      dual.residual[id] = state_[id] == kIn ? 0 : scaled_.w[id];
    }
    std::vector<Cost>& residual = dual.residual;
    auto edges = [&](Vertex u) { return backward ? g_.in_arcs(u) : g_.out_arcs(u); };
    auto far_end = [&](ArcId id) { return backward ? g_.arc(id).tail : g_.arc(id).head; };
    std::vector<char> active(open.size(), 1);
    std::size_t remaining = open.size();
    std::vector<char> inside(n);
    std::vector<Vertex> members;
    while (remaining > 0) {
      for (std::size_t k = 0; k < open.size(); ++k) {
        if (!active[k]) continue;
        const Vertex from = backward ? open[k]->target : open[k]->source;
        const Vertex goal = backward ? open[k]->source : open[k]->target;
        std::fill(inside.begin(), inside.end(), 0);
        members.assign(1, from);
        inside[from] = 1;
        for (std::size_t i = 0; i < members.size(); ++i) {
          for (ArcId id : edges(members[i])) {
            Vertex v = far_end(id);
            if (state_[id] != kOut && residual[id] == 0 && !inside[v]) {
              inside[v] = 1;
              members.push_back(v);
            }
          }
        }
        if (inside[goal]) {
          active[k] = 0;
          --remaining;
          continue;
        }
        Cost step = kInf;
        for (Vertex u : members) {
          for (ArcId id : edges(u)) {
            if (state_[id] != kOut && !inside[far_end(id)]) step = std::min(step, residual[id]);
          }
        }
        if (step >= kInf) {
          dual.bound = kInf;
          return dual;
        }
        dual.bound += step;
        for (Vertex u : members) {
          for (ArcId id : edges(u)) {
            if (state_[id] != kOut && !inside[far_end(id)]) residual[id] -= step;
          }
        }
      }
    }
    return dual;
  }

  // Lagrangian bound: every undecided arc's cost is split among the
  // requests, and each request pays its shortest path under its share. The
  // shares are tuned by subgradient steps and carried over between nodes.
  struct Lagrangian {
    double bound = 0;
    std::vector<double> slack;  // unassigned cost per arc at the best split
  };

  double cap(ArcId id) const {
    return state_[id] == kUndecided ? static_cast<double>(scaled_.w[id]) : 0.0;
  }

  // Projects one arc's shares onto {share >= 0, sum <= cap}.
  void project(ArcId id) {
    const std::size_t q = inst_.requests().size();
    const std::size_t m = g_.arc_count();
    const double c = cap(id);
    double sum = 0;
    for (std::size_t k = 0; k < q; ++k) {
      double& x = share_[k * m + id];
      x = std::max(x, 0.0);
      sum += x;
    }
    if (sum <= c) return;
    std::vector<double> sorted(q);
    for (std::size_t k = 0; k < q; ++k) sorted[k] = share_[k * m + id];
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double prefix = 0, shift = 0;
    for (std::size_t k = 0; k < q; ++k) {
      prefix += sorted[k];
      double t = (prefix - c) / static_cast<double>(k + 1);
      if (k + 1 == q || sorted[k + 1] <= t) {
        shift = t;
        break;
      }
    }
    for (std::size_t k = 0; k < q; ++k) {
      double& x = share_[k * m + id];
      x = std::max(x - shift, 0.0);
    }
  }

  double shortest_share(std::size_t k, std::vector<ArcId>* path) const {
    const Request& r = inst_.requests()[k];
    const std::size_t n = g_.vertex_count();
    const std::size_t m = g_.arc_count();
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<ArcId> via(n, static_cast<ArcId>(-1));
    using Item = std::pair<double, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[r.source] = 0;
    heap.emplace(0.0, r.source);
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d != dist[u]) continue;
      if (u == r.target) break;
      for (ArcId id : g_.out_arcs(u)) {
        if (state_[id] == kOut) continue;
        Vertex v = g_.arc(id).head;
        double nd = d + share_[k * m + id];
        if (nd < dist[v]) {
          dist[v] = nd;
          via[v] = id;
          heap.emplace(nd, v);
        }
      }
    }
    path->clear();
    if (dist[r.target] == std::numeric_limits<double>::infinity()) return dist[r.target];
    for (Vertex v = r.target; v != r.source; v = g_.arc(via[v]).tail) path->push_back(via[v]);
    return dist[r.target];
  }

  // Stops early once `paid + bound` exceeds `limit`.
  Lagrangian lagrangian(Cost paid, Cost limit, int iterations) {
    const std::size_t q = inst_.requests().size();
    const std::size_t m = g_.arc_count();
    for (ArcId id = 0; id < m; ++id) project(id);
    Lagrangian best;
    best.bound = -1;
    std::vector<std::vector<ArcId>> paths(q);
    const double target = static_cast<double>(limit - paid) + 1.0;
    double scale = 1.0;
    int stalled = 0;
    for (int it = 0; it < iterations; ++it) {
      double bound = 0;
      std::size_t length = 0;
      for (std::size_t k = 0; k < q; ++k) {
        double d = shortest_share(k, &paths[k]);
        if (d == std::numeric_limits<double>::infinity()) {
          best.bound = d;
          return best;
        }
        bound += d;
        length += paths[k].size();
      }
      if (bound > best.bound + 1e-9) {
        best.bound = bound;
        best.slack.assign(m, 0.0);
        for (ArcId id = 0; id < m; ++id) {
          double sum = 0;
          for (std::size_t k = 0; k < q; ++k) sum += share_[k * m + id];
          best.slack[id] = std::max(cap(id) - sum, 0.0);
        }
        stalled = 0;
      } else if (++stalled >= 5) {
        scale /= 2;
        stalled = 0;
      }
      if (bound - slop(bound) > static_cast<double>(limit - paid) || length == 0) break;
      const double step = scale * (target - bound) / static_cast<double>(length);
      if (step <= 1e-9) break;
      std::vector<char> touched(m, 0);
      for (std::size_t k = 0; k < q; ++k) {
        for (ArcId id : paths[k]) {
          share_[k * m + id] += step;
          touched[id] = 1;
        }
      }
      for (ArcId id = 0; id < m; ++id) {
        if (touched[id]) project(id);
      }
    }
    return best;
  }

  // Largest integer cost a floating bound certifies.
  static Cost certified(double bound) {
    return static_cast<Cost>(std::ceil(bound - slop(bound)));
  }
  static double slop(double value) { return 1e-7 * std::max(1.0, std::abs(value)); }

  void search(Cost paid) {
    ++nodes_;
    std::vector<const Request*> open;
    for (const Request& r : inst_.requests()) {
      if (!satisfied(r)) open.push_back(&r);
    }
    if (open.empty()) {
      if (paid < best_ || (paid == best_ && !found())) {
        best_ = paid;
        best_arcs_.clear();
        for (ArcId id = 0; id < state_.size(); ++id) {
          if (state_[id] == kIn) best_arcs_.push_back(id);
        }
        found_empty_ = best_arcs_.empty();
      }
      return;
    }
    Cost widest = 0;
    std::vector<ArcId> branch_path;
    for (const Request* r : open) {
      std::vector<ArcId> arcs;
      Cost c = cheapest(*r, branch_path.empty() ? &arcs : nullptr);
      if (c >= kInf) return;
      widest = std::max(widest, c);
      if (branch_path.empty()) branch_path = std::move(arcs);
    }
    if (!admissible(paid + widest)) return;
    Dual forward = dual_ascent(open, false);
    Dual backward = dual_ascent(open, true);
    const Dual& dual = backward.bound >= forward.bound ? backward : forward;
    if (dual.bound >= kInf || !admissible(paid + dual.bound)) return;

    const Cost limit = found() ? best_ - 1 : best_;
    Lagrangian lag = lagrangian(paid, limit, nodes_ == 1 ? kRootIterations : kNodeIterations);
    if (lag.bound == std::numeric_limits<double>::infinity()) return;
    if (paid + certified(lag.bound) > limit) return;

    // Reduced-cost fixing: an arc whose reduced cost alone pushes the bound
    // past the limit cannot be in any improving completion.
    std::vector<ArcId> fixed;
    for (ArcId id = 0; id < state_.size(); ++id) {
      if (state_[id] != kUndecided) continue;
      const bool by_dual = paid + dual.bound + dual.residual[id] > limit;
      const bool by_lag = !lag.slack.empty() && paid + certified(lag.bound + lag.slack[id]) > limit;
      if (by_dual || by_lag) {
        state_[id] = kOut;
        fixed.push_back(id);
      }
    }
    struct Restore {
      std::vector<char>& state;
      const std::vector<ArcId>& ids;
      ~Restore() {
        for (ArcId id : ids) state[id] = kUndecided;
      }
    } restore{state_, fixed};
    if (!fixed.empty()) {
      for (const Request* r : open) {
        if (cheapest(*r, nullptr) >= kInf) return;
      }
      std::vector<ArcId> arcs;
      cheapest(*open.front(), &arcs);
      branch_path = std::move(arcs);
    }

    ArcId pick = static_cast<ArcId>(-1);
    for (ArcId id : branch_path) {
      if (state_[id] == kUndecided) {
        pick = id;
        break;
      }
    }
    if (pick == static_cast<ArcId>(-1)) throw InvariantError("branching found no undecided arc");
    state_[pick] = kIn;
    search(paid + scaled_.w[pick]);
    state_[pick] = kOut;
    search(paid);
    state_[pick] = kUndecided;
  }

  // A node can still produce a solution at least as good as the incumbent
  // (or within the cutoff when nothing has been found yet).
  bool admissible(Cost lower) const { return found() ? lower < best_ : lower <= best_; }

  const DsnInstance& inst_;
  const WeightedDigraph& g_;
  Scaled scaled_;
  std::vector<char> state_;
  Cost best_;
  std::vector<ArcId> best_arcs_;
  bool found_empty_ = false;
  std::uint64_t nodes_ = 0;
  std::vector<double> share_;  // request-major, one entry per (request, arc)
};

}  // namespace

SolveResult solve_exhaustive(const DsnInstance& inst) {
  Timer timer;
  const WeightedDigraph& g = inst.host();
  const std::size_t m = g.arc_count();
  if (m > kExhaustiveMaxArcs) {
    throw CapacityError("exhaustive search limited to " + std::to_string(kExhaustiveMaxArcs) +
                        " arcs, got " + std::to_string(m));
  }
  if (!feasible(inst)) {
    SolveResult r = infeasible(Engine::kExhaustive);
    r.stats.seconds = timer.seconds();
    return r;
  }
  std::vector<Vertex> live = live_vertices(g, inst.terminals());
  if (live.size() > 64) throw CapacityError("exhaustive search limited to 64 live vertices");
  std::vector<std::size_t> index(g.vertex_count(), 0);
  for (std::size_t i = 0; i < live.size(); ++i) index[live[i]] = i;
  Scaled scaled = scale_weights(g);
  std::vector<std::uint64_t> out(live.size(), 0);
  std::vector<std::pair<std::size_t, std::uint64_t>> reqs;
  for (const Request& r : inst.requests()) {
    reqs.emplace_back(index[r.source], std::uint64_t{1} << index[r.target]);
  }
  auto all_satisfied = [&] {
    for (auto [s, goal] : reqs) {
      std::uint64_t reach = std::uint64_t{1} << s;
      for (;;) {
        std::uint64_t next = reach;
        for (std::uint64_t b = reach; b != 0; b &= b - 1) next |= out[static_cast<std::size_t>(std::countr_zero(b))];
        if (next & goal) break;
        if (next == reach) return false;
        reach = next;
      }
    }
    return true;
  };
  std::uint64_t nodes = 1;
  std::uint64_t best_mask = 0;
  Cost best = kInf;
  if (all_satisfied()) best = 0;
  std::uint64_t gray = 0;
  Cost paid = 0;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t i = 1; i < total; ++i) {
    unsigned bit = static_cast<unsigned>(std::countr_zero(i));
    gray ^= std::uint64_t{1} << bit;
    const Arc& a = g.arc(bit);
    out[index[a.tail]] ^= std::uint64_t{1} << index[a.head];
    paid += (gray >> bit & 1) ? scaled.w[bit] : -scaled.w[bit];
    ++nodes;
    if (paid < best && all_satisfied()) {
      best = paid;
      best_mask = gray;
    }
  }
  SolveResult r;
  r.status = SolveStatus::kOptimal;
  std::vector<ArcId> ids;
  for (ArcId id = 0; id < m; ++id) {
    if (best_mask >> id & 1) ids.push_back(id);
  }
  r.solution = SolutionSubgraph(std::move(ids));
  r.cost = scaled.back(best);
  r.stats = {nodes, timer.seconds(), Engine::kExhaustive};
  return r;
}

SolveResult solve_bnb(const DsnInstance& inst, const BnbOptions& options) {
  Timer timer;
  if (!feasible(inst)) {
    SolveResult r = infeasible(Engine::kBranchAndBound);
    r.stats.seconds = timer.seconds();
    return r;
  }
  Scaled scaled = scale_weights(inst.host());
  Cost cutoff = kInf;
  if (options.cutoff) {
    Rational scaled_cut = *options.cutoff * Rational(scaled.scale);
    // Largest integer not above the cutoff.
    std::int64_t q = scaled_cut.num() / scaled_cut.den();
    if (scaled_cut.num() < 0 && scaled_cut.num() % scaled_cut.den() != 0) --q;
    cutoff = q;
  }
  BranchAndBound bb(inst, cutoff);
  bb.run();
  SolveResult r;
  r.stats = {bb.nodes(), timer.seconds(), Engine::kBranchAndBound};
  if (!bb.found()) {
    r.status = SolveStatus::kAboveCutoff;
    return r;
  }
  r.status = SolveStatus::kOptimal;
  r.solution = SolutionSubgraph(bb.best_arcs());
  r.cost = scaled.back(bb.best());
  return r;
}

bool is_out_star(const DsnInstance& inst) {
  if (inst.requests().empty()) return false;
  Vertex root = inst.requests().front().source;
  for (const Request& r : inst.requests()) {
    if (r.source != root) return false;
  }
  return true;
}

SolveResult solve_dst(const DsnInstance& inst) {
  Timer timer;
  if (!is_out_star(inst)) throw DomainError("Dreyfus-Wagner needs requests forming an out-star from one root");
  const WeightedDigraph& g = inst.host();
  const std::size_t n = g.vertex_count();
  const Vertex root = inst.requests().front().source;
  std::vector<Vertex> sinks;
  for (const Request& r : inst.requests()) sinks.push_back(r.target);
  const std::size_t k = sinks.size();
  if (k > 20) throw CapacityError("Dreyfus-Wagner limited to 20 sinks");
  Scaled scaled = scale_weights(g);

  // All-pairs distances with next-hop arcs for reconstruction.
  std::vector<std::vector<Cost>> dist(n, std::vector<Cost>(n, kInf));
  std::vector<std::vector<ArcId>> first(n, std::vector<ArcId>(n, static_cast<ArcId>(-1)));
  for (Vertex v = 0; v < n; ++v) dist[v][v] = 0;
  for (ArcId id = 0; id < g.arc_count(); ++id) {
    const Arc& a = g.arc(id);
    if (scaled.w[id] < dist[a.tail][a.head]) {
      dist[a.tail][a.head] = scaled.w[id];
      first[a.tail][a.head] = id;
    }
  }
  for (Vertex m = 0; m < n; ++m) {
    for (Vertex u = 0; u < n; ++u) {
      if (dist[u][m] >= kInf) continue;
      for (Vertex v = 0; v < n; ++v) {
        if (dist[m][v] >= kInf) continue;
        if (dist[u][m] + dist[m][v] < dist[u][v]) {
          dist[u][v] = dist[u][m] + dist[m][v];
          first[u][v] = first[u][m];
        }
      }
    }
  }
  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<std::vector<Cost>> dp(full + 1, std::vector<Cost>(n, kInf));
  std::vector<std::vector<Cost>> merged(full + 1, std::vector<Cost>(n, kInf));
  std::vector<std::vector<std::size_t>> split(full + 1, std::vector<std::size_t>(n, 0));
  std::vector<std::vector<Vertex>> hub(full + 1, std::vector<Vertex>(n, 0));
  std::uint64_t nodes = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex v = 0; v < n; ++v) {
      dp[std::size_t{1} << i][v] = dist[v][sinks[i]];
      hub[std::size_t{1} << i][v] = sinks[i];
    }
  }
  for (std::size_t s = 1; s <= full; ++s) {
    if (std::popcount(s) < 2) continue;
    for (Vertex u = 0; u < n; ++u) {
      for (std::size_t sub = (s - 1) & s; sub > 0; sub = (sub - 1) & s) {
        if (sub < (s ^ sub)) continue;  // each unordered split once
        ++nodes;
        Cost c = dp[sub][u] + dp[s ^ sub][u];
        if (dp[sub][u] < kInf && dp[s ^ sub][u] < kInf && c < merged[s][u]) {
          merged[s][u] = c;
          split[s][u] = sub;
        }
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex u = 0; u < n; ++u) {
        if (dist[v][u] >= kInf || merged[s][u] >= kInf) continue;
        Cost c = dist[v][u] + merged[s][u];
        if (c < dp[s][v]) {
          dp[s][v] = c;
          hub[s][v] = u;
        }
      }
    }
  }
  if (dp[full][root] >= kInf) {
    SolveResult r = infeasible(Engine::kDreyfusWagner);
    r.stats.seconds = timer.seconds();
    return r;
  }
  std::set<ArcId> arcs;
  auto add_path = [&](Vertex from, Vertex to) {
    while (from != to) {
      ArcId id = first[from][to];
      arcs.insert(id);
      from = g.arc(id).head;
    }
  };
  std::vector<std::pair<std::size_t, Vertex>> todo{{full, root}};
  while (!todo.empty()) {
    auto [s, v] = todo.back();
    todo.pop_back();
    Vertex u = hub[s][v];
    add_path(v, u);
    if (std::popcount(s) >= 2) {
      todo.emplace_back(split[s][u], u);
      todo.emplace_back(s ^ split[s][u], u);
    }
  }
  SolveResult r;
  r.status = SolveStatus::kOptimal;
  r.solution = minimize(inst, SolutionSubgraph(std::vector<ArcId>(arcs.begin(), arcs.end())));
  r.cost = cost(inst, r.solution);
  if (r.cost != scaled.back(dp[full][root])) throw InvariantError("Dreyfus-Wagner reconstruction cost mismatch");
  r.stats = {nodes, timer.seconds(), Engine::kDreyfusWagner};
  return r;
}

std::string to_string(Engine e) {
  switch (e) {
    case Engine::kExhaustive: return "exhaustive";
    case Engine::kBranchAndBound: return "bnb";
    case Engine::kDreyfusWagner: return "dst";
  }
  return "?";
}

Engine parse_engine(const std::string& name) {
  if (name == "exhaustive") return Engine::kExhaustive;
  if (name == "bnb") return Engine::kBranchAndBound;
  if (name == "dst") return Engine::kDreyfusWagner;
  throw InputError("unknown engine '" + name + "' (expected exhaustive, bnb or dst)");
}

Solver make_solver(Engine e) {
  return [e](const DsnInstance& inst, std::optional<Weight> cutoff) { return solve(inst, e, cutoff); };
}

SolveResult solve(const DsnInstance& inst, Engine e, std::optional<Weight> cutoff) {
  switch (e) {
    case Engine::kExhaustive: return solve_exhaustive(inst);
    case Engine::kBranchAndBound: return solve_bnb(inst, {cutoff});
    case Engine::kDreyfusWagner: return solve_dst(inst);
  }
  throw InputError("unknown engine");
}

CertifiedSolution solve_with_certificate(const DsnInstance& inst, Engine e, std::optional<int> genus) {
  CertifiedSolution out;
  out.result = solve(inst, e);
  if (!out.result.optimal()) return out;
  out.result.solution = minimize(inst, out.result.solution);
  out.certificate = certify_treewidth_bound(inst, out.result.solution, genus);
  return out;
}

}  // namespace dsnkit
