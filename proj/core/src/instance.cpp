#include "dsnkit/instance.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dsnkit/algorithms.hpp"
#include "dsnkit/errors.hpp"

namespace dsnkit {
namespace {

std::string name(const Request& r) {
  return "(" + std::to_string(r.source) + "," + std::to_string(r.target) + ")";
}

bool satisfies(const WeightedDigraph& h, const Request& r) {
  return reaches(h, r.source, r.target);
}

}  // namespace

DsnInstance::DsnInstance(WeightedDigraph host, std::vector<Request> requests, InstanceMeta meta)
    : host_(std::move(host)), requests_(std::move(requests)), meta_(std::move(meta)) {
  std::sort(requests_.begin(), requests_.end());
  for (std::size_t i = 0; i < requests_.size(); ++i) {
    const Request& r = requests_[i];
    if (!host_.contains(r.source) || !host_.contains(r.target)) {
      throw InputError("request " + name(r) + " has an endpoint missing from the host");
    }
    if (r.source == r.target) throw InputError("request " + name(r) + " has equal endpoints");
    if (i > 0 && requests_[i - 1] == r) throw InputError("duplicate request " + name(r));
    terminals_.push_back(r.source);
    terminals_.push_back(r.target);
  }
  std::sort(terminals_.begin(), terminals_.end());
  terminals_.erase(std::unique(terminals_.begin(), terminals_.end()), terminals_.end());
}

bool DsnInstance::is_terminal(Vertex v) const {
  return std::binary_search(terminals_.begin(), terminals_.end(), v);
}

SolutionSubgraph::SolutionSubgraph(std::vector<ArcId> arcs) : arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
}

SolutionSubgraph SolutionSubgraph::all_arcs(const WeightedDigraph& host) {
  std::vector<ArcId> ids(host.arc_count());
  std::iota(ids.begin(), ids.end(), ArcId{0});
  return SolutionSubgraph(std::move(ids));
}

SolutionSubgraph SolutionSubgraph::from_pairs(const WeightedDigraph& host,
                                              const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<ArcId> ids;
  for (auto [u, v] : pairs) {
    auto id = host.find_arc(u, v);
    if (!id) {
      throw InputError("arc (" + std::to_string(u) + "," + std::to_string(v) + ") not in host");
    }
    ids.push_back(*id);
  }
  return SolutionSubgraph(std::move(ids));
}

bool SolutionSubgraph::contains(ArcId id) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), id);
}

WeightedDigraph solution_graph(const DsnInstance& inst, const SolutionSubgraph& sol) {
  return inst.host().with_arcs(sol.arcs());
}

DsnInstance solution_network(const DsnInstance& inst, const SolutionSubgraph& sol) {
  return DsnInstance(solution_graph(inst, sol), inst.requests(), inst.meta());
}

Verdict validate(const DsnInstance& inst, const SolutionSubgraph& sol) {
  WeightedDigraph h = solution_graph(inst, sol);
  for (const Request& r : inst.requests()) {
    if (!satisfies(h, r)) return {false, r};
  }
  return {true, std::nullopt};
}

Weight cost(const DsnInstance& inst, const SolutionSubgraph& sol) {
  Weight total = 0;
  for (ArcId id : sol.arcs()) {
    if (id >= inst.host().arc_count()) {
      throw InputError("arc id " + std::to_string(id) + " not in host");
    }
    total += inst.host().arc(id).weight;
  }
  return total;
}

bool is_inclusion_minimal(const DsnInstance& inst, const SolutionSubgraph& sol) {
  if (!validate(inst, sol).valid) throw PreconditionError("minimality asked of an invalid solution");
  const auto& ids = sol.arcs();
  for (std::size_t skip = 0; skip < ids.size(); ++skip) {
    std::vector<ArcId> rest;
    rest.reserve(ids.size() - 1);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i != skip) rest.push_back(ids[i]);
    }
    if (validate(inst, SolutionSubgraph(std::move(rest))).valid) return false;
  }
  return true;
}

SolutionSubgraph minimize(const DsnInstance& inst, const SolutionSubgraph& sol) {
  if (!validate(inst, sol).valid) throw PreconditionError("cannot minimize an invalid solution");
  std::vector<ArcId> order = sol.arcs();
  const auto& host = inst.host();
  std::stable_sort(order.begin(), order.end(), [&](ArcId a, ArcId b) {
    return host.arc(a).weight > host.arc(b).weight;
  });
  std::vector<char> keep(host.arc_count(), 0);
  for (ArcId id : sol.arcs()) keep[id] = 1;
  auto current = [&] {
    std::vector<ArcId> ids;
    for (ArcId id : sol.arcs()) {
      if (keep[id]) ids.push_back(id);
    }
    return SolutionSubgraph(std::move(ids));
  };
  for (ArcId id : order) {
    keep[id] = 0;
    if (!validate(inst, current()).valid) keep[id] = 1;
  }
  return current();
}

std::vector<Request> normalize_requests(const WeightedDigraph& h, std::span<const Vertex> terminals) {
  std::vector<Vertex> ts(terminals.begin(), terminals.end());
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<char> blocked(h.vertex_count(), 0);
  for (Vertex t : ts) {
    if (!h.contains(t)) throw InputError("unknown terminal " + std::to_string(t));
    blocked[t] = 1;
  }
  std::vector<Request> out;
  for (Vertex s : ts) {
    Vertex src[] = {s};
    auto seen = reachable_avoiding(h, src, blocked);
    for (Vertex t : ts) {
      if (t != s && seen[t]) out.push_back({s, t});
    }
  }
  return out;
}

std::vector<Request> normalize_requests(const DsnInstance& inst, const SolutionSubgraph& sol) {
  return normalize_requests(solution_graph(inst, sol), inst.terminals());
}

std::vector<Request> reverse_requests(std::vector<Request> requests) {
  for (auto& r : requests) std::swap(r.source, r.target);
  std::sort(requests.begin(), requests.end());
  return requests;
}

DsnInstance reverse(const DsnInstance& inst) {
  return DsnInstance(inst.host().reversed(), reverse_requests(inst.requests()), inst.meta());
}

SolutionSubgraph reverse_solution(const DsnInstance& inst, const SolutionSubgraph& sol) {
  WeightedDigraph flipped = inst.host().reversed();
  std::vector<ArcId> ids;
  for (ArcId id : sol.arcs()) {
    const Arc& a = inst.host().arc(id);
    ids.push_back(*flipped.find_arc(a.head, a.tail));
  }
  return SolutionSubgraph(std::move(ids));
}

}  // namespace dsnkit
