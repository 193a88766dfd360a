#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dsnkit/digraph.hpp"

namespace dsnkit {

struct Request {
  Vertex source = 0;
  Vertex target = 0;

  friend auto operator<=>(const Request&, const Request&) = default;
};

// Optional metadata carried through the text format.
struct InstanceMeta {
  std::optional<int> genus;
  std::optional<Weight> threshold;
  std::optional<std::uint64_t> seed;
  std::string name;

  friend bool operator==(const InstanceMeta&, const InstanceMeta&) = default;
};

// Host digraph plus a simple request digraph; terminals are exactly the
// request endpoints, so no terminal is isolated in the requests.
class DsnInstance {
 public:
  DsnInstance() = default;
  // Throws InputError on out-of-range endpoints, s == t or repeated requests.
  DsnInstance(WeightedDigraph host, std::vector<Request> requests, InstanceMeta meta = {});

  const WeightedDigraph& host() const { return host_; }
  const std::vector<Request>& requests() const { return requests_; }
  const std::vector<Vertex>& terminals() const { return terminals_; }
  const InstanceMeta& meta() const { return meta_; }
  InstanceMeta& meta() { return meta_; }
  bool is_terminal(Vertex v) const;
  std::size_t q() const { return terminals_.size(); }
  std::size_t p() const { return requests_.size(); }

  friend bool operator==(const DsnInstance&, const DsnInstance&) = default;

 private:
  WeightedDigraph host_;
  std::vector<Request> requests_;
  std::vector<Vertex> terminals_;
  InstanceMeta meta_;
};

// A set of host arc ids, kept sorted and unique.
class SolutionSubgraph {
 public:
  SolutionSubgraph() = default;
  explicit SolutionSubgraph(std::vector<ArcId> arcs);
  static SolutionSubgraph all_arcs(const WeightedDigraph& host);
  // Throws InputError if some pair is not an arc of the host.
  static SolutionSubgraph from_pairs(const WeightedDigraph& host,
                                     const std::vector<std::pair<Vertex, Vertex>>& pairs);

  const std::vector<ArcId>& arcs() const { return arcs_; }
  std::size_t size() const { return arcs_.size(); }
  bool contains(ArcId id) const;

  friend bool operator==(const SolutionSubgraph&, const SolutionSubgraph&) = default;

 private:
  std::vector<ArcId> arcs_;
};

struct Verdict {
  bool valid = false;
  // First violated request in lexicographic order.
  std::optional<Request> violated;
};

// The solution as a digraph on the host's vertex slots.
WeightedDigraph solution_graph(const DsnInstance& inst, const SolutionSubgraph& sol);
// The solution viewed as an instance whose host is the solution itself.
DsnInstance solution_network(const DsnInstance& inst, const SolutionSubgraph& sol);

Verdict validate(const DsnInstance& inst, const SolutionSubgraph& sol);
Weight cost(const DsnInstance& inst, const SolutionSubgraph& sol);
// Throws PreconditionError if the solution is invalid.
bool is_inclusion_minimal(const DsnInstance& inst, const SolutionSubgraph& sol);
// Drops arcs by descending weight, ties by ascending arc id, while the
// solution stays valid. One pass suffices because validity is monotone.
SolutionSubgraph minimize(const DsnInstance& inst, const SolutionSubgraph& sol);

// Every ordered pair st of distinct terminals such that s reaches t in h
// avoiding the other terminals.
std::vector<Request> normalize_requests(const WeightedDigraph& h, std::span<const Vertex> terminals);
std::vector<Request> normalize_requests(const DsnInstance& inst, const SolutionSubgraph& sol);

DsnInstance reverse(const DsnInstance& inst);
// The same arcs flipped, as arc ids of reverse(inst).host().
SolutionSubgraph reverse_solution(const DsnInstance& inst, const SolutionSubgraph& sol);
std::vector<Request> reverse_requests(std::vector<Request> requests);

}  // namespace dsnkit
