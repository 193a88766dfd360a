#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dsnkit/instance.hpp"
#include "dsnkit/solvers.hpp"
#include "dsnkit/undirected.hpp"

namespace dsnkit {

// Partitioned subgraph isomorphism: does the pattern embed into the host so
// that every pattern vertex v lands in its class classes^-1(v)?
struct PsiInstance {
  UndirectedGraph host;
  UndirectedGraph pattern;
  std::vector<Vertex> classes;  // host vertex -> pattern vertex

  PsiInstance() = default;
  // Throws InputError on a class map of the wrong size, an out-of-range
  // class, or a pattern larger than the host.
  PsiInstance(UndirectedGraph host, UndirectedGraph pattern, std::vector<Vertex> classes);

  std::size_t k() const { return pattern.vertex_count(); }
  friend bool operator==(const PsiInstance&, const PsiInstance&) = default;
};

// Pattern vertex -> host vertex.
using Embedding = std::vector<Vertex>;

struct Labelling {
  std::size_t r = 0;                            // ceil(sqrt(k))
  std::vector<int> colour;                      // greedy 4-colouring, 0..3
  std::vector<std::vector<Vertex>> chunks;      // nonempty chunk per X label
  std::vector<std::size_t> alpha;               // vertex -> X label
  std::vector<std::size_t> beta;                // vertex -> Y label
  std::vector<std::pair<Vertex, Vertex>> edges; // pattern edges, ascending
  std::vector<std::size_t> gamma;               // edge index -> Z label
  std::size_t x_count = 0;
  std::size_t y_count = 0;
  std::size_t z_count = 0;
  std::vector<std::string> warnings;

  // Z label of pattern edge {u, v}; throws InputError if it is not an edge.
  std::size_t gamma_of(Vertex u, Vertex v) const;
};

struct LabellingAudit {
  bool pairs_distinct = false;      // (alpha, beta) identifies each vertex
  bool adjacent_differ = false;     // endpoints of an edge share no label
  bool edge_labels_unique = false;  // (alpha(u), gamma(e)) identifies e for u in e
  bool x_bound = false;             // |X| <= r + 4
  bool y_bound = false;             // |Y| <= r + 3
  bool z_bound = false;             // |Z| <= 6r - 1
  std::vector<std::string> failures;

  bool all() const { return failures.empty(); }
};

// Exhaustive pairwise check of the three labelling conditions and the label
// count bounds.
LabellingAudit audit_labelling(const UndirectedGraph& pattern, const Labelling& lab);

// Warnings for patterns that are not exactly 3-regular. Throws DomainError
// when some vertex has degree above 3.
std::vector<std::string> check_pattern_degrees(const UndirectedGraph& pattern);

// Greedy colourings in ascending vertex and edge order. Throws DomainError on
// a pattern of maximum degree above 3 and InvariantError if the audit fails.
Labelling build_labelling(const PsiInstance& psi);

enum class Stratum { kV, kW, kX, kY, kZ };

struct ReductionOutput {
  DsnInstance dsn;  // unit weights
  Labelling labelling;
  Weight threshold = 0;  // 2|V(H)| + 3|E(H)|

  // Vertex layout of the DSN host: V, then W, X, Y, Z.
  std::size_t host_vertices = 0;
  std::vector<std::pair<Vertex, Vertex>> host_edges;  // one per W vertex
  Vertex w_offset = 0;
  Vertex x_offset = 0;
  Vertex y_offset = 0;
  Vertex z_offset = 0;

  std::vector<ArcId> vertex_arcs;  // A_V
  std::vector<ArcId> edge_arcs;    // A_W
  std::vector<Request> pair_requests;  // A_Y
  std::vector<Request> edge_requests;  // A_Z

  Stratum stratum(Vertex v) const;
  Vertex w_vertex(std::size_t host_edge) const { return w_offset + static_cast<Vertex>(host_edge); }
  Vertex x_vertex(std::size_t label) const { return x_offset + static_cast<Vertex>(label); }
  Vertex y_vertex(std::size_t label) const { return y_offset + static_cast<Vertex>(label); }
  Vertex z_vertex(std::size_t label) const { return z_offset + static_cast<Vertex>(label); }
};

// The DSN instance over the labelling. Checks that every arc runs X->V, V->Y,
// V->W or W->Z, so X-Y paths have length 2 and X-Z paths length 3; throws
// InvariantError otherwise.
ReductionOutput build_dsn(const PsiInstance& psi, const Labelling& lab);
ReductionOutput build_dsn(const PsiInstance& psi);

struct PsiDecision {
  bool yes = false;
  ReductionOutput reduction;
  SolveResult result;
  std::optional<Embedding> embedding;  // read back from the solution on yes
};

// Solves the generated instance with the threshold as cutoff and answers yes
// iff the optimum fits the threshold.
PsiDecision decide_psi_via_dsn(const PsiInstance& psi, const Solver& solver);

inline constexpr std::size_t kPsiBruteForceMaxPattern = 10;

// Backtracking over class-respecting assignments, pattern vertices in
// ascending order. Throws CapacityError above kPsiBruteForceMaxPattern.
std::optional<Embedding> solve_psi_bruteforce(const PsiInstance& psi);

// Class-respecting, injective, and every pattern edge lands on a host edge.
bool is_psi_embedding(const PsiInstance& psi, const Embedding& phi);

// Reads the embedding off a solution within the threshold. Throws
// PreconditionError if the solution is invalid or too expensive, and
// InvariantError if the solution does not determine an embedding.
Embedding extract_embedding(const PsiInstance& psi, const ReductionOutput& out,
                            const SolutionSubgraph& sol);

// The subgraph induced by the terminals, the image of phi, and the W vertices
// of the image edges.
SolutionSubgraph embedding_to_solution(const ReductionOutput& out, const Embedding& phi,
                                       const UndirectedGraph& pattern);

struct NamedPattern {
  std::string name;
  UndirectedGraph graph;
};

// Small 3-regular patterns: k4, k33, prism, cube, wagner.
std::vector<NamedPattern> pattern_corpus();
// Throws InputError for an unknown name.
UndirectedGraph pattern_by_name(const std::string& name);

}  // namespace dsnkit
