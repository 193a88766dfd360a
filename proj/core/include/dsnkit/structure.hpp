#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dsnkit/digraph.hpp"
#include "dsnkit/instance.hpp"
#include "dsnkit/ladder.hpp"

namespace dsnkit {

// ---- degree-two suppression ------------------------------------------------

struct SuppressedGraph {
  WeightedDigraph graph;  // same vertex slots as the input
  // For every arc created by suppression, the vertex sequence it replaces.
  std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> expansion;
  std::vector<Vertex> removed;  // suppressed vertices, in order
};

// Repeatedly removes the smallest non-terminal with exactly two neighbours u,
// w, adding uw (wu) with summed weight when uv and vw (wv and vu) existed.
// Throws InconsistencyError on a non-terminal with a single neighbour or
// when an added arc would be parallel to an existing one.
SuppressedGraph suppress_degree_two(const WeightedDigraph& h, std::span<const Vertex> terminals);

// Maps a path of the suppressed graph back to the original graph.
DirectedPath expand_path(const SuppressedGraph& s, const DirectedPath& p);

// ---- important vertices -----------------------------------------------------

enum class Side { kTowardSource, kTowardTarget };

struct Label {
  Vertex terminal = 0;
  Side side = Side::kTowardSource;

  friend auto operator<=>(const Label&, const Label&) = default;
};

struct ImportantSet {
  DirectedPath path;
  std::vector<std::size_t> positions;               // indices on the path, ascending
  std::map<Vertex, std::vector<Label>> labels;      // only important vertices appear
  std::map<Vertex, Vertex> anchor;                  // chosen terminal per important vertex
  std::map<Vertex, DirectedPath> anchor_path;       // avoids V(P) and T internally
  std::vector<Vertex> unlabelled;                   // important but no label (should stay empty)
  std::vector<Vertex> unanchored;                   // no avoiding path to a label terminal

  std::vector<Vertex> vertices() const;
};

// P must be a path of h between two terminals with no terminal inside.
// Labels come from terminals off P: (x, toward source) goes to the path
// vertex nearest the source reached from x avoiding P, (x, toward target)
// to the path vertex nearest the target reaching x avoiding P.
ImportantSet important_vertices(const WeightedDigraph& h, std::span<const Vertex> terminals,
                                const DirectedPath& p);

// ---- marked vertices --------------------------------------------------------

// Back-jumps around an important path vertex, as path indices:
// leftmost_target <= rightmost_target <= position <= leftmost_source <= rightmost_source.
struct MarkedQuad {
  std::size_t position = 0;
  std::size_t leftmost_target = 0;   // leftmost end of a P-avoiding path starting at or after position
  std::size_t rightmost_target = 0;  // end nearest position of a path from rightmost_source
  std::size_t leftmost_source = 0;   // start nearest position of a path to leftmost_target
  std::size_t rightmost_source = 0;  // rightmost start of a path ending at or before position
  DirectedPath left_jump;            // leftmost_source -> leftmost_target
  DirectedPath right_jump;           // rightmost_source -> rightmost_target
};

struct MarkedSet {
  std::vector<MarkedQuad> quads;       // one per important vertex, in path order
  std::vector<std::size_t> positions;  // union of the four marks, ascending
};

MarkedSet marked_vertices(const WeightedDigraph& h, const DirectedPath& p, const ImportantSet& imp);

// ---- lemma checks -----------------------------------------------------------

struct LemmaChecks {
  bool important_bound = true;        // |I_P| <= 2q - 2
  bool every_important_labelled = true;
  bool anchor_fibres = true;          // every terminal anchors at most two vertices
  bool anchors_avoid = true;          // anchor paths avoid V(P) and T internally
  bool marked_order = true;
  bool marked_bound = true;           // |Q_P| <= 4 |I_P|
  bool marked_neighbourhood = true;   // at most two other vertices between the outer marks
  bool nonimportant_out_degree = true;
  bool indegree = true;               // brute-force in-degree lemma on short paths
  std::vector<std::string> failures;

  bool all() const { return failures.empty(); }
};

// Runs every path-level lemma. The in-degree lemma is checked by brute force
// only for paths with at most `indegree_limit` vertices.
LemmaChecks check_path_lemmas(const WeightedDigraph& h, std::span<const Vertex> terminals,
                              const ImportantSet& imp, const MarkedSet& marked,
                              std::size_t indegree_limit = 40);

// Triples (i, j, k) satisfying the in-degree lemma's hypotheses whose middle
// vertex still has an extra in-neighbour.
std::vector<std::array<std::size_t, 3>> indegree_lemma_violations(const WeightedDigraph& h,
                                                                  std::span<const Vertex> terminals,
                                                                  const DirectedPath& p);

// ---- ladder segments and protrusion replacement ----------------------------

struct LadderSegment {
  std::size_t from = 0;  // consecutive marker indices on P, to - from >= 5
  std::size_t to = 0;
  std::vector<Vertex> boundary;  // p_{from+1}, p_{from+2}, p_{to-2}, p_{to-1}
  // Corners actually used; a == b or c == d when the shorter shape matched.
  Vertex a = 0, b = 0, c = 0, d = 0;
  std::vector<Vertex> component;  // F: component of H - corners holding p_{from+3}
  bool terminal_free = true;
  bool verified = false;          // recogniser accepted one of the corner shapes
  std::optional<LadderMatch> match;
  std::string reason;             // why every shape failed, when not verified
};

// Markers are the path endpoints plus the important and marked positions.
std::vector<std::size_t> segment_markers(const DirectedPath& p, const ImportantSet& imp,
                                         const MarkedSet& marked);

std::vector<LadderSegment> detect_ladder_segments(const WeightedDigraph& h,
                                                  std::span<const Vertex> terminals,
                                                  const DirectedPath& p,
                                                  const std::vector<std::size_t>& markers);

struct ProtrusionResult {
  WeightedDigraph graph;          // H', vertex slots extended by the fresh vertices
  std::vector<Vertex> fresh;      // F'
  bool replaced = false;          // false when the ladder was already short
  std::size_t old_length = 0;
  std::size_t new_length = 0;
};

// Replaces the ladder on F + {a, b, c, d} by a ladder of length 6 or 7 with
// the same parity and the same corner identifications. Every post-condition
// is re-checked against `requests`; failures throw InvariantError.
ProtrusionResult protrusion_replace(const WeightedDigraph& h, std::span<const Vertex> terminals,
                                    const std::vector<Request>& requests,
                                    const std::vector<Vertex>& component, Vertex a, Vertex b,
                                    Vertex c, Vertex d);

// ---- length reduction and certification ------------------------------------

struct PathReport {
  Request request;
  DirectedPath path;
  ImportantSet important;
  MarkedSet marked;
  std::vector<std::size_t> markers;
  std::vector<LadderSegment> segments;
  LemmaChecks checks;
};

struct Replacement {
  std::size_t round = 0;
  Request request;
  std::vector<Vertex> corners;  // a, b, c, d
  std::size_t old_length = 0;
  std::size_t new_length = 0;
  std::size_t vertices_before = 0;
  std::size_t vertices_after = 0;
};

struct StructureReport {
  std::size_t q = 0;
  std::vector<Request> requests;             // as given
  std::vector<Request> normalized_requests;  // final round
  std::size_t rounds = 0;
  std::vector<Replacement> replacements;
  std::vector<PathReport> paths;             // analysis of the final graph
  std::size_t vertices_before = 0;
  std::size_t vertices_after = 0;
  Rational path_constant = 0;                // max over paths of length / max(1, |I_P|)
  std::size_t terminal_distance = 0;         // largest terminal distance in sym(H')
  std::optional<std::size_t> diameter;       // sym(H'); empty when disconnected
  bool distance_within_bound = true;         // terminal_distance <= 8 C q
  bool diameter_within_bound = true;
  std::vector<std::string> counterexample_candidates;
};

struct ReduceResult {
  WeightedDigraph reduced;   // H'
  std::vector<Vertex> terminals;
  StructureReport report;
};

// Suppress, normalise, analyse every request path and shorten long ladder
// segments until none is left. `h` must be an inclusion-minimal solution of
// `requests` (PreconditionError otherwise).
ReduceResult reduce_length(const WeightedDigraph& h, const std::vector<Request>& requests);
ReduceResult reduce_length(const DsnInstance& inst, const SolutionSubgraph& sol);

struct TreewidthCertificate {
  std::optional<int> genus;
  std::size_t q = 0;
  std::size_t original_vertices = 0;
  std::size_t reduced_vertices = 0;
  std::size_t original_treewidth = 0;
  bool original_exact = false;
  std::size_t reduced_treewidth = 0;
  bool reduced_exact = false;
  Rational treewidth_per_terminal = 0;
  bool treewidth_increased = false;
  // tw(sym H) exceeds tw(sym H') scaled by the vertex shrink factor.
  bool scaling_flag = false;
  StructureReport structure;
};

TreewidthCertificate certify_treewidth_bound(const DsnInstance& inst, const SolutionSubgraph& sol,
                                             std::optional<int> genus = std::nullopt);

}  // namespace dsnkit
