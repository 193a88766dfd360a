#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dsnkit/digraph.hpp"
#include "dsnkit/undirected.hpp"

namespace dsnkit {

// The ladder G_{n,I}: rungs a_i b_i with alternating orientation and two
// rails, rungs listed in `identified` contracted to a single vertex.
struct Ladder {
  WeightedDigraph graph;
  std::size_t n = 0;
  std::vector<std::size_t> identified;  // 1-based rung positions, ascending
  std::vector<Vertex> a;                // a[i] for i in 1..n; a[0] unused
  std::vector<Vertex> b;
  // Rail path from corner_a() to corner_d() and from corner_c() to corner_b().
  DirectedPath first_path;
  DirectedPath second_path;

  Vertex corner_a() const { return a[1]; }
  Vertex corner_b() const { return b[1]; }
  Vertex corner_c() const { return n % 2 == 0 ? b[n] : a[n]; }
  Vertex corner_d() const { return n % 2 == 0 ? a[n] : b[n]; }
  std::vector<Vertex> corners() const;
};

// Unit weights. Vertex ids follow a_1, b_1, a_2, b_2, ... with identified
// rungs taking a single id. Throws InputError for n == 0 or positions
// outside 1..n.
Ladder make_ladder(std::size_t n, std::vector<std::size_t> identified = {});

struct LadderMatch {
  std::size_t n = 0;
  std::vector<std::size_t> identified;

  friend bool operator==(const LadderMatch&, const LadderMatch&) = default;
};

struct LadderVerdict {
  bool is_ladder = false;
  std::optional<LadderMatch> match;  // the ladder K subdivides, when accepted
  std::string reason;                // the failed condition, when rejected
};

// Sufficient condition for K to be a subdivision of a ladder with corners
// a, b, c, d: a == b or ab is the only way out of a and into b (same for
// c, d), a reaches d, c reaches b, and K is inclusion-minimal for those two
// connections. Vertices without arcs are ignored unless they are corners.
LadderVerdict is_ladder_subdivision(const WeightedDigraph& k, Vertex a, Vertex b, Vertex c,
                                    Vertex d);

// Undirected characterisation for identification-free ladders:
// 2-connected, outerplanar, a, b, c, d of degree two with edges ab and cd,
// every other vertex of degree three.
bool is_ladder_undirected(const UndirectedGraph& u, Vertex a, Vertex b, Vertex c, Vertex d);

}  // namespace dsnkit
