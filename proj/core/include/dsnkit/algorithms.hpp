#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dsnkit/digraph.hpp"
#include "dsnkit/undirected.hpp"

namespace dsnkit {

// Marks every vertex reachable from `sources` by a path whose internal
// vertices avoid `blocked`. Blocked vertices can still be reached as
// endpoints; sources are always expanded. With `backward` the arcs are
// followed in reverse. `blocked` may be empty (nothing blocked).
std::vector<char> reachable_avoiding(const WeightedDigraph& g, std::span<const Vertex> sources,
                                     const std::vector<char>& blocked, bool backward = false);

// True if s reaches t by a path whose internal vertices avoid `forbidden`.
// The endpoints are exempt; s == t is trivially true.
bool reaches(const WeightedDigraph& g, Vertex s, Vertex t, std::span<const Vertex> forbidden = {});

// Fewest-arc path from s to t with internal vertices outside `blocked`;
// ties broken by the breadth-first order over ascending ids.
std::optional<DirectedPath> find_path_avoiding(const WeightedDigraph& g, Vertex s, Vertex t,
                                               const std::vector<char>& blocked);

// Minimum-weight s-t path with internal vertices outside `forbidden`. Among
// minimum-weight paths the lexicographically smallest vertex sequence wins.
std::optional<DirectedPath> shortest_path(const WeightedDigraph& g, Vertex s, Vertex t,
                                          std::span<const Vertex> forbidden = {});

// Strongly connected components in topological order of the condensation
// (sources first); each component sorted ascending.
std::vector<std::vector<Vertex>> strongly_connected_components(const WeightedDigraph& g);

// Connected components ordered by smallest member; members ascending.
std::vector<std::vector<Vertex>> connected_components(const UndirectedGraph& g);

// Largest BFS distance. Throws DomainError naming two components when g is
// disconnected.
std::size_t diameter(const UndirectedGraph& g);

bool is_connected(const UndirectedGraph& g);
// At least three vertices, connected, no cut vertex.
bool is_biconnected(const UndirectedGraph& g);
// Embeds in the plane with every vertex on the outer face.
bool is_outerplanar(const UndirectedGraph& g);

}  // namespace dsnkit
