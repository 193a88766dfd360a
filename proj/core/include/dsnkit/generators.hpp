#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dsnkit/instance.hpp"
#include "dsnkit/ladder.hpp"
#include "dsnkit/reduction.hpp"

namespace dsnkit {

// All generators draw from std::mt19937_64 seeded with `seed`, mapping raw
// draws to ranges by modulo, so output is byte-stable across platforms.

struct RandomSpec {
  std::size_t vertices = 8;
  std::size_t arcs = 16;
  std::size_t terminals = 3;
  std::size_t requests = 3;
  std::uint64_t seed = 1;
  std::int64_t max_weight = 5;
  bool fractional = false;  // denominators drawn from 1..3
  bool plant = true;        // route every request before adding noise arcs
};

// Requests cover every terminal: consecutive terminals are paired first,
// remaining requests are drawn uniformly. Throws InputError if the counts
// are inconsistent.
DsnInstance random_instance(const RandomSpec& spec);

// One root and `sinks` further terminals. With `plant` an out-tree from the
// root through random vertices is laid down first.
DsnInstance random_out_star(std::size_t vertices, std::size_t arcs, std::size_t sinks, std::uint64_t seed,
                            std::int64_t max_weight = 5, bool plant = true);

enum class GridRequests { kCycle, kRandom };

// Bidirected width x height grid, declared genus 0. Terminals are drawn at
// random; with kCycle they are linked in a directed cycle, otherwise
// `requests` random pairs covering them are drawn.
DsnInstance grid_instance(std::size_t width, std::size_t height, std::size_t terminals, std::uint64_t seed,
                          GridRequests kind = GridRequests::kCycle, std::size_t requests = 0,
                          std::int64_t max_weight = 1);

// The ladder as host with every ordered pair of its distinct corners
// requested.
DsnInstance ladder_instance(std::size_t n, const std::vector<std::size_t>& identified = {});

// Terminals s and t joined through the ladder G_n: s->a, b->s, d->t, t->c,
// with requests s->t and t->s. The whole host is the unique minimal solution.
DsnInstance ladder_demo(std::size_t n);

struct PsiSpec {
  std::size_t host_vertices = 8;
  std::uint32_t edge_percent = 50;   // chance of each cross-class pattern edge
  std::uint32_t noise_percent = 10;  // chance of each other host edge
  std::uint64_t seed = 1;
  bool plant = false;  // force one embedding into the host
};

// Host for the given pattern: the first k host vertices cover every class,
// the rest get random classes.
PsiInstance random_psi(const UndirectedGraph& pattern, const PsiSpec& spec);

}  // namespace dsnkit
