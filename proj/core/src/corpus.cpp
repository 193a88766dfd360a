#include "dsnkit/corpus.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace dsnkit {

std::vector<DsnInstance> random_corpus(std::size_t count) {
  std::vector<DsnInstance> out;
  for (std::size_t i = 0; i < count; ++i) {
    RandomSpec spec;
    spec.vertices = 4 + i % 5;
    spec.terminals = std::min<std::size_t>(2 + i % 3, spec.vertices);
    spec.arcs = std::min<std::size_t>(spec.vertices * (spec.vertices - 1), 6 + (i * 7) % 15);
    const std::size_t least = (spec.terminals + 1) / 2;
    const std::size_t most = std::min<std::size_t>(spec.terminals * (spec.terminals - 1), 5);
    spec.requests = least + i % (most - least + 1);
    spec.seed = 1000 + i;
    spec.fractional = i % 3 == 2;
    spec.plant = i % 4 != 3;
    out.push_back(random_instance(spec));
  }
  return out;
}

std::vector<DsnInstance> out_star_corpus(std::size_t count) {
  std::vector<DsnInstance> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t n = 5 + i % 6;
    std::size_t sinks = 1 + i % 4;
    std::size_t m = std::min<std::size_t>(n * (n - 1), 10 + i % 11);
    out.push_back(random_out_star(n, m, sinks, 5000 + i, 5, i % 5 != 4));
  }
  return out;
}

std::vector<DsnInstance> planar_corpus() {
  std::vector<DsnInstance> out;
  std::uint64_t seed = 7000;
  for (auto [w, h] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 3}, {3, 4}, {4, 4}}) {
    for (std::size_t q = 2; q <= 3; ++q) {
      out.push_back(grid_instance(w, h, q, seed++, GridRequests::kCycle, 0, 3));
    }
    out.push_back(grid_instance(w, h, 3, seed++, GridRequests::kRandom, 3, 3));
  }
  for (std::size_t n = 2; n <= 8; ++n) out.push_back(ladder_instance(n));
  out.push_back(ladder_instance(6, {2, 5}));
  for (std::size_t n = 4; n <= 10; ++n) out.push_back(ladder_demo(n));
  return out;
}

std::vector<PsiCase> psi_corpus(std::size_t per_pattern, const std::vector<std::size_t>& sizes) {
  std::vector<PsiCase> out;
  std::uint64_t seed = 9000;
  for (const NamedPattern& p : pattern_corpus()) {
    const std::size_t k = p.graph.vertex_count();
    if (std::find(sizes.begin(), sizes.end(), k) == sizes.end()) continue;
    for (std::size_t i = 0; i < per_pattern; ++i) {
      PsiSpec spec;
      spec.host_vertices = std::min<std::size_t>(12, k + i % (13 - k));
      spec.edge_percent = static_cast<std::uint32_t>(45 + (i * 11) % 40);
      spec.noise_percent = 10;
      spec.seed = seed++;
      spec.plant = i % 3 == 0;
      out.push_back({p.name, random_psi(p.graph, spec)});
    }
  }
  return out;
}

std::vector<LadderCase> ladder_corpus(std::size_t sampled) {
  std::vector<LadderCase> out;
  for (std::size_t n = 1; n <= 12; ++n) out.push_back({n, {}});
  std::mt19937_64 rng(424242);
  std::set<std::pair<std::size_t, std::vector<std::size_t>>> seen;
  while (seen.size() < sampled) {
    std::size_t n = 1 + rng() % 12;
    std::size_t size = 1 + rng() % 3;
    std::set<std::size_t> picks;
    for (std::size_t i = 0; i < size && picks.size() < n; ++i) picks.insert(1 + rng() % n);
    std::vector<std::size_t> ident(picks.begin(), picks.end());
    if (seen.insert({n, ident}).second) out.push_back({n, ident});
  }
  return out;
}

}  // namespace dsnkit
