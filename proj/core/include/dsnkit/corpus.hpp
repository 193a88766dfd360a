#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dsnkit/generators.hpp"
#include "dsnkit/instance.hpp"
#include "dsnkit/reduction.hpp"

namespace dsnkit {

// Seeded instance families shared by the acceptance suite and `dsnkit bench`.

// n in 4..8, m <= 20, q in 2..4; a quarter of them unplanted.
std::vector<DsnInstance> random_corpus(std::size_t count);
// n in 5..10, |T| in 2..5, m <= 20.
std::vector<DsnInstance> out_star_corpus(std::size_t count);
// Grids and ladder networks, all declared planar.
std::vector<DsnInstance> planar_corpus();

struct PsiCase {
  std::string pattern;
  PsiInstance psi;
};
// `per_pattern` hosts of at most 12 vertices for each pattern whose size is
// in `sizes`; every third host has a planted embedding.
std::vector<PsiCase> psi_corpus(std::size_t per_pattern, const std::vector<std::size_t>& sizes = {4, 6, 8});

struct LadderCase {
  std::size_t n = 0;
  std::vector<std::size_t> identified;
};
// Every n <= 12 with I empty, plus seeded identification sets with |I| <= 3.
std::vector<LadderCase> ladder_corpus(std::size_t sampled);

}  // namespace dsnkit
