#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "dsnkit/instance.hpp"
#include "dsnkit/structure.hpp"

namespace dsnkit {

inline constexpr std::size_t kExhaustiveMaxArcs = 24;

enum class SolveStatus {
  kOptimal,     // solution is a minimum-cost solution
  kInfeasible,  // no subgraph of the host satisfies the requests
  kAboveCutoff  // feasible, but every solution costs more than the cutoff
};

enum class Engine { kExhaustive, kBranchAndBound, kDreyfusWagner };

struct SolveStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
  Engine engine = Engine::kBranchAndBound;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kInfeasible;
  SolutionSubgraph solution;
  Weight cost = 0;
  SolveStats stats;

  bool optimal() const { return status == SolveStatus::kOptimal; }
};

// Every arc subset, in Gray-code order. Throws CapacityError above
// kExhaustiveMaxArcs host arcs.
SolveResult solve_exhaustive(const DsnInstance& inst);

struct BnbOptions {
  // Search only for solutions costing at most this much.
  std::optional<Weight> cutoff;
};

// Branch and bound over arc in/out decisions.
SolveResult solve_bnb(const DsnInstance& inst, const BnbOptions& options = {});

// True when all requests leave one root and there is at least one request.
bool is_out_star(const DsnInstance& inst);
// Dreyfus-Wagner over directed distances; out-star requests only, otherwise
// DomainError.
SolveResult solve_dst(const DsnInstance& inst);

std::string to_string(Engine e);
// Accepts "exhaustive", "bnb", "dst"; throws InputError otherwise.
Engine parse_engine(const std::string& name);

// Exact engines share this signature. The cutoff is a hint: engines that
// cannot use it return the plain optimum.
using Solver = std::function<SolveResult(const DsnInstance&, std::optional<Weight> cutoff)>;
Solver make_solver(Engine e);
SolveResult solve(const DsnInstance& inst, Engine e, std::optional<Weight> cutoff = std::nullopt);

struct CertifiedSolution {
  SolveResult result;
  std::optional<TreewidthCertificate> certificate;  // present when a solution exists
};

// Solve, minimise, then run the structural certificate on the optimum.
CertifiedSolution solve_with_certificate(const DsnInstance& inst, Engine e,
                                         std::optional<int> genus = std::nullopt);

}  // namespace dsnkit
