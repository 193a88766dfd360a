#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsnkit::cli {

// Exit codes shared by every command.
enum Exit : int {
  kOk = 0,
  kInputError = 1,
  kInfeasible = 2,
  kCapacity = 3,
  kDomain = 4,
  kDisagreement = 5,
  kPrecondition = 6,
  kInternal = 7,
};

// Raised by analyze when the instance has no solution; exits kInfeasible.
struct NothingToAnalyze : std::runtime_error {
  NothingToAnalyze() : std::runtime_error("instance is infeasible, nothing to analyze") {}
};

struct SolveOptions {
  std::string file;
  std::string engine = "bnb";
  std::optional<std::string> cutoff;
  bool certify = false;
  std::optional<int> genus;
};

struct AnalyzeOptions {
  std::string file;
  std::optional<std::string> solve_engine;
  std::optional<int> genus;
};

struct ReduceOptions {
  std::string file;
  std::string output;
  bool decide = false;
  std::string engine = "bnb";
};

struct GenOptions {
  std::string kind;  // ladder | demo | grid | random | outstar | psi
  std::vector<std::uint64_t> sizes;
  std::vector<std::size_t> identified;
  std::string pattern;
  std::uint64_t seed = 1;
  std::size_t terminals = 3;
  std::optional<std::size_t> requests;
  std::int64_t max_weight = 1;
  bool fractional = false;
  bool no_plant = false;
  bool plant = false;
  std::uint32_t edge_percent = 50;
  std::uint32_t noise_percent = 10;
  std::string output;
};

struct BenchOptions {
  bool quick = false;
};

int run_solve(const SolveOptions& o, bool json);
int run_analyze(const AnalyzeOptions& o, bool json);
int run_reduce(const ReduceOptions& o, bool json);
int run_gen(const GenOptions& o, bool json);
int run_bench(const BenchOptions& o, bool json);

}  // namespace dsnkit::cli
