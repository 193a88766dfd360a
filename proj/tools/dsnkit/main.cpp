#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "dsnkit/errors.hpp"
#include "json.hpp"

namespace {

using namespace dsnkit;
using namespace dsnkit::cli;

int report_error(bool json, const char* type, int code, const std::exception& e) {
  if (json) {
    nlohmann::json out = {{"schema_version", 1},
                          {"kind", "error"},
                          {"exit_code", code},
                          {"error", {{"type", type}, {"message", e.what()}}}};
    if (auto* pe = dynamic_cast<const ParseError*>(&e)) {
      out["error"]["line"] = pe->line();
      out["error"]["column"] = pe->column();
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cerr << "error: " << e.what() << '\n';
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directed Steiner network toolkit"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Write a JSON document to stdout");

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a DSN instance exactly");
  solve_cmd->fallthrough();
  solve_cmd->add_option("file", solve.file, "Instance in DSN text format")->required();
  solve_cmd->add_option("--engine", solve.engine, "exhaustive | bnb | dst")->capture_default_str();
  solve_cmd->add_option("--cutoff", solve.cutoff, "Only look for solutions costing at most this (bnb)");
  solve_cmd->add_flag("--certify", solve.certify, "Run the structural certificate on the optimum");
  solve_cmd->add_option("--genus", solve.genus, "Declared genus of the host");

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Minimize, run the structure pipeline and certify");
  analyze_cmd->fallthrough();
  analyze_cmd->add_option("file", analyze.file, "Instance in DSN text format")->required();
  analyze_cmd->add_option("--solve", analyze.solve_engine,
                          "Analyze an optimum found with this engine instead of the minimized host");
  analyze_cmd->add_option("--genus", analyze.genus, "Declared genus of the host");

  ReduceOptions reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Turn a PSI instance into a DSN instance");
  reduce_cmd->fallthrough();
  reduce_cmd->add_option("file", reduce.file, "Instance in PSI text format")->required();
  reduce_cmd->add_option("-o,--output", reduce.output, "Write the DSN instance here");
  reduce_cmd->add_flag("--decide", reduce.decide, "Solve the DSN instance and answer the PSI question");
  reduce_cmd->add_option("--engine", reduce.engine, "Engine for --decide")->capture_default_str();

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
  gen_cmd->fallthrough();
  gen_cmd->add_option("kind", gen.kind, "ladder | demo | grid | random | outstar | psi")
      ->required()
      ->check(CLI::IsMember({"ladder", "demo", "grid", "random", "outstar", "psi"}));
  gen_cmd->add_option("sizes", gen.sizes,
                      "ladder N | demo N | grid W H | random N M Q P | outstar N M SINKS | psi NG");
  gen_cmd->add_option("--identify", gen.identified, "Identified rungs of a ladder (1-based)")->delimiter(',');
  gen_cmd->add_option("--pattern", gen.pattern, "psi: k4 | k33 | prism | cube | wagner");
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--terminals", gen.terminals, "grid: number of terminals")->capture_default_str();
  gen_cmd->add_option("--requests", gen.requests, "grid: random requests instead of a terminal cycle");
  gen_cmd->add_option("--max-weight", gen.max_weight, "Largest integer weight")->capture_default_str();
  gen_cmd->add_flag("--fractional", gen.fractional, "random: weights with denominators up to 3");
  gen_cmd->add_flag("--no-plant", gen.no_plant, "random/outstar: do not route requests first");
  gen_cmd->add_flag("--plant", gen.plant, "psi: force an embedding into the host");
  gen_cmd->add_option("--edge-percent", gen.edge_percent, "psi: chance of a pattern-class edge")
      ->capture_default_str();
  gen_cmd->add_option("--noise-percent", gen.noise_percent, "psi: chance of any other edge")
      ->capture_default_str();
  gen_cmd->add_option("-o,--output", gen.output, "Write the instance here instead of stdout");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run the oracle corpus and print one row per instance");
  bench_cmd->fallthrough();
  bench_cmd->add_flag("--quick", bench.quick, "Smaller corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*solve_cmd) return run_solve(solve, json);
    if (*analyze_cmd) return run_analyze(analyze, json);
    if (*reduce_cmd) return run_reduce(reduce, json);
    if (*gen_cmd) return run_gen(gen, json);
    if (*bench_cmd) return run_bench(bench, json);
  } catch (const NothingToAnalyze& e) {
    return report_error(json, "infeasible", kInfeasible, e);
  } catch (const ParseError& e) {
    return report_error(json, "parse", kInputError, e);
  } catch (const InputError& e) {
    return report_error(json, "input", kInputError, e);
  } catch (const CapacityError& e) {
    return report_error(json, "capacity", kCapacity, e);
  } catch (const DomainError& e) {
    return report_error(json, "domain", kDomain, e);
  } catch (const PreconditionError& e) {
    return report_error(json, "precondition", kPrecondition, e);
  } catch (const InconsistencyError& e) {
    return report_error(json, "inconsistency", kPrecondition, e);
  } catch (const std::exception& e) {
    return report_error(json, "internal", kInternal, e);
  }
  return kInputError;
}
