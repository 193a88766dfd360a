#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>

#include "commands.hpp"
#include "dsnkit/corpus.hpp"
#include "dsnkit/report.hpp"
#include "dsnkit/solvers.hpp"
#include "json.hpp"

namespace dsnkit::cli {
namespace {

struct Row {
  std::string instance;
  std::string family;
  std::string cost;
  std::string oracle;
  bool agree = true;
  std::string verdict;
  double seconds = 0;
};

std::string cost_text(const SolveResult& r) {
  switch (r.status) {
    case SolveStatus::kOptimal: return r.cost.to_string();
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kAboveCutoff: return "above-cutoff";
  }
  return "?";
}

std::string numbered(const std::string& prefix, std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03zu", i);
  return prefix + "-" + buf;
}

double since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int run_bench(const BenchOptions& o, bool as_json) {
  std::vector<Row> rows;
  const std::size_t random_count = o.quick ? 40 : 200;
  const std::size_t star_count = o.quick ? 20 : 100;
  const std::size_t psi_count = o.quick ? 4 : 30;

  auto randoms = random_corpus(random_count);
  for (std::size_t i = 0; i < randoms.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    SolveResult bnb = solve_bnb(randoms[i]);
    SolveResult oracle = solve_exhaustive(randoms[i]);
    Row row{numbered("random", i), "bnb-vs-exhaustive", cost_text(bnb), cost_text(oracle), false, "", 0};
    row.agree = bnb.status == oracle.status && (!bnb.optimal() || bnb.cost == oracle.cost);
    row.verdict = row.agree ? "agree" : "DISAGREE";
    row.seconds = since(start);
    rows.push_back(row);
  }

  auto stars = out_star_corpus(star_count);
  for (std::size_t i = 0; i < stars.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    SolveResult dst = solve_dst(stars[i]);
    SolveResult oracle = solve_exhaustive(stars[i]);
    Row row{numbered("outstar", i), "dst-vs-exhaustive", cost_text(dst), cost_text(oracle), false, "", 0};
    row.agree = dst.status == oracle.status && (!dst.optimal() || dst.cost == oracle.cost);
    row.verdict = row.agree ? "agree" : "DISAGREE";
    row.seconds = since(start);
    rows.push_back(row);
  }

  std::vector<std::size_t> sizes = o.quick ? std::vector<std::size_t>{4, 6} : std::vector<std::size_t>{4, 6, 8};
  auto cases = psi_corpus(psi_count, sizes);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    PsiDecision d = decide_psi_via_dsn(cases[i].psi, make_solver(Engine::kBranchAndBound));
    bool oracle = solve_psi_bruteforce(cases[i].psi).has_value();
    Row row{numbered("psi-" + cases[i].pattern, i), "decide-vs-psi-bruteforce", cost_text(d.result),
            oracle ? "yes" : "no", d.yes == oracle, "", 0};
    if (d.yes && d.result.cost != d.reduction.threshold) row.agree = false;
    row.verdict = row.agree ? (d.yes ? "yes" : "no") : "DISAGREE";
    row.seconds = since(start);
    rows.push_back(row);
  }

  auto planar = planar_corpus();
  for (std::size_t i = 0; i < planar.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    const DsnInstance& inst = planar[i];
    SolveResult r = solve_bnb(inst);
    Row row{numbered("planar", i) + "-" + inst.meta().name, "structure", cost_text(r), "-", true, "", 0};
    if (r.optimal()) {
      TreewidthCertificate c = certify_treewidth_bound(inst, minimize(inst, r.solution), inst.meta().genus);
      bool lemmas = std::all_of(c.structure.paths.begin(), c.structure.paths.end(),
                                [](const PathReport& p) { return p.checks.all(); });
      row.agree = lemmas && !c.treewidth_increased && c.original_treewidth <= 4 * c.q &&
                  c.structure.distance_within_bound && c.structure.diameter_within_bound;
      row.verdict = "tw " + std::to_string(c.original_treewidth) + ", C " + c.structure.path_constant.to_display() +
                    (row.agree ? "" : ", FAILED");
    } else {
      row.verdict = "no solution";
    }
    row.seconds = since(start);
    rows.push_back(row);
  }

  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.instance < b.instance; });
  bool all_agree = std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.agree; });
  if (as_json) {
    nlohmann::json doc = {{"schema_version", kReportSchemaVersion}, {"kind", "bench"}, {"all_agree", all_agree}};
    nlohmann::json table = nlohmann::json::array();
    for (const Row& r : rows) {
      table.push_back({{"instance", r.instance},
                       {"family", r.family},
                       {"cost", r.cost},
                       {"oracle", r.oracle},
                       {"agree", r.agree},
                       {"verdict", r.verdict},
                       {"seconds", r.seconds}});
    }
    doc["rows"] = table;
    std::cout << doc.dump(2) << '\n';
  } else {
    std::printf("%-34s %-26s %-14s %-14s %-24s %s\n", "instance", "family", "cost", "oracle", "verdict", "seconds");
    for (const Row& r : rows) {
      std::printf("%-34s %-26s %-14s %-14s %-24s %.4f\n", r.instance.c_str(), r.family.c_str(), r.cost.c_str(),
                  r.oracle.c_str(), r.verdict.c_str(), r.seconds);
    }
    std::printf("%zu rows, %s\n", rows.size(), all_agree ? "all agree" : "DISAGREEMENT");
  }
  return all_agree ? kOk : kDisagreement;
}

}  // namespace dsnkit::cli
