#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dsnkit/instance.hpp"
#include "dsnkit/solvers.hpp"
#include "dsnkit/structure.hpp"

namespace dsnkit {

inline constexpr int kReportSchemaVersion = 1;

// FNV-1a 64 over the canonical DSN text, as 16 hex digits.
std::string instance_digest(const DsnInstance& inst);

struct CertificateSummary {
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
  bool scaling_flag = false;
  Rational path_constant = 0;
  std::size_t terminal_distance = 0;
  std::optional<std::size_t> diameter;
  std::size_t rounds = 0;
  std::size_t replacements = 0;

  friend bool operator==(const CertificateSummary&, const CertificateSummary&) = default;
};

CertificateSummary summarize(const TreewidthCertificate& cert);

struct RunReport {
  int schema_version = kReportSchemaVersion;
  std::string instance_name;
  std::string digest;
  std::optional<std::uint64_t> seed;
  std::string engine;
  std::string status;  // optimal | infeasible | above_cutoff
  std::optional<Weight> cost;
  std::vector<std::pair<Vertex, Vertex>> arcs;  // 1-based, as in the file
  std::uint64_t nodes = 0;
  double solve_seconds = 0;
  double wall_seconds = 0;
  std::optional<CertificateSummary> certificate;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

std::string to_string(SolveStatus s);
RunReport make_run_report(const DsnInstance& inst, const SolveResult& result,
                          const std::optional<TreewidthCertificate>& cert, double wall_seconds);

std::string emit_run_report(const RunReport& report);
// Throws InputError when the text is not a run report.
RunReport parse_run_report(std::string_view text);

// Vertex ids in these documents are 1-based like the text formats.
std::string structure_report_json(const StructureReport& report);
std::string certificate_json(const TreewidthCertificate& cert);

}  // namespace dsnkit
