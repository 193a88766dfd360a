#include "dsnkit/report.hpp"

#include <cstdio>

#include "dsnkit/errors.hpp"
#include "dsnkit/formats.hpp"
#include "json.hpp"

namespace dsnkit {
namespace {

using nlohmann::json;

json id(Vertex v) { return v + 1; }

json ids(const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(id(v));
  return out;
}

json request_json(const Request& r) { return json::array({id(r.source), id(r.target)}); }

json requests_json(const std::vector<Request>& rs) {
  json out = json::array();
  for (const Request& r : rs) out.push_back(request_json(r));
  return out;
}

const char* side_name(Side s) { return s == Side::kTowardSource ? "toward_source" : "toward_target"; }

json path_json(const PathReport& pr) {
  const DirectedPath& p = pr.path;
  auto at = [&](std::size_t i) { return id(p[i]); };
  json important = json::array();
  for (Vertex v : pr.important.vertices()) {
    json entry = {{"vertex", id(v)}};
    json labels = json::array();
    if (auto it = pr.important.labels.find(v); it != pr.important.labels.end()) {
      for (const Label& l : it->second) labels.push_back({{"terminal", id(l.terminal)}, {"side", side_name(l.side)}});
    }
    entry["labels"] = labels;
    if (auto it = pr.important.anchor.find(v); it != pr.important.anchor.end()) {
      entry["anchor"] = id(it->second);
      entry["anchor_path"] = ids(pr.important.anchor_path.at(v).vertices());
    } else {
      entry["anchor"] = nullptr;
      entry["anchor_path"] = nullptr;
    }
    important.push_back(entry);
  }
  json marked = json::array();
  for (const MarkedQuad& q : pr.marked.quads) {
    marked.push_back({{"vertex", at(q.position)},
                      {"leftmost_target", at(q.leftmost_target)},
                      {"rightmost_target", at(q.rightmost_target)},
                      {"leftmost_source", at(q.leftmost_source)},
                      {"rightmost_source", at(q.rightmost_source)}});
  }
  json markers = json::array();
  for (std::size_t i : pr.markers) markers.push_back(at(i));
  json segments = json::array();
  for (const LadderSegment& s : pr.segments) {
    json seg = {{"from", at(s.from)},
                {"to", at(s.to)},
                {"boundary", ids(s.boundary)},
                {"corners", ids({s.a, s.b, s.c, s.d})},
                {"component_size", s.component.size()},
                {"terminal_free", s.terminal_free},
                {"verified", s.verified},
                {"reason", s.reason}};
    if (s.match) {
      json ident = json::array();
      for (std::size_t i : s.match->identified) ident.push_back(i);
      seg["ladder_length"] = s.match->n;
      seg["identified"] = ident;
    } else {
      seg["ladder_length"] = nullptr;
      seg["identified"] = nullptr;
    }
    segments.push_back(seg);
  }
  const LemmaChecks& c = pr.checks;
  json checks = {{"important_bound", c.important_bound},
                 {"every_important_labelled", c.every_important_labelled},
                 {"anchor_fibres", c.anchor_fibres},
                 {"anchors_avoid", c.anchors_avoid},
                 {"marked_order", c.marked_order},
                 {"marked_bound", c.marked_bound},
                 {"marked_neighbourhood", c.marked_neighbourhood},
                 {"nonimportant_out_degree", c.nonimportant_out_degree},
                 {"indegree", c.indegree},
                 {"failures", c.failures}};
  return {{"request", request_json(pr.request)},
          {"path", ids(p.vertices())},
          {"length", p.length()},
          {"important", important},
          {"marked", marked},
          {"markers", markers},
          {"segments", segments},
          {"checks", checks}};
}

json structure_json(const StructureReport& r) {
  json replacements = json::array();
  for (const Replacement& rep : r.replacements) {
    replacements.push_back({{"round", rep.round},
                            {"request", request_json(rep.request)},
                            {"corners", ids(rep.corners)},
                            {"old_length", rep.old_length},
                            {"new_length", rep.new_length},
                            {"vertices_before", rep.vertices_before},
                            {"vertices_after", rep.vertices_after}});
  }
  json paths = json::array();
  for (const PathReport& p : r.paths) paths.push_back(path_json(p));
  json out = {{"q", r.q},
              {"requests", requests_json(r.requests)},
              {"normalized_requests", requests_json(r.normalized_requests)},
              {"rounds", r.rounds},
              {"vertices_before", r.vertices_before},
              {"vertices_after", r.vertices_after},
              {"path_constant", r.path_constant.to_string()},
              {"terminal_distance", r.terminal_distance},
              {"distance_within_bound", r.distance_within_bound},
              {"diameter_within_bound", r.diameter_within_bound},
              {"counterexample_candidates", r.counterexample_candidates},
              {"replacements", replacements},
              {"paths", paths}};
  out["diameter"] = r.diameter ? json(*r.diameter) : json(nullptr);
  return out;
}

json summary_json(const CertificateSummary& s) {
  json out = {{"q", s.q},
              {"original_vertices", s.original_vertices},
              {"reduced_vertices", s.reduced_vertices},
              {"original_treewidth", s.original_treewidth},
              {"original_exact", s.original_exact},
              {"reduced_treewidth", s.reduced_treewidth},
              {"reduced_exact", s.reduced_exact},
              {"treewidth_per_terminal", s.treewidth_per_terminal.to_string()},
              {"treewidth_increased", s.treewidth_increased},
              {"scaling_flag", s.scaling_flag},
              {"path_constant", s.path_constant.to_string()},
              {"terminal_distance", s.terminal_distance},
              {"rounds", s.rounds},
              {"replacements", s.replacements}};
  out["genus"] = s.genus ? json(*s.genus) : json(nullptr);
  out["diameter"] = s.diameter ? json(*s.diameter) : json(nullptr);
  return out;
}

CertificateSummary summary_from_json(const json& j) {
  CertificateSummary s;
  if (!j.at("genus").is_null()) s.genus = j.at("genus").get<int>();
  s.q = j.at("q").get<std::size_t>();
  s.original_vertices = j.at("original_vertices").get<std::size_t>();
  s.reduced_vertices = j.at("reduced_vertices").get<std::size_t>();
  s.original_treewidth = j.at("original_treewidth").get<std::size_t>();
  s.original_exact = j.at("original_exact").get<bool>();
  s.reduced_treewidth = j.at("reduced_treewidth").get<std::size_t>();
  s.reduced_exact = j.at("reduced_exact").get<bool>();
  s.treewidth_per_terminal = Rational::parse(j.at("treewidth_per_terminal").get<std::string>());
  s.treewidth_increased = j.at("treewidth_increased").get<bool>();
  s.scaling_flag = j.at("scaling_flag").get<bool>();
  s.path_constant = Rational::parse(j.at("path_constant").get<std::string>());
  s.terminal_distance = j.at("terminal_distance").get<std::size_t>();
  if (!j.at("diameter").is_null()) s.diameter = j.at("diameter").get<std::size_t>();
  s.rounds = j.at("rounds").get<std::size_t>();
  s.replacements = j.at("replacements").get<std::size_t>();
  return s;
}

}  // namespace

std::string instance_digest(const DsnInstance& inst) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : emit_dsn(inst)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CertificateSummary summarize(const TreewidthCertificate& cert) {
  CertificateSummary s;
  s.genus = cert.genus;
  s.q = cert.q;
  s.original_vertices = cert.original_vertices;
  s.reduced_vertices = cert.reduced_vertices;
  s.original_treewidth = cert.original_treewidth;
  s.original_exact = cert.original_exact;
  s.reduced_treewidth = cert.reduced_treewidth;
  s.reduced_exact = cert.reduced_exact;
  s.treewidth_per_terminal = cert.treewidth_per_terminal;
  s.treewidth_increased = cert.treewidth_increased;
  s.scaling_flag = cert.scaling_flag;
  s.path_constant = cert.structure.path_constant;
  s.terminal_distance = cert.structure.terminal_distance;
  s.diameter = cert.structure.diameter;
  s.rounds = cert.structure.rounds;
  s.replacements = cert.structure.replacements.size();
  return s;
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kAboveCutoff: return "above_cutoff";
  }
  return "?";
}

RunReport make_run_report(const DsnInstance& inst, const SolveResult& result,
                          const std::optional<TreewidthCertificate>& cert, double wall_seconds) {
  RunReport r;
  r.instance_name = inst.meta().name;
  r.digest = instance_digest(inst);
  r.seed = inst.meta().seed;
  r.engine = to_string(result.stats.engine);
  r.status = to_string(result.status);
  if (result.optimal()) r.cost = result.cost;
  for (ArcId a : result.solution.arcs()) {
    r.arcs.emplace_back(inst.host().arc(a).tail + 1, inst.host().arc(a).head + 1);
  }
  r.nodes = result.stats.nodes;
  r.solve_seconds = result.stats.seconds;
  r.wall_seconds = wall_seconds;
  if (cert) r.certificate = summarize(*cert);
  return r;
}

std::string emit_run_report(const RunReport& r) {
  json arcs = json::array();
  for (auto [u, v] : r.arcs) arcs.push_back(json::array({u, v}));
  json out = {{"schema_version", r.schema_version},
              {"kind", "solve"},
              {"instance", {{"name", r.instance_name}, {"digest", r.digest}}},
              {"engine", r.engine},
              {"status", r.status},
              {"arcs", arcs},
              {"stats", {{"nodes", r.nodes}, {"solve_seconds", r.solve_seconds}, {"wall_seconds", r.wall_seconds}}}};
  out["instance"]["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  out["cost"] = r.cost ? json(r.cost->to_string()) : json(nullptr);
  out["certificate"] = r.certificate ? summary_json(*r.certificate) : json(nullptr);
  return out.dump(2) + "\n";
}

RunReport parse_run_report(std::string_view text) {
  try {
    json j = json::parse(text);
    if (j.at("kind").get<std::string>() != "solve") throw InputError("not a solve report");
    RunReport r;
    r.schema_version = j.at("schema_version").get<int>();
    r.instance_name = j.at("instance").at("name").get<std::string>();
    r.digest = j.at("instance").at("digest").get<std::string>();
    if (!j.at("instance").at("seed").is_null()) r.seed = j.at("instance").at("seed").get<std::uint64_t>();
    r.engine = j.at("engine").get<std::string>();
    r.status = j.at("status").get<std::string>();
    if (!j.at("cost").is_null()) r.cost = Rational::parse(j.at("cost").get<std::string>());
    for (const json& a : j.at("arcs")) r.arcs.emplace_back(a.at(0).get<Vertex>(), a.at(1).get<Vertex>());
    r.nodes = j.at("stats").at("nodes").get<std::uint64_t>();
    r.solve_seconds = j.at("stats").at("solve_seconds").get<double>();
    r.wall_seconds = j.at("stats").at("wall_seconds").get<double>();
    if (!j.at("certificate").is_null()) r.certificate = summary_from_json(j.at("certificate"));
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed run report: ") + e.what());
  }
}

std::string structure_report_json(const StructureReport& report) {
  json out = structure_json(report);
  out["schema_version"] = kReportSchemaVersion;
  return out.dump(2) + "\n";
}

std::string certificate_json(const TreewidthCertificate& cert) {
  json out = summary_json(summarize(cert));
  out["structure"] = structure_json(cert.structure);
  out["schema_version"] = kReportSchemaVersion;
  out["kind"] = "analyze";
  return out.dump(2) + "\n";
}

}  // namespace dsnkit
