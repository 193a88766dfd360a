#include "commands.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

#include "dsnkit/errors.hpp"
#include "dsnkit/formats.hpp"
#include "dsnkit/generators.hpp"
#include "dsnkit/reduction.hpp"
#include "dsnkit/report.hpp"
#include "dsnkit/solvers.hpp"
#include "json.hpp"

namespace dsnkit::cli {
namespace {

using nlohmann::json;

double since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void print_certificate(const TreewidthCertificate& c) {
  std::cout << "treewidth " << c.original_treewidth << (c.original_exact ? "" : " (upper bound)") << " -> "
            << c.reduced_treewidth << (c.reduced_exact ? "" : " (upper bound)") << ", per terminal "
            << c.treewidth_per_terminal.to_display() << '\n';
  const StructureReport& s = c.structure;
  std::cout << "vertices " << c.original_vertices << " -> " << c.reduced_vertices << " after "
            << s.replacements.size() << " replacement(s)\n";
  std::cout << "path constant " << s.path_constant.to_display() << ", terminal distance " << s.terminal_distance;
  if (s.diameter) std::cout << ", diameter " << *s.diameter;
  std::cout << '\n';
  if (c.treewidth_increased) std::cout << "warning: treewidth increased by the pipeline\n";
  if (c.scaling_flag) std::cout << "flag: treewidth above the reduced treewidth scaled by the shrink factor\n";
  for (const std::string& cand : s.counterexample_candidates) std::cout << "candidate: " << cand << '\n';
}

DsnInstance load_dsn(const std::string& path) { return parse_dsn(read_text_file(path)); }

}  // namespace

int run_solve(const SolveOptions& o, bool as_json) {
  auto start = std::chrono::steady_clock::now();
  DsnInstance inst = load_dsn(o.file);
  Engine engine = parse_engine(o.engine);
  std::optional<Weight> cutoff;
  if (o.cutoff) cutoff = Rational::parse(*o.cutoff);
  SolveResult result = solve(inst, engine, cutoff);
  std::optional<TreewidthCertificate> cert;
  if (result.optimal()) {
    result.solution = minimize(inst, result.solution);
    if (o.certify) cert = certify_treewidth_bound(inst, result.solution, o.genus ? o.genus : inst.meta().genus);
  }
  RunReport report = make_run_report(inst, result, cert, since(start));
  if (as_json) {
    std::cout << emit_run_report(report);
  } else {
    std::cout << "status " << report.status << '\n';
    if (result.optimal()) {
      std::cout << "cost " << result.cost.to_display() << '\n';
      std::cout << "arcs " << result.solution.size() << '\n';
      for (ArcId id : result.solution.arcs()) {
        const Arc& a = inst.host().arc(id);
        std::cout << "  " << a.tail + 1 << ' ' << a.head + 1 << ' ' << a.weight.to_display() << '\n';
      }
    }
    std::cout << "engine " << report.engine << ", nodes " << report.nodes << ", " << report.solve_seconds << " s\n";
    if (cert) print_certificate(*cert);
  }
  return result.optimal() ? kOk : kInfeasible;
}

int run_analyze(const AnalyzeOptions& o, bool as_json) {
  DsnInstance inst = load_dsn(o.file);
  SolutionSubgraph sol;
  if (o.solve_engine) {
    SolveResult r = solve(inst, parse_engine(*o.solve_engine));
    if (!r.optimal()) throw NothingToAnalyze();
    sol = r.solution;
  } else {
    sol = SolutionSubgraph::all_arcs(inst.host());
    if (!validate(inst, sol).valid) throw NothingToAnalyze();
  }
  sol = minimize(inst, sol);
  TreewidthCertificate cert = certify_treewidth_bound(inst, sol, o.genus ? o.genus : inst.meta().genus);
  if (as_json) {
    std::cout << certificate_json(cert);
    return kOk;
  }
  std::cout << "solution arcs " << sol.size() << ", cost " << cost(inst, sol).to_display() << '\n';
  for (const PathReport& p : cert.structure.paths) {
    std::cout << "path " << p.request.source + 1 << "->" << p.request.target + 1 << " length " << p.path.length()
              << ", important " << p.important.positions.size() << ", marked " << p.marked.positions.size()
              << ", segments " << p.segments.size() << (p.checks.all() ? "" : ", LEMMA CHECK FAILED") << '\n';
    for (const std::string& f : p.checks.failures) std::cout << "  " << f << '\n';
  }
  for (const Replacement& r : cert.structure.replacements) {
    std::cout << "round " << r.round << ": ladder of length " << r.old_length << " -> " << r.new_length << ", vertices "
              << r.vertices_before << " -> " << r.vertices_after << '\n';
  }
  print_certificate(cert);
  return kOk;
}

int run_reduce(const ReduceOptions& o, bool as_json) {
  PsiInstance psi = parse_psi(read_text_file(o.file));
  Labelling lab = build_labelling(psi);
  ReductionOutput out = build_dsn(psi, lab);
  if (!as_json) {
    for (const std::string& w : lab.warnings) std::cerr << "warning: " << w << '\n';
  }
  if (!o.output.empty()) write_text_file(o.output, emit_dsn(out.dsn));

  std::optional<PsiDecision> decision;
  if (o.decide) decision = decide_psi_via_dsn(psi, make_solver(parse_engine(o.engine)));

  if (as_json) {
    json doc = {{"schema_version", kReportSchemaVersion},
                {"kind", "reduce"},
                {"k", psi.k()},
                {"pattern_edges", psi.pattern.edge_count()},
                {"r", lab.r},
                {"labels", {{"x", lab.x_count}, {"y", lab.y_count}, {"z", lab.z_count}}},
                {"threshold", out.threshold.to_string()},
                {"vertices", out.dsn.host().vertex_count()},
                {"arcs", out.dsn.host().arc_count()},
                {"terminals", out.dsn.q()},
                {"requests", out.dsn.p()},
                {"warnings", lab.warnings}};
    doc["output"] = o.output.empty() ? json(nullptr) : json(o.output);
    if (decision) {
      json d = {{"answer", decision->yes ? "yes" : "no"}, {"status", to_string(decision->result.status)}};
      d["cost"] = decision->result.optimal() ? json(decision->result.cost.to_string()) : json(nullptr);
      if (decision->embedding) {
        json phi = json::array();
        for (Vertex v : *decision->embedding) phi.push_back(v + 1);
        d["embedding"] = phi;
      } else {
        d["embedding"] = nullptr;
      }
      doc["decision"] = d;
    } else {
      doc["decision"] = nullptr;
    }
    std::cout << doc.dump(2) << '\n';
    return kOk;
  }
  if (!decision) {
    if (o.output.empty()) std::cout << emit_dsn(out.dsn);
    return kOk;
  }
  const std::string threshold = out.threshold.to_display();
  const SolveResult& r = decision->result;
  if (decision->yes) {
    std::cout << "yes, cost " << r.cost.to_display() << (r.cost == out.threshold ? " = " : " < ") << "threshold "
              << threshold << '\n';
    std::cout << "embedding";
    for (Vertex v = 0; v < decision->embedding->size(); ++v) {
      std::cout << ' ' << v + 1 << "->" << (*decision->embedding)[v] + 1;
    }
    std::cout << '\n';
  } else if (r.status == SolveStatus::kInfeasible) {
    std::cout << "no, infeasible (threshold " << threshold << ")\n";
  } else if (r.status == SolveStatus::kAboveCutoff) {
    std::cout << "no, every solution costs more than threshold " << threshold << '\n';
  } else {
    std::cout << "no, cost " << r.cost.to_display() << " > threshold " << threshold << '\n';
  }
  return kOk;
}

int run_gen(const GenOptions& o, bool as_json) {
  auto need = [&](std::size_t count, const char* usage) {
    if (o.sizes.size() != count) throw InputError(std::string("usage: gen ") + usage);
  };
  std::string text;
  std::string format = "dsn";
  std::string digest;
  if (o.kind == "psi") {
    need(1, "psi NG --pattern NAME");
    if (o.pattern.empty()) throw InputError("gen psi needs --pattern");
    PsiSpec spec;
    spec.host_vertices = o.sizes[0];
    spec.edge_percent = o.edge_percent;
    spec.noise_percent = o.noise_percent;
    spec.seed = o.seed;
    spec.plant = o.plant;
    text = emit_psi(random_psi(pattern_by_name(o.pattern), spec));
    format = "psi";
  } else {
    DsnInstance inst;
    if (o.kind == "ladder") {
      need(1, "ladder N [--identify i,j,...]");
      inst = ladder_instance(o.sizes[0], o.identified);
    } else if (o.kind == "demo") {
      need(1, "demo N");
      inst = ladder_demo(o.sizes[0]);
    } else if (o.kind == "grid") {
      need(2, "grid W H [--terminals Q] [--requests P]");
      inst = grid_instance(o.sizes[0], o.sizes[1], o.terminals, o.seed,
                           o.requests ? GridRequests::kRandom : GridRequests::kCycle, o.requests.value_or(0),
                           o.max_weight);
    } else if (o.kind == "random") {
      need(4, "random N M Q P");
      RandomSpec spec;
      spec.vertices = o.sizes[0];
      spec.arcs = o.sizes[1];
      spec.terminals = o.sizes[2];
      spec.requests = o.sizes[3];
      spec.seed = o.seed;
      spec.max_weight = o.max_weight;
      spec.fractional = o.fractional;
      spec.plant = !o.no_plant;
      inst = random_instance(spec);
    } else {
      need(3, "outstar N M SINKS");
      inst = random_out_star(o.sizes[0], o.sizes[1], o.sizes[2], o.seed, o.max_weight, !o.no_plant);
    }
    text = emit_dsn(inst);
    digest = instance_digest(inst);
  }
  if (!o.output.empty()) write_text_file(o.output, text);
  if (as_json) {
    json doc = {{"schema_version", kReportSchemaVersion}, {"kind", "gen"}, {"generator", o.kind},
                {"format", format}, {"seed", o.seed}, {"text", text}};
    doc["digest"] = digest.empty() ? json(nullptr) : json(digest);
    doc["output"] = o.output.empty() ? json(nullptr) : json(o.output);
    std::cout << doc.dump(2) << '\n';
  } else if (o.output.empty()) {
    std::cout << text;
  }
  return kOk;
}

}  // namespace dsnkit::cli
