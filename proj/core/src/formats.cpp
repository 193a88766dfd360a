#include "dsnkit/formats.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "dsnkit/errors.hpp"

namespace dsnkit {
namespace {

struct Token {
  std::string_view text;
  std::size_t column = 0;  // 1-based
};

struct Line {
  std::size_t number = 0;
  std::string_view raw;
  std::vector<Token> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;
    Line line{number, raw, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const Token& tok, const std::string& what) {
  throw ParseError(line.number, tok.column, what);
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw ParseError(line.number, line.tokens.empty() ? 1 : line.tokens.front().column, what);
}

std::uint64_t parse_count(const Line& line, const Token& tok, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
    fail(line, tok, std::string("expected a non-negative integer for ") + what + ", got '" +
                        std::string(tok.text) + "'");
  }
  return value;
}

Vertex parse_id(const Line& line, const Token& tok, std::uint64_t count, const char* what) {
  std::uint64_t id = parse_count(line, tok, what);
  if (id < 1 || id > count) {
    fail(line, tok, std::string(what) + " " + std::string(tok.text) + " outside 1.." + std::to_string(count));
  }
  return static_cast<Vertex>(id - 1);
}

void expect_fields(const Line& line, std::size_t n) {
  if (line.tokens.size() != n) {
    const Token& at = line.tokens.size() > n ? line.tokens[n] : line.tokens.back();
    fail(line, at, "expected " + std::to_string(n) + " fields on '" + std::string(line.tokens[0].text) +
                       "' line, got " + std::to_string(line.tokens.size()));
  }
}

// Text after the first `skip` tokens, trimmed.
std::string rest_of_line(const Line& line, std::size_t skip) {
  if (line.tokens.size() <= skip) return "";
  std::size_t from = line.tokens[skip].column - 1;
  std::string_view tail = line.raw.substr(from);
  while (!tail.empty() && (tail.back() == ' ' || tail.back() == '\t')) tail.remove_suffix(1);
  return std::string(tail);
}

}  // namespace

DsnInstance parse_dsn(std::string_view text) {
  std::vector<Line> lines = split_lines(text);
  InstanceMeta meta;
  std::optional<std::uint64_t> n, m, q, p;
  const Line* header = nullptr;
  std::vector<Arc> arcs;
  std::map<std::pair<Vertex, Vertex>, std::size_t> arc_lines;
  std::vector<Request> requests;
  std::set<Request> seen_requests;
  for (const Line& line : lines) {
    std::string_view kind = line.tokens[0].text;
    if (kind == "c") {
      if (line.tokens.size() < 2) continue;
      std::string_view key = line.tokens[1].text;
      if (key == "name") {
        meta.name = rest_of_line(line, 2);
      } else if (key == "genus" && line.tokens.size() == 3) {
        meta.genus = static_cast<int>(parse_count(line, line.tokens[2], "genus"));
      } else if (key == "threshold" && line.tokens.size() == 3) {
        try {
          meta.threshold = Rational::parse(line.tokens[2].text);
        } catch (const Error& e) {
          fail(line, line.tokens[2], e.what());
        }
      } else if (key == "seed" && line.tokens.size() == 3) {
        meta.seed = parse_count(line, line.tokens[2], "seed");
      }
      continue;
    }
    if (kind == "p") {
      if (header) fail(line, "second header line (first on line " + std::to_string(header->number) + ")");
      expect_fields(line, 6);
      if (line.tokens[1].text != "dsn") fail(line, line.tokens[1], "expected problem kind 'dsn'");
      n = parse_count(line, line.tokens[2], "vertex count");
      m = parse_count(line, line.tokens[3], "arc count");
      q = parse_count(line, line.tokens[4], "terminal count");
      p = parse_count(line, line.tokens[5], "request count");
      if (*n > (std::uint64_t{1} << 31)) fail(line, line.tokens[2], "vertex count too large");
      header = &line;
      continue;
    }
    if (!header) fail(line, "record before the 'p dsn' header");
    if (kind == "a") {
      expect_fields(line, 4);
      Vertex u = parse_id(line, line.tokens[1], *n, "vertex");
      Vertex v = parse_id(line, line.tokens[2], *n, "vertex");
      if (u == v) fail(line, line.tokens[2], "self-loop on vertex " + std::to_string(u + 1));
      Weight w;
      try {
        w = Rational::parse(line.tokens[3].text);
      } catch (const Error& e) {
        fail(line, line.tokens[3], e.what());
      }
      if (!w.is_positive()) fail(line, line.tokens[3], "nonpositive weight " + w.to_string());
      auto [it, fresh] = arc_lines.emplace(std::pair(u, v), line.number);
      if (!fresh) {
        fail(line, line.tokens[1], "duplicate arc " + std::to_string(u + 1) + " " + std::to_string(v + 1) +
                                       " (first on line " + std::to_string(it->second) + ")");
      }
      arcs.push_back({u, v, w});
    } else if (kind == "r") {
      expect_fields(line, 3);
      Vertex s = parse_id(line, line.tokens[1], *n, "request endpoint");
      Vertex t = parse_id(line, line.tokens[2], *n, "request endpoint");
      if (s == t) fail(line, line.tokens[2], "request from a vertex to itself");
      if (!seen_requests.insert({s, t}).second) fail(line, line.tokens[1], "duplicate request");
      requests.push_back({s, t});
    } else {
      fail(line, "unknown record type '" + std::string(kind) + "'");
    }
  }
  if (!header) throw ParseError(lines.empty() ? 1 : lines.back().number, 1, "missing 'p dsn' header");
  if (arcs.size() != *m) {
    fail(*header, header->tokens[3],
         "header declares " + std::to_string(*m) + " arcs, body has " + std::to_string(arcs.size()));
  }
  if (requests.size() != *p) {
    fail(*header, header->tokens[5],
         "header declares " + std::to_string(*p) + " requests, body has " + std::to_string(requests.size()));
  }
  DsnInstance inst(WeightedDigraph(*n, std::move(arcs)), std::move(requests), meta);
  if (inst.q() != *q) {
    fail(*header, header->tokens[4],
         "header declares " + std::to_string(*q) + " terminals, requests use " + std::to_string(inst.q()));
  }
  return inst;
}

std::string emit_dsn(const DsnInstance& inst) {
  std::ostringstream out;
  const InstanceMeta& meta = inst.meta();
  if (!meta.name.empty()) out << "c name " << meta.name << '\n';
  if (meta.genus) out << "c genus " << *meta.genus << '\n';
  if (meta.threshold) out << "c threshold " << meta.threshold->to_string() << '\n';
  if (meta.seed) out << "c seed " << *meta.seed << '\n';
  const WeightedDigraph& g = inst.host();
  out << "p dsn " << g.vertex_count() << ' ' << g.arc_count() << ' ' << inst.q() << ' ' << inst.p() << '\n';
  for (const Arc& a : g.arcs()) out << "a " << a.tail + 1 << ' ' << a.head + 1 << ' ' << a.weight.to_string() << '\n';
  for (const Request& r : inst.requests()) out << "r " << r.source + 1 << ' ' << r.target + 1 << '\n';
  return out.str();
}

PsiInstance parse_psi(std::string_view text) {
  std::vector<Line> lines = split_lines(text);
  const Line* header = nullptr;
  std::uint64_t ng = 0, mg = 0, kh = 0, mh = 0;
  std::vector<std::pair<Vertex, Vertex>> host_edges, pattern_edges;
  std::set<std::pair<Vertex, Vertex>> seen_host, seen_pattern;
  std::vector<std::optional<Vertex>> classes;
  for (const Line& line : lines) {
    std::string_view kind = line.tokens[0].text;
    if (kind == "c") continue;
    if (kind == "p") {
      if (header) fail(line, "second header line");
      expect_fields(line, 6);
      if (line.tokens[1].text != "psi") fail(line, line.tokens[1], "expected problem kind 'psi'");
      ng = parse_count(line, line.tokens[2], "host vertex count");
      mg = parse_count(line, line.tokens[3], "host edge count");
      kh = parse_count(line, line.tokens[4], "pattern vertex count");
      mh = parse_count(line, line.tokens[5], "pattern edge count");
      if (ng > (std::uint64_t{1} << 24) || kh > (std::uint64_t{1} << 24)) fail(line, "vertex count too large");
      classes.assign(ng, std::nullopt);
      header = &line;
      continue;
    }
    if (!header) fail(line, "record before the 'p psi' header");
    if (kind == "eg" || kind == "eh") {
      expect_fields(line, 3);
      bool host = kind == "eg";
      std::uint64_t count = host ? ng : kh;
      Vertex u = parse_id(line, line.tokens[1], count, "vertex");
      Vertex v = parse_id(line, line.tokens[2], count, "vertex");
      if (u == v) fail(line, line.tokens[2], "loop edge");
      auto key = std::minmax(u, v);
      auto& seen = host ? seen_host : seen_pattern;
      if (!seen.insert({key.first, key.second}).second) fail(line, line.tokens[1], "duplicate edge");
      (host ? host_edges : pattern_edges).emplace_back(u, v);
    } else if (kind == "map") {
      expect_fields(line, 3);
      Vertex u = parse_id(line, line.tokens[1], ng, "host vertex");
      Vertex x = parse_id(line, line.tokens[2], kh, "pattern vertex");
      if (classes[u]) fail(line, line.tokens[1], "host vertex " + std::to_string(u + 1) + " mapped twice");
      classes[u] = x;
    } else {
      fail(line, "unknown record type '" + std::string(kind) + "'");
    }
  }
  if (!header) throw ParseError(lines.empty() ? 1 : lines.back().number, 1, "missing 'p psi' header");
  if (host_edges.size() != mg) fail(*header, header->tokens[3], "host edge count does not match the body");
  if (pattern_edges.size() != mh) fail(*header, header->tokens[5], "pattern edge count does not match the body");
  std::vector<Vertex> class_map;
  for (std::size_t u = 0; u < ng; ++u) {
    if (!classes[u]) fail(*header, header->tokens[2], "host vertex " + std::to_string(u + 1) + " has no map line");
    class_map.push_back(*classes[u]);
  }
  try {
    return PsiInstance(UndirectedGraph(ng, host_edges), UndirectedGraph(kh, pattern_edges), std::move(class_map));
  } catch (const InputError& e) {
    fail(*header, e.what());
  }
}

std::string emit_psi(const PsiInstance& psi) {
  std::ostringstream out;
  out << "p psi " << psi.host.vertex_count() << ' ' << psi.host.edge_count() << ' ' << psi.pattern.vertex_count()
      << ' ' << psi.pattern.edge_count() << '\n';
  for (auto [u, v] : psi.host.edges()) out << "eg " << u + 1 << ' ' << v + 1 << '\n';
  for (auto [u, v] : psi.pattern.edges()) out << "eh " << u + 1 << ' ' << v + 1 << '\n';
  for (std::size_t u = 0; u < psi.classes.size(); ++u) out << "map " << u + 1 << ' ' << psi.classes[u] + 1 << '\n';
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

}  // namespace dsnkit
