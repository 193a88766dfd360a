#pragma once

#include <string>
#include <string_view>

#include "dsnkit/instance.hpp"
#include "dsnkit/reduction.hpp"

namespace dsnkit {

// DSN text format, vertex ids 1-based in the file:
//   c name <text>          optional metadata lines, before the header
//   c genus <int>
//   c threshold <num/den>
//   c seed <uint>
//   c <anything else>      comment
//   p dsn <n> <m> <q> <p>
//   a <u> <v> <num>/<den>  m arc lines (a plain integer weight is accepted)
//   r <s> <t>              p request lines
// Throws ParseError naming line and column.
DsnInstance parse_dsn(std::string_view text);
// Canonical form: metadata, header, arcs by (tail, head), requests sorted.
std::string emit_dsn(const DsnInstance& inst);

// PSI text format, 1-based:
//   p psi <nG> <mG> <kH> <mH>
//   eg <u> <v>    host edge
//   eh <x> <y>    pattern edge
//   map <u> <x>   class of host vertex u, one line per host vertex
PsiInstance parse_psi(std::string_view text);
std::string emit_psi(const PsiInstance& psi);

// Reads a whole file; throws InputError if it cannot be opened.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace dsnkit
