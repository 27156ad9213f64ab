#pragma once

#include <string>
#include <string_view>

#include "wres/cnf.hpp"

namespace wres {

// DIMACS CNF with extension comments, one per line, before the header:
//   c family <text>
//   c mode <w1|w2>
//   c param k <k>
//   c var <id> <name>
// Unrecognized comment lines are ignored on parse and never emitted.
CnfFormula parse_dimacs(std::string_view text);
std::string emit_dimacs(const CnfFormula& f);

}  // namespace wres
