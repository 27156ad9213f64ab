#include "wres/dimacs.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <vector>

namespace wres {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(const std::string& tok, int line, const char* what) {
  int value = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
  return value;
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int declared_clauses = 0;
  std::vector<Lit> pending;            // literals of the clause being read
  std::vector<std::pair<int, std::string>> names;

  while (std::getline(in, line)) {
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "c") {
      if (have_header) continue;  // comments after the header are ignored
      if (toks.size() >= 4 && toks[1] == "var") {
        int id = parse_int(toks[2], line_no, "variable id");
        std::string name = toks[3];
        for (std::size_t i = 4; i < toks.size(); ++i) name += " " + toks[i];
        if (id <= 0) throw ParseError(line_no, "variable id must be positive");
        names.emplace_back(id, std::move(name));
      } else if (toks.size() == 4 && toks[1] == "param" && toks[2] == "k") {
        f.param_k = parse_int(toks[3], line_no, "parameter k");
      } else if (toks.size() == 3 && toks[1] == "mode") {
        auto m = mode_from_string(toks[2]);
        if (!m || *m == Mode::Plain)
          throw ParseError(line_no, "mode must be w1 or w2");
        f.param_mode = *m;
      } else if (toks.size() >= 2 && toks[1] == "family") {
        std::string fam;
        for (std::size_t i = 2; i < toks.size(); ++i) {
          if (i > 2) fam += " ";
          fam += toks[i];
        }
        f.family = fam;
      }
      continue;
    }
    if (toks[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (toks.size() != 4 || toks[1] != "cnf")
        throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
      f.num_vars = parse_int(toks[2], line_no, "variable count");
      declared_clauses = parse_int(toks[3], line_no, "clause count");
      if (f.num_vars < 0 || declared_clauses < 0)
        throw ParseError(line_no, "negative counts in header");
      have_header = true;
      continue;
    }
    if (!have_header)
      throw ParseError(line_no, "clause data before 'p cnf' header");
    for (const auto& tok : toks) {
      int code = parse_int(tok, line_no, "literal");
      if (code == 0) {
        if (static_cast<int>(f.clauses.size()) >= declared_clauses)
          throw ParseError(line_no, "more clauses than declared in header");
        f.clauses.push_back(Clause(std::move(pending)));
        pending.clear();
      } else {
        int var = code < 0 ? -code : code;
        if (var > f.num_vars)
          throw ParseError(line_no, "literal " + tok + " out of range");
        pending.push_back(Lit(code));
      }
    }
  }
  if (!have_header) throw ParseError(line_no, "missing 'p cnf' header");
  if (!pending.empty())
    throw ParseError(line_no, "clause not 0-terminated at end of input");
  if (static_cast<int>(f.clauses.size()) != declared_clauses)
    throw ParseError(line_no, "fewer clauses than declared in header");

  std::set<std::string> seen_names;
  for (auto& [id, name] : names) {
    if (id > f.num_vars)
      throw ParseError(line_no, "name table entry for variable out of range");
    if (!seen_names.insert(name).second)
      throw ParseError(line_no, "duplicate variable name '" + name + "'");
    f.set_name(id, std::move(name));
  }
  return f;
}

std::string emit_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  if (f.family) out << "c family " << *f.family << "\n";
  if (f.param_mode) out << "c mode " << to_string(*f.param_mode) << "\n";
  if (f.param_k) out << "c param k " << *f.param_k << "\n";
  for (int v = 1; v <= f.num_vars; ++v)
    if (!f.name(v).empty()) out << "c var " << v << " " << f.name(v) << "\n";
  out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
  for (const Clause& c : f.clauses) out << to_string(c) << "\n";
  return out.str();
}

}  // namespace wres
