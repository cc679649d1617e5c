#include "hrcv/sat/cnf.hpp"

#include <charconv>
#include <sstream>

namespace hrcv::sat {

void Cnf::add_clause(Clause c) {
  if (c.empty()) {
    trivially_unsat = true;
    return;
  }
  for (Lit l : c)
    if (l.var() < 1 || l.var() > num_vars)
      throw Error("literal " + std::to_string(l.dimacs()) + " exceeds num_vars " + std::to_string(num_vars));
  clauses.push_back(std::move(c));
}

bool satisfies(const Cnf& cnf, const Model& m) {
  if (cnf.trivially_unsat) return false;
  for (const auto& c : cnf.clauses) {
    bool ok = false;
    for (Lit l : c)
      if (m.value(l)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

const Model& SolveResult::model() const {
  if (!sat_) throw Error("no model: formula is unsatisfiable");
  return model_;
}

SolveResult brute_force_solve(const Cnf& cnf) {
  if (cnf.num_vars > kBruteForceMaxVars)
    throw Error("brute force limited to " + std::to_string(kBruteForceMaxVars) + " variables, got " +
                std::to_string(cnf.num_vars));
  if (cnf.trivially_unsat) return SolveResult::unsat();
  const std::uint64_t total = std::uint64_t{1} << cnf.num_vars;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool ok = true;
    for (const auto& c : cnf.clauses) {
      bool clause_ok = false;
      for (Lit l : c)
        if ((((mask >> (l.var() - 1)) & 1) != 0) == l.positive()) {
          clause_ok = true;
          break;
        }
      if (!clause_ok) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Model m(cnf.num_vars);
      for (int v = 1; v <= cnf.num_vars; ++v) m.set(v, ((mask >> (v - 1)) & 1) != 0);
      return SolveResult::sat(std::move(m));
    }
  }
  return SolveResult::unsat();
}

std::string write_dimacs(const Cnf& cnf) {
  std::string out = "p cnf " + std::to_string(cnf.num_vars) + " " +
                    std::to_string(cnf.clauses.size() + (cnf.trivially_unsat ? 1 : 0)) + "\n";
  for (const auto& c : cnf.clauses) {
    for (Lit l : c) {
      out += std::to_string(l.dimacs());
      out += ' ';
    }
    out += "0\n";
  }
  if (cnf.trivially_unsat) out += "0\n";
  return out;
}

namespace {

bool parse_int(std::string_view tok, long long& v) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  return ec == std::errc{} && p == tok.data() + tok.size();
}

}  // namespace

Cnf read_dimacs(std::string_view text) {
  Cnf cnf;
  bool header = false;
  long long declared_clauses = 0;
  long long seen_clauses = 0;
  Clause current;
  bool open_clause = false;
  int line_no = 0;

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "%") break;  // some benchmark files end with "%\n0"
    if (tok == "p") {
      std::string fmt;
      long long nv = -1, nc = -1;
      if (header || !(ls >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0 || nc < 0 || (ls >> tok))
        throw Error("line " + std::to_string(line_no) + ": malformed DIMACS header");
      header = true;
      cnf.num_vars = static_cast<int>(nv);
      declared_clauses = nc;
      continue;
    }
    if (!header) throw Error("line " + std::to_string(line_no) + ": clause before 'p cnf' header");
    do {
      long long v = 0;
      if (!parse_int(tok, v)) throw Error("line " + std::to_string(line_no) + ": bad literal '" + tok + "'");
      if (v == 0) {
        ++seen_clauses;
        cnf.add_clause(std::move(current));
        current.clear();
        open_clause = false;
        continue;
      }
      if (v > cnf.num_vars || -v > cnf.num_vars)
        throw Error("line " + std::to_string(line_no) + ": literal " + tok + " exceeds declared " +
                    std::to_string(cnf.num_vars) + " variables");
      current.push_back(Lit::from_dimacs(static_cast<int>(v)));
      open_clause = true;
    } while (ls >> tok);
  }
  if (!header) throw Error("missing 'p cnf' header");
  if (open_clause) throw Error("last clause is missing its terminating 0");
  if (seen_clauses != declared_clauses)
    throw Error("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                std::to_string(seen_clauses));
  return cnf;
}

}  // namespace hrcv::sat
