#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hrcv/logic/evaluator.hpp"
#include "hrcv/logic/formula.hpp"
#include "hrcv/logic/symbols.hpp"
#include "hrcv/logic/trace.hpp"
#include "hrcv/sat/cnf.hpp"

namespace hrcv::test {

inline std::filesystem::path scenario_path(const std::string& name) {
  return std::filesystem::path(HRCV_SCENARIO_DIR) / name;
}

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Random formulas over a symbol table. Leaves draw from the declared
/// propositions (Atom), variables (Eq, EqVar, LeConst) and constants.
struct FormulaGen {
  const logic::SymbolTable& symbols;
  int max_offset = 2;
  bool constants = true;

  logic::Formula leaf(Rng& rng) const {
    using namespace logic;
    if (constants && uniform(rng, 0, 11) == 0) return uniform(rng, 0, 1) ? True() : False();
    const auto& s = symbols.at(static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(symbols.size()) - 1)));
    if (s.kind == SymbolKind::Proposition) return Atom(s.name);
    std::vector<const Symbol*> same_domain;
    for (const auto& o : symbols)
      if (o.kind == SymbolKind::Variable && o.name != s.name && o.domain == s.domain) same_domain.push_back(&o);
    switch (uniform(rng, 0, 3)) {
      case 0:
        if (!same_domain.empty())
          return EqVar(s.name, same_domain[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(same_domain.size()) - 1))]->name);
        [[fallthrough]];
      case 1:
        if (s.integer_domain()) return LeConst(s.name, std::stoll(s.domain[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(s.domain.size()) - 1))]) + uniform(rng, -1, 0));
        [[fallthrough]];
      default:
        return Eq(s.name, s.domain[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(s.domain.size()) - 1))]);
    }
  }

  logic::Formula operator()(Rng& rng, int depth) const {
    using namespace logic;
    if (depth == 0 || uniform(rng, 0, 4) == 0) return leaf(rng);
    switch (uniform(rng, 0, 7)) {
      case 0: return Not((*this)(rng, depth - 1));
      case 1: return And((*this)(rng, depth - 1), (*this)(rng, depth - 1));
      case 2: return Or((*this)(rng, depth - 1), (*this)(rng, depth - 1));
      case 3: return Implies((*this)(rng, depth - 1), (*this)(rng, depth - 1));
      case 4: return Alw((*this)(rng, depth - 1));
      case 5: return Som((*this)(rng, depth - 1));
      default: return Dist((*this)(rng, depth - 1), uniform(rng, -max_offset, max_offset));
    }
  }
};

inline logic::Trace random_trace(const logic::SymbolTable& symbols, logic::Bound bound, Rng& rng) {
  logic::Trace tr(symbols, bound);
  for (std::size_t i = 0; i < symbols.size(); ++i)
    for (int t = 0; t <= bound.k; ++t)
      tr.set_raw(i, t, static_cast<std::uint16_t>(uniform(rng, 0, static_cast<int>(symbols.at(i).cardinality()) - 1)));
  return tr;
}

/// Visits every trace over the table until `fn` returns true. No pruning.
inline bool for_each_trace(const logic::SymbolTable& symbols, logic::Bound bound,
                           const std::function<bool(const logic::Trace&)>& fn) {
  logic::Trace tr(symbols, bound);
  const std::size_t width = symbols.size();
  const std::size_t cells = width * static_cast<std::size_t>(bound.k + 1);
  while (true) {
    if (fn(tr)) return true;
    std::size_t c = 0;
    for (; c < cells; ++c) {
      auto sym = c % width;
      int t = static_cast<int>(c / width);
      auto v = static_cast<std::uint16_t>(tr.raw(sym, t) + 1);
      if (v < symbols.at(sym).cardinality()) {
        tr.set_raw(sym, t, v);
        break;
      }
      tr.set_raw(sym, t, 0);
    }
    if (c == cells) return false;
  }
}

inline sat::Cnf random_cnf(Rng& rng, int max_vars, int max_clauses) {
  sat::Cnf cnf;
  cnf.num_vars = uniform(rng, 1, max_vars);
  int n = uniform(rng, 0, max_clauses);
  for (int i = 0; i < n; ++i) {
    sat::Clause c;
    int len = uniform(rng, 1, 4);
    for (int j = 0; j < len; ++j) {
      int v = uniform(rng, 1, cnf.num_vars);
      c.push_back(uniform(rng, 0, 1) ? sat::Lit::pos(v) : sat::Lit::neg(v));
    }
    cnf.add_clause(std::move(c));
  }
  return cnf;
}

/// Standard pigeonhole: p pigeons, h holes, var(i, j) = pigeon i in hole j.
inline sat::Cnf pigeonhole(int pigeons, int holes) {
  sat::Cnf cnf;
  cnf.num_vars = pigeons * holes;
  auto var = [&](int i, int j) { return i * holes + j + 1; };
  for (int i = 0; i < pigeons; ++i) {
    sat::Clause c;
    for (int j = 0; j < holes; ++j) c.push_back(sat::Lit::pos(var(i, j)));
    cnf.add_clause(c);
  }
  for (int j = 0; j < holes; ++j)
    for (int a = 0; a < pigeons; ++a)
      for (int b = a + 1; b < pigeons; ++b) cnf.add_clause({sat::Lit::neg(var(a, j)), sat::Lit::neg(var(b, j))});
  return cnf;
}

// start/stop symbols for the bounded-response formula used across tests.
inline logic::SymbolTable start_stop_symbols() {
  logic::SymbolTable s;
  s.add_proposition("start");
  s.add_proposition("stop");
  return s;
}

inline logic::Trace start_stop_trace(int k, std::vector<int> starts, std::vector<int> stops) {
  logic::Trace tr(start_stop_symbols(), logic::Bound(k));
  for (int t : starts) tr.set("start", t, true);
  for (int t : stops) tr.set("stop", t, true);
  return tr;
}

}  // namespace hrcv::test
