#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hrcv/logic/formula.hpp"
#include "hrcv/logic/symbols.hpp"
#include "hrcv/logic/trace.hpp"
#include "hrcv/sat/cnf.hpp"

namespace hrcv::encode {

inline constexpr int kDefaultBound = 30;

/// Where each (symbol, instant) and each defined subformula lives in the CNF.
///
/// Symbol variables occupy one contiguous block: a proposition takes one id
/// per instant, a finite variable |domain| one-hot ids per instant.
class VarMap {
 public:
  struct Definition {
    std::string subformula;  // grammar text of the defined subformula
    int instant;             // -1 for instant-independent (Alw/Som) definitions
    int var;
  };

  VarMap(const logic::SymbolTable& symbols, logic::Bound bound);

  int prop_var(std::size_t symbol, int t) const;
  int value_var(std::size_t symbol, std::size_t value, int t) const;
  int symbol_var_count() const noexcept { return symbol_vars_; }
  logic::Bound bound() const noexcept { return logic::Bound(k_); }

  const std::vector<Definition>& definitions() const noexcept { return definitions_; }
  void add_definition(Definition d) { definitions_.push_back(std::move(d)); }

 private:
  int k_;
  std::vector<int> base_;   // first id of each symbol's block
  std::vector<int> width_;  // ids per instant
  int symbol_vars_ = 0;
  std::vector<Definition> definitions_;
};

struct Encoding {
  sat::Cnf cnf;
  VarMap vars;
};

/// CNF satisfiable iff some trace over [0, k] satisfies f at instant 0.
Encoding encode(const logic::Formula& f, const logic::SymbolTable& symbols, logic::Bound bound);

/// Reads symbol values back out of a model; throws on a broken one-hot block.
logic::Trace decode(const sat::Model& model, const VarMap& vars, const logic::SymbolTable& symbols);

/// SatTrace when a witness exists (verified with the evaluator), else Unsat.
struct CheckResult {
  std::optional<logic::Trace> trace;
  int sat_vars = 0;
  std::size_t sat_clauses = 0;

  bool is_sat() const noexcept { return trace.has_value(); }
};

CheckResult check(const logic::Formula& f, const logic::SymbolTable& symbols,
                  logic::Bound bound = logic::Bound(kDefaultBound));

}  // namespace hrcv::encode
