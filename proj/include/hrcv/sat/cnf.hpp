#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hrcv::sat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A variable id (>= 1) with a polarity, packed as 2*(var-1) + negated.
class Lit {
 public:
  constexpr Lit() = default;
  static constexpr Lit pos(int var) { return Lit(2 * (var - 1)); }
  static constexpr Lit neg(int var) { return Lit(2 * (var - 1) + 1); }
  static Lit from_dimacs(int x) { return x > 0 ? pos(x) : neg(-x); }

  constexpr int var() const noexcept { return code_ / 2 + 1; }
  constexpr bool positive() const noexcept { return (code_ & 1) == 0; }
  constexpr int dimacs() const noexcept { return positive() ? var() : -var(); }
  constexpr std::uint32_t code() const noexcept { return static_cast<std::uint32_t>(code_); }

  constexpr Lit operator~() const noexcept { return Lit(code_ ^ 1); }
  friend constexpr auto operator<=>(Lit, Lit) = default;

 private:
  constexpr explicit Lit(int code) : code_(code) {}
  int code_ = 0;
};

using Clause = std::vector<Lit>;

/// Clausal formula over variables 1..num_vars. An empty clause is not stored;
/// adding one sets `trivially_unsat` instead.
struct Cnf {
  int num_vars = 0;
  std::vector<Clause> clauses;
  bool trivially_unsat = false;

  int new_var() { return ++num_vars; }
  void add_clause(Clause c);  // throws on out-of-range literals

  friend bool operator==(const Cnf&, const Cnf&) = default;
};

/// Total assignment, indexed by variable id (slot 0 unused).
class Model {
 public:
  Model() = default;
  explicit Model(int num_vars) : values_(static_cast<std::size_t>(num_vars) + 1, false) {}

  int num_vars() const noexcept { return values_.empty() ? 0 : static_cast<int>(values_.size()) - 1; }
  bool value(int var) const { return values_.at(static_cast<std::size_t>(var)); }
  bool value(Lit l) const { return value(l.var()) == l.positive(); }
  void set(int var, bool v) { values_.at(static_cast<std::size_t>(var)) = v; }

  friend bool operator==(const Model&, const Model&) = default;

 private:
  std::vector<bool> values_;
};

bool satisfies(const Cnf& cnf, const Model& m);

class SolveResult {
 public:
  static SolveResult unsat() { return SolveResult(); }
  static SolveResult sat(Model m) {
    SolveResult r;
    r.sat_ = true;
    r.model_ = std::move(m);
    return r;
  }

  bool is_sat() const noexcept { return sat_; }
  const Model& model() const;  // throws when unsat

 private:
  bool sat_ = false;
  Model model_;
};

/// CDCL search: two watched literals, 1UIP learning, activity-ordered
/// decisions with ties broken toward the lowest variable, false phase first,
/// Luby restarts. Deterministic for a given input.
SolveResult solve(const Cnf& cnf);

/// Exhaustive enumeration in counting order; for cross-checking solve().
inline constexpr int kBruteForceMaxVars = 24;
SolveResult brute_force_solve(const Cnf& cnf);

std::string write_dimacs(const Cnf& cnf);
Cnf read_dimacs(std::string_view text);

}  // namespace hrcv::sat
