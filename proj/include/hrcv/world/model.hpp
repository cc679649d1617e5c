#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hrcv/logic/formula.hpp"
#include "hrcv/logic/symbols.hpp"
#include "hrcv/logic/trace.hpp"
#include "hrcv/world/scenario.hpp"

namespace hrcv::world {

enum class Speed { Normal, Slow, Stopped };

const char* to_string(Speed s) noexcept;

inline constexpr int kMaxLevel = 2;
inline constexpr int kMaxRisk = 3 * kMaxLevel;

/// Additive risk over severity, exposure and avoidability (each 0..2).
/// Slow speed lowers severity by one (not below 0); a stopped robot carries
/// no risk.
int risk_value(int severity, int exposure, int avoidability, Speed speed);

// Symbol names used by the compiled model. POI position variables and hazard
// propositions reuse the scenario ids.
namespace names {
std::string transit(const std::string& poi);
std::string speed(const std::string& robot);
std::string risk(const std::string& hazard);
std::string done(std::size_t step);  // 1-based
}  // namespace names

struct NamedFormula {
  std::string label;
  logic::Formula formula;
};

/// The scenario as temporal logic. A trace satisfying `query()` at instant 0
/// is a counterexample to the safety property.
struct CompiledModel {
  logic::SymbolTable symbols;
  std::vector<NamedFormula> axioms;
  logic::Formula violation = logic::False();  // Som(some risk above threshold)
  logic::Bound bound{0};

  logic::Formula model() const;
  logic::Formula query() const;
  std::vector<logic::Formula> query_conjuncts() const;
  const logic::Formula* find(const std::string& label) const;
};

CompiledModel compile(const Scenario& s);

struct Violation {
  std::string hazard;
  int instant = 0;
  int risk = 0;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerifyResult {
  bool safe = true;
  std::optional<logic::Trace> trace;
  std::vector<Violation> violations;
  int sat_vars = 0;
  std::size_t sat_clauses = 0;
};

/// Bounded check of model & violation: Unsat means Safe, otherwise the
/// decoded trace is returned with every over-threshold (hazard, instant).
VerifyResult verify(const Scenario& s);

/// Same question answered by exhaustive trace enumeration (no SAT); only
/// practical for small layouts and bounds.
VerifyResult verify_exhaustive(const Scenario& s);

/// Every (hazard, instant) whose risk exceeds the scenario threshold.
std::vector<Violation> violations(const logic::Trace& tr, const Scenario& s);

}  // namespace hrcv::world
