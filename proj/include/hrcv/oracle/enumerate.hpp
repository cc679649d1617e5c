#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>

#include "hrcv/logic/formula.hpp"
#include "hrcv/logic/symbols.hpp"
#include "hrcv/logic/trace.hpp"

namespace hrcv::oracle {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Stats {
  std::uint64_t nodes = 0;   // partial assignments visited
  std::uint64_t leaves = 0;  // complete traces reached
};

/// Exhaustive search for a trace over [0, k] on which every conjunct holds
/// at instant 0, using only the evaluator.
///
/// Traces are enumerated cell by cell (instant-major, declaration order
/// within an instant). Conjuncts of the form Alw(local) or local, where local
/// has no Alw/Som, are checked on each instant as soon as every cell their
/// window reads is fixed; everything else is checked on complete traces.
/// The pruning is exact, so the result is the lexicographically first
/// witness, or nullopt when none exists.
std::optional<logic::Trace> find_witness(std::span<const logic::Formula> conjuncts,
                                         const logic::SymbolTable& symbols, logic::Bound bound,
                                         Stats* stats = nullptr, std::uint64_t max_nodes = 4'000'000'000ULL);

inline std::optional<logic::Trace> find_witness(const logic::Formula& f, const logic::SymbolTable& symbols,
                                                logic::Bound bound, Stats* stats = nullptr) {
  return find_witness(std::span<const logic::Formula>(&f, 1), symbols, bound, stats);
}

}  // namespace hrcv::oracle
