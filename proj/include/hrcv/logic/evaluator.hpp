#pragma once

#include <cstdint>
#include <vector>

#include "hrcv/logic/formula.hpp"
#include "hrcv/logic/symbols.hpp"
#include "hrcv/logic/trace.hpp"

namespace hrcv::logic {

/// Finite-trace semantics, resolved once against a symbol table.
///
///   Dist(f, d) at t   iff 0 <= t+d <= k and f holds at t+d (false otherwise)
///   Alw(f), Som(f)    quantify over all of [0, k], whatever t is
///
/// Construction fails if the formula mentions an undeclared symbol, compares
/// against a constant outside a variable's domain, or applies `<=` to a
/// variable whose domain is not integer-valued.
class Evaluator {
 public:
  Evaluator(const Formula& f, const SymbolTable& symbols);

  // The trace must share the symbol table the evaluator was built for.
  bool operator()(const Trace& tr, int t) const;

  // Value at every instant 0..k.
  std::vector<bool> all(const Trace& tr) const;

 private:
  struct Node {
    Op op = Op::False;
    std::size_t symbol = 0;
    std::size_t other = 0;        // EqVar: right variable
    std::uint16_t value = 0;      // Eq: domain index
    std::int64_t integer = 0;     // Dist offset
    // LeConst: 1 for admitted domain indices; EqVar: index of the same
    // constant in the right variable's domain, or -1.
    std::vector<std::int32_t> table;
    std::uint32_t a = 0, b = 0;   // children
  };

  std::uint32_t build(const Formula& f, const SymbolTable& symbols);
  bool eval(std::uint32_t n, const Trace& tr, int t) const;

  std::vector<Node> nodes_;
  std::uint32_t root_ = 0;
  std::size_t symbol_count_ = 0;
};

/// One-shot evaluation; prefer Evaluator for repeated use.
bool evaluate(const Formula& f, const Trace& tr, int t);

}  // namespace hrcv::logic
