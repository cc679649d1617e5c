#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hrcv/logic/symbols.hpp"

namespace hrcv::logic {

/// Total per-instant assignment of every declared symbol over 0..k.
///
/// Propositions store 0/1; finite variables store the index of their domain
/// value, so "exactly one value per instant" holds by construction. A fresh
/// trace assigns false / the first domain value everywhere.
class Trace {
 public:
  Trace(SymbolTable symbols, Bound bound);

  const SymbolTable& symbols() const noexcept { return symbols_; }
  Bound bound() const noexcept { return Bound(k_); }
  int k() const noexcept { return k_; }

  bool prop(std::string_view name, int t) const;
  const std::string& value(std::string_view var, int t) const;

  void set(std::string_view prop, int t, bool v);
  void set(std::string_view var, int t, std::string_view value);
  // Keeps string literals from binding to the bool overload.
  void set(std::string_view var, int t, const char* value) { set(var, t, std::string_view(value)); }

  // Index-based access, used by the evaluator and enumerators.
  std::uint16_t raw(std::size_t symbol, int t) const {
    return values_[static_cast<std::size_t>(t) * width_ + symbol];
  }
  void set_raw(std::size_t symbol, int t, std::uint16_t v) {
    values_[static_cast<std::size_t>(t) * width_ + symbol] = v;
  }

  friend bool operator==(const Trace&, const Trace&) = default;

 private:
  void check_instant(int t) const;

  SymbolTable symbols_;
  int k_;
  std::size_t width_;
  std::vector<std::uint16_t> values_;
};

}  // namespace hrcv::logic
