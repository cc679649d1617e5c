#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hrcv::logic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Last instant index of a bounded trace; the trace covers instants 0..k.
struct Bound {
  int k = 0;

  constexpr explicit Bound(int last) : k(last) {
    if (last < 0) throw Error("bound must be non-negative");
  }
  constexpr int instants() const noexcept { return k + 1; }
  friend constexpr bool operator==(Bound, Bound) = default;
};

bool is_identifier(std::string_view s) noexcept;

enum class SymbolKind { Proposition, Variable };

struct Symbol {
  std::string name;
  SymbolKind kind = SymbolKind::Proposition;
  // Ordered constant symbols; empty for propositions.
  std::vector<std::string> domain;

  std::size_t cardinality() const noexcept {
    return kind == SymbolKind::Proposition ? 2 : domain.size();
  }
  std::optional<std::size_t> value_index(std::string_view value) const;
  // Every domain value parses as a (signed) integer.
  bool integer_domain() const;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Ordered declarations of propositions and finite-domain variables.
/// Declaration order is the column order of traces.
class SymbolTable {
 public:
  std::size_t add_proposition(std::string name);
  std::size_t add_variable(std::string name, std::vector<std::string> domain);

  std::optional<std::size_t> find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }
  std::size_t index_of(std::string_view name) const;  // throws if undeclared

  const Symbol& at(std::size_t i) const { return symbols_.at(i); }
  const Symbol& operator[](std::string_view name) const { return symbols_[index_of(name)]; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  friend bool operator==(const SymbolTable& a, const SymbolTable& b) { return a.symbols_ == b.symbols_; }

 private:
  std::size_t add(Symbol s);

  std::vector<Symbol> symbols_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

}  // namespace hrcv::logic
