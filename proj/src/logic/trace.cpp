#include "hrcv/logic/trace.hpp"

#include <string>

namespace hrcv::logic {

Trace::Trace(SymbolTable symbols, Bound bound)
    : symbols_(std::move(symbols)),
      k_(bound.k),
      width_(symbols_.size()),
      values_(width_ * static_cast<std::size_t>(bound.instants()), 0) {}

void Trace::check_instant(int t) const {
  if (t < 0 || t > k_)
    throw Error("instant " + std::to_string(t) + " outside trace bound [0, " + std::to_string(k_) + "]");
}

bool Trace::prop(std::string_view name, int t) const {
  check_instant(t);
  auto i = symbols_.index_of(name);
  if (symbols_.at(i).kind != SymbolKind::Proposition) throw Error("'" + std::string(name) + "' is not a proposition");
  return raw(i, t) != 0;
}

const std::string& Trace::value(std::string_view var, int t) const {
  check_instant(t);
  auto i = symbols_.index_of(var);
  const auto& s = symbols_.at(i);
  if (s.kind != SymbolKind::Variable) throw Error("'" + std::string(var) + "' is not a finite variable");
  return s.domain[raw(i, t)];
}

void Trace::set(std::string_view prop, int t, bool v) {
  check_instant(t);
  auto i = symbols_.index_of(prop);
  if (symbols_.at(i).kind != SymbolKind::Proposition) throw Error("'" + std::string(prop) + "' is not a proposition");
  set_raw(i, t, v ? 1 : 0);
}

void Trace::set(std::string_view var, int t, std::string_view value) {
  check_instant(t);
  auto i = symbols_.index_of(var);
  const auto& s = symbols_.at(i);
  if (s.kind != SymbolKind::Variable) throw Error("'" + std::string(var) + "' is not a finite variable");
  auto v = s.value_index(value);
  if (!v) throw Error("'" + std::string(value) + "' is not in the domain of '" + s.name + "'");
  set_raw(i, t, static_cast<std::uint16_t>(*v));
}

}  // namespace hrcv::logic
