#include "hrcv/logic/symbols.hpp"

#include <cctype>
#include <charconv>
#include <set>

namespace hrcv::logic {

bool is_identifier(std::string_view s) noexcept {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  for (char c : s.substr(1)) {
    auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || u == '_')) return false;
  }
  return true;
}

std::optional<std::size_t> Symbol::value_index(std::string_view value) const {
  for (std::size_t i = 0; i < domain.size(); ++i)
    if (domain[i] == value) return i;
  return std::nullopt;
}

bool Symbol::integer_domain() const {
  if (kind != SymbolKind::Variable) return false;
  for (const auto& v : domain) {
    long long x = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc{} || p != v.data() + v.size()) return false;
  }
  return true;
}

std::size_t SymbolTable::add_proposition(std::string name) {
  return add(Symbol{std::move(name), SymbolKind::Proposition, {}});
}

std::size_t SymbolTable::add_variable(std::string name, std::vector<std::string> domain) {
  if (domain.empty()) throw Error("variable '" + name + "' has an empty domain");
  std::set<std::string_view> seen;
  for (const auto& v : domain) {
    if (v.empty()) throw Error("variable '" + name + "' has an empty domain value");
    if (!seen.insert(v).second) throw Error("variable '" + name + "' repeats domain value '" + v + "'");
  }
  return add(Symbol{std::move(name), SymbolKind::Variable, std::move(domain)});
}

std::size_t SymbolTable::add(Symbol s) {
  if (!is_identifier(s.name)) throw Error("invalid identifier '" + s.name + "'");
  if (s.name == "true" || s.name == "false") throw Error("'" + s.name + "' is reserved");
  if (index_.contains(s.name)) throw Error("duplicate symbol '" + s.name + "'");
  auto i = symbols_.size();
  index_.emplace(s.name, i);
  symbols_.push_back(std::move(s));
  return i;
}

std::optional<std::size_t> SymbolTable::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SymbolTable::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error("undeclared symbol '" + std::string(name) + "'");
}

}  // namespace hrcv::logic
