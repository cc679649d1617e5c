#include "hrcv/io/trace_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace hrcv::io {

using logic::SymbolKind;

void write_trace(std::ostream& out, const logic::Trace& tr) {
  out << "# bound " << tr.k() << "\n# vars";
  for (const auto& s : tr.symbols()) out << ' ' << s.name;
  out << '\n';
  for (const auto& s : tr.symbols()) {
    if (s.kind != SymbolKind::Variable) continue;
    out << "# domain " << s.name;
    for (const auto& v : s.domain) out << ' ' << v;
    out << '\n';
  }
  for (int t = 0; t <= tr.k(); ++t) {
    out << t;
    for (std::size_t i = 0; i < tr.symbols().size(); ++i) {
      const auto& s = tr.symbols().at(i);
      out << ' ';
      if (s.kind == SymbolKind::Proposition)
        out << (tr.raw(i, t) ? '1' : '0');
      else
        out << s.domain[tr.raw(i, t)];
    }
    out << '\n';
  }
}

namespace {

std::vector<std::string> words(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::optional<int> integer(const std::string& s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw FormatError("trace line " + std::to_string(line) + ": " + msg);
}

}  // namespace

logic::Trace read_trace(std::istream& in) {
  std::optional<int> bound;
  std::optional<std::vector<std::string>> vars;
  std::map<std::string, std::vector<std::string>> domains;
  std::vector<std::vector<std::string>> rows;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto w = words(raw);
    if (w.empty()) continue;
    if (w[0] == "#") {
      if (w.size() >= 2 && w[1] == "bound") {
        if (bound) fail(line, "repeated bound header");
        if (w.size() != 3 || !integer(w[2]) || *integer(w[2]) < 0) fail(line, "expected '# bound <k>' with k >= 0");
        bound = *integer(w[2]);
      } else if (w.size() >= 2 && w[1] == "vars") {
        if (vars) fail(line, "repeated vars header");
        vars.emplace(w.begin() + 2, w.end());
      } else if (w.size() >= 2 && w[1] == "domain") {
        if (w.size() < 4) fail(line, "expected '# domain <var> <value>...'");
        if (!domains.emplace(w[2], std::vector<std::string>(w.begin() + 3, w.end())).second)
          fail(line, "repeated domain for '" + w[2] + "'");
      }
      continue;
    }
    if (!bound || !vars) fail(line, "instant line before the '# bound' and '# vars' headers");
    auto t = integer(w[0]);
    if (!t || *t != static_cast<int>(rows.size())) fail(line, "expected instant " + std::to_string(rows.size()));
    if (w.size() != vars->size() + 1)
      fail(line, "expected " + std::to_string(vars->size()) + " values, found " + std::to_string(w.size() - 1));
    rows.emplace_back(w.begin() + 1, w.end());
  }
  if (!bound || !vars) throw FormatError("trace is missing the '# bound' or '# vars' header");
  if (static_cast<int>(rows.size()) != *bound + 1)
    throw FormatError("trace has " + std::to_string(rows.size()) + " instants, bound " + std::to_string(*bound) +
                      " needs " + std::to_string(*bound + 1));
  for (const auto& [name, _] : domains)
    if (std::find(vars->begin(), vars->end(), name) == vars->end())
      throw FormatError("domain given for unknown symbol '" + name + "'");

  logic::SymbolTable symbols;
  try {
    for (std::size_t c = 0; c < vars->size(); ++c) {
      const auto& name = (*vars)[c];
      if (auto it = domains.find(name); it != domains.end()) {
        symbols.add_variable(name, it->second);
        continue;
      }
      bool boolean = std::all_of(rows.begin(), rows.end(), [&](const auto& r) { return r[c] == "0" || r[c] == "1"; });
      if (boolean) {
        symbols.add_proposition(name);
      } else {
        std::vector<std::string> seen;
        for (const auto& r : rows)
          if (std::find(seen.begin(), seen.end(), r[c]) == seen.end()) seen.push_back(r[c]);
        symbols.add_variable(name, seen);
      }
    }
  } catch (const logic::Error& e) {
    throw FormatError(std::string("trace header: ") + e.what());
  }

  logic::Trace tr(symbols, logic::Bound(*bound));
  for (std::size_t t = 0; t < rows.size(); ++t) {
    for (std::size_t c = 0; c < vars->size(); ++c) {
      const auto& s = symbols.at(c);
      const auto& v = rows[t][c];
      if (s.kind == SymbolKind::Proposition) {
        if (v != "0" && v != "1") throw FormatError("instant " + std::to_string(t) + ": '" + s.name + "' must be 0 or 1");
        tr.set_raw(c, static_cast<int>(t), v == "1");
      } else {
        auto idx = s.value_index(v);
        if (!idx)
          throw FormatError("instant " + std::to_string(t) + ": '" + v + "' is not in the domain of '" + s.name + "'");
        tr.set_raw(c, static_cast<int>(t), static_cast<std::uint16_t>(*idx));
      }
    }
  }
  return tr;
}

void write_trace_file(const std::filesystem::path& path, const logic::Trace& tr) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path.string() + "'");
  write_trace(out, tr);
  if (!out) throw FormatError("error writing '" + path.string() + "'");
}

logic::Trace read_trace_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read trace file '" + path.string() + "'");
  try {
    return read_trace(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace hrcv::io
