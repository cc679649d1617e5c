#include "hrcv/logic/evaluator.hpp"

#include <charconv>
#include <string>

namespace hrcv::logic {

namespace {

const Symbol& expect(const SymbolTable& symbols, const std::string& name, SymbolKind kind, std::size_t& index) {
  auto i = symbols.find(name);
  if (!i) throw Error("symbol '" + name + "' is missing from the trace");
  const auto& s = symbols.at(*i);
  if (s.kind != kind)
    throw Error("'" + name + "' is used as a " +
                (kind == SymbolKind::Proposition ? "proposition" : "finite variable") + " but declared otherwise");
  index = *i;
  return s;
}

}  // namespace

Evaluator::Evaluator(const Formula& f, const SymbolTable& symbols) : symbol_count_(symbols.size()) {
  root_ = build(f, symbols);
}

std::uint32_t Evaluator::build(const Formula& f, const SymbolTable& symbols) {
  Node n;
  n.op = f.op();
  switch (f.op()) {
    case Op::True:
    case Op::False: break;
    case Op::Atom: expect(symbols, f.name(), SymbolKind::Proposition, n.symbol); break;
    case Op::Eq: {
      const auto& s = expect(symbols, f.name(), SymbolKind::Variable, n.symbol);
      auto v = s.value_index(f.other());
      if (!v) throw Error("'" + f.other() + "' is not in the domain of '" + s.name + "'");
      n.value = static_cast<std::uint16_t>(*v);
      break;
    }
    case Op::EqVar: {
      const auto& a = expect(symbols, f.name(), SymbolKind::Variable, n.symbol);
      const auto& b = expect(symbols, f.other(), SymbolKind::Variable, n.other);
      for (const auto& v : a.domain) {
        auto j = b.value_index(v);
        n.table.push_back(j ? static_cast<std::int32_t>(*j) : -1);
      }
      break;
    }
    case Op::LeConst: {
      const auto& s = expect(symbols, f.name(), SymbolKind::Variable, n.symbol);
      if (!s.integer_domain()) throw Error("'<=' needs an integer-valued domain; '" + s.name + "' has none");
      for (const auto& v : s.domain) {
        long long x = 0;
        std::from_chars(v.data(), v.data() + v.size(), x);
        n.table.push_back(x <= f.integer() ? 1 : 0);
      }
      break;
    }
    case Op::Dist:
      n.integer = f.integer();
      [[fallthrough]];
    default:
      if (f.arity() > 0) n.a = build(f.child(0), symbols);
      if (f.arity() > 1) n.b = build(f.child(1), symbols);
  }
  nodes_.push_back(std::move(n));
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

bool Evaluator::eval(std::uint32_t i, const Trace& tr, int t) const {
  const Node& n = nodes_[i];
  switch (n.op) {
    case Op::True: return true;
    case Op::False: return false;
    case Op::Atom: return tr.raw(n.symbol, t) != 0;
    case Op::Eq: return tr.raw(n.symbol, t) == n.value;
    case Op::EqVar: return n.table[tr.raw(n.symbol, t)] == static_cast<std::int32_t>(tr.raw(n.other, t));
    case Op::LeConst: return n.table[tr.raw(n.symbol, t)] != 0;
    case Op::Not: return !eval(n.a, tr, t);
    case Op::And: return eval(n.a, tr, t) && eval(n.b, tr, t);
    case Op::Or: return eval(n.a, tr, t) || eval(n.b, tr, t);
    case Op::Implies: return !eval(n.a, tr, t) || eval(n.b, tr, t);
    case Op::Alw:
      for (int u = 0; u <= tr.k(); ++u)
        if (!eval(n.a, tr, u)) return false;
      return true;
    case Op::Som:
      for (int u = 0; u <= tr.k(); ++u)
        if (eval(n.a, tr, u)) return true;
      return false;
    case Op::Dist: {
      auto u = static_cast<std::int64_t>(t) + n.integer;
      if (u < 0 || u > tr.k()) return false;
      return eval(n.a, tr, static_cast<int>(u));
    }
  }
  return false;
}

bool Evaluator::operator()(const Trace& tr, int t) const {
  if (tr.symbols().size() != symbol_count_) throw Error("trace symbol table does not match the evaluator's");
  if (t < 0 || t > tr.k())
    throw Error("instant " + std::to_string(t) + " outside trace bound [0, " + std::to_string(tr.k()) + "]");
  return eval(root_, tr, t);
}

std::vector<bool> Evaluator::all(const Trace& tr) const {
  std::vector<bool> out(static_cast<std::size_t>(tr.k() + 1));
  for (int t = 0; t <= tr.k(); ++t) out[static_cast<std::size_t>(t)] = (*this)(tr, t);
  return out;
}

bool evaluate(const Formula& f, const Trace& tr, int t) { return Evaluator(f, tr.symbols())(tr, t); }

}  // namespace hrcv::logic
