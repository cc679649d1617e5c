#include "hrcv/encode/encoder.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>

#include "hrcv/logic/evaluator.hpp"

namespace hrcv::encode {

using logic::Formula;
using logic::Op;
using logic::SymbolKind;
using sat::Lit;

VarMap::VarMap(const logic::SymbolTable& symbols, logic::Bound bound) : k_(bound.k) {
  int next = 1;
  for (const auto& s : symbols) {
    base_.push_back(next);
    int w = s.kind == SymbolKind::Proposition ? 1 : static_cast<int>(s.domain.size());
    width_.push_back(w);
    next += w * bound.instants();
  }
  symbol_vars_ = next - 1;
}

int VarMap::prop_var(std::size_t symbol, int t) const {
  if (t < 0 || t > k_) throw std::out_of_range("instant outside bound");
  return base_.at(symbol) + t;
}

int VarMap::value_var(std::size_t symbol, std::size_t value, int t) const {
  if (t < 0 || t > k_) throw std::out_of_range("instant outside bound");
  if (value >= static_cast<std::size_t>(width_.at(symbol))) throw std::out_of_range("domain index");
  return base_[symbol] + t * width_[symbol] + static_cast<int>(value);
}

namespace {

class Encoder {
 public:
  Encoder(const logic::SymbolTable& symbols, logic::Bound bound, Encoding& out)
      : symbols_(symbols), k_(bound.k), cnf_(out.cnf), vars_(out.vars) {
    cnf_.num_vars = vars_.symbol_var_count();
  }

  void one_hot() {
    for (std::size_t s = 0; s < symbols_.size(); ++s) {
      const auto& sym = symbols_.at(s);
      if (sym.kind != SymbolKind::Variable) continue;
      for (int t = 0; t <= k_; ++t) {
        sat::Clause at_least;
        for (std::size_t v = 0; v < sym.domain.size(); ++v) at_least.push_back(Lit::pos(vars_.value_var(s, v, t)));
        cnf_.add_clause(at_least);
        for (std::size_t a = 0; a < sym.domain.size(); ++a)
          for (std::size_t b = a + 1; b < sym.domain.size(); ++b)
            cnf_.add_clause({Lit::neg(vars_.value_var(s, a, t)), Lit::neg(vars_.value_var(s, b, t))});
      }
    }
  }

  void assert_root(const Formula& f) { cnf_.add_clause({lit(f, 0)}); }

 private:
  Lit truth() {
    if (!true_) {
      true_ = Lit::pos(cnf_.new_var());
      cnf_.add_clause({*true_});
    }
    return *true_;
  }

  std::size_t symbol(const std::string& name, SymbolKind kind) const {
    auto i = symbols_.find(name);
    if (!i) throw logic::Error("undeclared symbol '" + name + "'");
    if (symbols_.at(*i).kind != kind) throw logic::Error("symbol '" + name + "' used with the wrong kind");
    return *i;
  }

  std::size_t value(std::size_t sym, const std::string& v) const {
    auto i = symbols_.at(sym).value_index(v);
    if (!i) throw logic::Error("'" + v + "' is not in the domain of '" + symbols_.at(sym).name + "'");
    return *i;
  }

  // Structurally equal subformulas share one canonical id, hence one
  // definition per instant.
  int canonical(const Formula& f) {
    if (auto it = ids_.find(f.identity()); it != ids_.end()) return it->second;
    std::string key = std::to_string(static_cast<int>(f.op())) + '\x1f' + f.name() + '\x1f' + f.other() + '\x1f' +
                      std::to_string(f.integer());
    for (std::size_t i = 0; i < f.arity(); ++i) key += '\x1f' + std::to_string(canonical(f.child(i)));
    auto [it, inserted] = canon_.emplace(std::move(key), static_cast<int>(canon_.size()));
    ids_.emplace(f.identity(), it->second);
    return it->second;
  }

  const std::string& text(int id, const Formula& f) {
    auto [it, inserted] = texts_.try_emplace(id);
    if (inserted) it->second = logic::to_string(f);
    return it->second;
  }

  int define(int id, const Formula& f, int t) {
    int v = cnf_.new_var();
    vars_.add_definition({text(id, f), t, v});
    return v;
  }

  Lit and_gate(int id, const Formula& f, int t, const std::vector<Lit>& in) {
    Lit x = Lit::pos(define(id, f, t));
    sat::Clause back{x};
    for (Lit l : in) {
      cnf_.add_clause({~x, l});
      back.push_back(~l);
    }
    cnf_.add_clause(std::move(back));
    return x;
  }

  Lit or_gate(int id, const Formula& f, int t, const std::vector<Lit>& in) {
    Lit x = Lit::pos(define(id, f, t));
    sat::Clause fwd{~x};
    for (Lit l : in) {
      cnf_.add_clause({x, ~l});
      fwd.push_back(l);
    }
    cnf_.add_clause(std::move(fwd));
    return x;
  }

  Lit lit(const Formula& f, int t) {
    const bool global = f.op() == Op::Alw || f.op() == Op::Som;
    const int id = canonical(f);
    const auto key = std::make_pair(id, global ? -1 : t);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Lit out = build(f, id, t);
    memo_.emplace(key, out);
    return out;
  }

  Lit build(const Formula& f, int id, int t) {
    switch (f.op()) {
      case Op::True: return truth();
      case Op::False: return ~truth();
      case Op::Atom: return Lit::pos(vars_.prop_var(symbol(f.name(), SymbolKind::Proposition), t));
      case Op::Eq: {
        auto s = symbol(f.name(), SymbolKind::Variable);
        return Lit::pos(vars_.value_var(s, value(s, f.other()), t));
      }
      case Op::EqVar: {
        auto a = symbol(f.name(), SymbolKind::Variable);
        auto b = symbol(f.other(), SymbolKind::Variable);
        // With exactly-one blocks on both sides, e <-> OR_v (a=v & b=v)
        // needs no auxiliary variables.
        Lit e = Lit::pos(define(id, f, t));
        const auto& da = symbols_.at(a).domain;
        for (std::size_t i = 0; i < da.size(); ++i) {
          Lit av = Lit::pos(vars_.value_var(a, i, t));
          if (auto j = symbols_.at(b).value_index(da[i])) {
            Lit bv = Lit::pos(vars_.value_var(b, *j, t));
            cnf_.add_clause({~av, ~bv, e});
            cnf_.add_clause({~e, ~av, bv});
          } else {
            cnf_.add_clause({~e, ~av});
          }
        }
        return e;
      }
      case Op::LeConst: {
        auto s = symbol(f.name(), SymbolKind::Variable);
        const auto& sym = symbols_.at(s);
        if (!sym.integer_domain()) throw logic::Error("'<=' needs an integer-valued domain; '" + sym.name + "' has none");
        std::vector<Lit> admitted;
        for (std::size_t i = 0; i < sym.domain.size(); ++i)
          if (std::stoll(sym.domain[i]) <= f.integer()) admitted.push_back(Lit::pos(vars_.value_var(s, i, t)));
        if (admitted.empty()) return ~truth();
        if (admitted.size() == 1) return admitted.front();
        return or_gate(id, f, t, admitted);
      }
      case Op::Not: return ~lit(f.lhs(), t);
      case Op::And: return and_gate(id, f, t, {lit(f.lhs(), t), lit(f.rhs(), t)});
      case Op::Or: return or_gate(id, f, t, {lit(f.lhs(), t), lit(f.rhs(), t)});
      case Op::Implies: return or_gate(id, f, t, {~lit(f.lhs(), t), lit(f.rhs(), t)});
      case Op::Alw:
      case Op::Som: {
        std::vector<Lit> body;
        for (int u = 0; u <= k_; ++u) body.push_back(lit(f.lhs(), u));
        return f.op() == Op::Alw ? and_gate(id, f, -1, body) : or_gate(id, f, -1, body);
      }
      case Op::Dist: {
        auto u = static_cast<std::int64_t>(t) + f.integer();
        if (u < 0 || u > k_) return ~truth();
        return lit(f.lhs(), static_cast<int>(u));
      }
    }
    throw std::logic_error("unhandled formula operator");
  }

  const logic::SymbolTable& symbols_;
  int k_;
  sat::Cnf& cnf_;
  VarMap& vars_;
  std::optional<Lit> true_;
  std::unordered_map<const void*, int> ids_;
  std::map<std::string, int> canon_;
  std::unordered_map<int, std::string> texts_;
  std::map<std::pair<int, int>, Lit> memo_;
};

}  // namespace

Encoding encode(const Formula& f, const logic::SymbolTable& symbols, logic::Bound bound) {
  Encoding out{sat::Cnf{}, VarMap(symbols, bound)};
  Encoder enc(symbols, bound, out);
  enc.one_hot();
  enc.assert_root(f);
  return out;
}

logic::Trace decode(const sat::Model& model, const VarMap& vars, const logic::SymbolTable& symbols) {
  const auto bound = vars.bound();
  logic::Trace tr(symbols, bound);
  for (std::size_t s = 0; s < symbols.size(); ++s) {
    const auto& sym = symbols.at(s);
    for (int t = 0; t <= bound.k; ++t) {
      if (sym.kind == SymbolKind::Proposition) {
        tr.set_raw(s, t, model.value(vars.prop_var(s, t)) ? 1 : 0);
        continue;
      }
      int hot = -1;
      for (std::size_t v = 0; v < sym.domain.size(); ++v) {
        if (!model.value(vars.value_var(s, v, t))) continue;
        if (hot >= 0)
          throw std::logic_error("one-hot violation: '" + sym.name + "' has two values at instant " +
                                 std::to_string(t));
        hot = static_cast<int>(v);
      }
      if (hot < 0)
        throw std::logic_error("one-hot violation: '" + sym.name + "' has no value at instant " + std::to_string(t));
      tr.set_raw(s, t, static_cast<std::uint16_t>(hot));
    }
  }
  return tr;
}

CheckResult check(const Formula& f, const logic::SymbolTable& symbols, logic::Bound bound) {
  logic::Evaluator eval(f, symbols);  // validates symbols before encoding
  Encoding enc = encode(f, symbols, bound);
  CheckResult out;
  out.sat_vars = enc.cnf.num_vars;
  out.sat_clauses = enc.cnf.clauses.size();
  sat::SolveResult r = sat::solve(enc.cnf);
  if (!r.is_sat()) return out;
  logic::Trace tr = decode(r.model(), enc.vars, symbols);
  if (!eval(tr, 0)) throw std::logic_error("encoder soundness violated: decoded witness fails the evaluator");
  out.trace = std::move(tr);
  return out;
}

}  // namespace hrcv::encode
