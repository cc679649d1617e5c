#include "hrcv/logic/formula.hpp"

#include <algorithm>
#include <vector>

namespace hrcv::logic {

struct Formula::Node {
  Op op;
  std::string name;
  std::string other;
  std::int64_t integer = 0;
  std::vector<Formula> kids;
};

const char* op_name(Op op) noexcept {
  switch (op) {
    case Op::True: return "True";
    case Op::False: return "False";
    case Op::Atom: return "Atom";
    case Op::Eq: return "Eq";
    case Op::EqVar: return "EqVar";
    case Op::LeConst: return "LeConst";
    case Op::Not: return "Not";
    case Op::And: return "And";
    case Op::Or: return "Or";
    case Op::Implies: return "Implies";
    case Op::Alw: return "Alw";
    case Op::Som: return "Som";
    case Op::Dist: return "Dist";
  }
  return "?";
}

Formula Formula::make(Op op, std::string name, std::string other, std::int64_t integer,
                      const Formula* a, const Formula* b) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->name = std::move(name);
  n->other = std::move(other);
  n->integer = integer;
  if (a) n->kids.push_back(*a);
  if (b) n->kids.push_back(*b);
  return Formula(std::move(n));
}

Op Formula::op() const noexcept { return node_->op; }
const std::string& Formula::name() const noexcept { return node_->name; }
const std::string& Formula::other() const noexcept { return node_->other; }
std::int64_t Formula::integer() const noexcept { return node_->integer; }
std::size_t Formula::arity() const noexcept { return node_->kids.size(); }

const Formula& Formula::child(std::size_t i) const { return node_->kids.at(i); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.op == y.op && x.integer == y.integer && x.name == y.name && x.other == y.other && x.kids == y.kids;
}

Formula True() { return Formula::make(Op::True, {}, {}, 0, nullptr, nullptr); }
Formula False() { return Formula::make(Op::False, {}, {}, 0, nullptr, nullptr); }
Formula Atom(std::string prop) { return Formula::make(Op::Atom, std::move(prop), {}, 0, nullptr, nullptr); }
Formula Eq(std::string var, std::string value) {
  return Formula::make(Op::Eq, std::move(var), std::move(value), 0, nullptr, nullptr);
}
Formula EqVar(std::string var, std::string other_var) {
  return Formula::make(Op::EqVar, std::move(var), std::move(other_var), 0, nullptr, nullptr);
}
Formula LeConst(std::string var, std::int64_t bound) {
  return Formula::make(Op::LeConst, std::move(var), {}, bound, nullptr, nullptr);
}
Formula Not(const Formula& f) { return Formula::make(Op::Not, {}, {}, 0, &f, nullptr); }
Formula And(const Formula& a, const Formula& b) { return Formula::make(Op::And, {}, {}, 0, &a, &b); }
Formula Or(const Formula& a, const Formula& b) { return Formula::make(Op::Or, {}, {}, 0, &a, &b); }
Formula Implies(const Formula& a, const Formula& b) { return Formula::make(Op::Implies, {}, {}, 0, &a, &b); }
Formula Alw(const Formula& f) { return Formula::make(Op::Alw, {}, {}, 0, &f, nullptr); }
Formula Som(const Formula& f) { return Formula::make(Op::Som, {}, {}, 0, &f, nullptr); }
Formula Dist(const Formula& f, std::int64_t offset) { return Formula::make(Op::Dist, {}, {}, offset, &f, nullptr); }

Formula conjunction(std::span<const Formula> fs) {
  if (fs.empty()) return True();
  Formula acc = fs.front();
  for (const auto& f : fs.subspan(1)) acc = And(acc, f);
  return acc;
}

Formula disjunction(std::span<const Formula> fs) {
  if (fs.empty()) return False();
  Formula acc = fs.front();
  for (const auto& f : fs.subspan(1)) acc = Or(acc, f);
  return acc;
}

namespace {

// Binding strength: implies 1, or 2, and 3, unary/atoms 4.
int level(Op op) {
  switch (op) {
    case Op::Implies: return 1;
    case Op::Or: return 2;
    case Op::And: return 3;
    default: return 4;
  }
}

void print(const Formula& f, int min_level, std::string& out) {
  const bool paren = level(f.op()) < min_level;
  if (paren) out += '(';
  switch (f.op()) {
    case Op::True: out += "true"; break;
    case Op::False: out += "false"; break;
    case Op::Atom: out += f.name(); break;
    case Op::Eq:
    case Op::EqVar:
      out += f.name();
      out += " = ";
      out += f.other();
      break;
    case Op::LeConst:
      out += f.name();
      out += " <= ";
      out += std::to_string(f.integer());
      break;
    case Op::Not: {
      out += '!';
      // `!x = a` parses, but reads badly.
      const Op o = f.lhs().op();
      const bool compare = o == Op::Eq || o == Op::EqVar || o == Op::LeConst;
      if (compare) out += '(';
      print(f.lhs(), 4, out);
      if (compare) out += ')';
      break;
    }
    case Op::And:
      print(f.lhs(), 3, out);
      out += " & ";
      print(f.rhs(), 4, out);
      break;
    case Op::Or:
      print(f.lhs(), 2, out);
      out += " | ";
      print(f.rhs(), 3, out);
      break;
    case Op::Implies:
      print(f.lhs(), 2, out);
      out += " -> ";
      print(f.rhs(), 1, out);
      break;
    case Op::Alw:
    case Op::Som:
      out += f.op() == Op::Alw ? "Alw(" : "Som(";
      print(f.lhs(), 1, out);
      out += ')';
      break;
    case Op::Dist:
      out += "Dist(";
      print(f.lhs(), 1, out);
      out += ", ";
      out += std::to_string(f.integer());
      out += ')';
      break;
  }
  if (paren) out += ')';
}

void collect(const Formula& f, std::set<std::string>& out) {
  switch (f.op()) {
    case Op::Atom:
    case Op::Eq:
    case Op::LeConst: out.insert(f.name()); break;
    case Op::EqVar:
      out.insert(f.name());
      out.insert(f.other());
      break;
    default:
      for (std::size_t i = 0; i < f.arity(); ++i) collect(f.child(i), out);
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, 1, out);
  return out;
}

std::set<std::string> free_symbols(const Formula& f) {
  std::set<std::string> out;
  collect(f, out);
  return out;
}

std::size_t node_count(const Formula& f) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < f.arity(); ++i) n += node_count(f.child(i));
  return n;
}

std::size_t depth(const Formula& f) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < f.arity(); ++i) d = std::max(d, depth(f.child(i)));
  return d + 1;
}

bool is_local(const Formula& f) {
  if (f.op() == Op::Alw || f.op() == Op::Som) return false;
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (!is_local(f.child(i))) return false;
  return true;
}

}  // namespace hrcv::logic
