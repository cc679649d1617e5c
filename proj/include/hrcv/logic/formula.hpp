#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>

namespace hrcv::logic {

// Closed set of connectives. Dist offsets are signed; negative offsets look
// into the past, so there are no separate past operators.
enum class Op : std::uint8_t {
  True,
  False,
  Atom,     // proposition
  Eq,       // variable = constant
  EqVar,    // variable = variable
  LeConst,  // variable <= integer (integer-valued domains)
  Not,
  And,
  Or,
  Implies,
  Alw,
  Som,
  Dist,
};

const char* op_name(Op op) noexcept;

/// Immutable, structurally shared formula tree.
class Formula {
 public:
  Op op() const noexcept;

  // Atom: proposition; Eq/EqVar/LeConst: left-hand variable.
  const std::string& name() const noexcept;
  // Eq: constant symbol; EqVar: right-hand variable.
  const std::string& other() const noexcept;
  // LeConst: bound; Dist: offset.
  std::int64_t integer() const noexcept;

  std::size_t arity() const noexcept;
  const Formula& child(std::size_t i) const;
  const Formula& lhs() const { return child(0); }
  const Formula& rhs() const { return child(1); }

  // Identity of the shared node; equal identity implies structural equality.
  const void* identity() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Formula make(Op op, std::string name, std::string other, std::int64_t integer,
                      const Formula* a, const Formula* b);

  friend Formula True();
  friend Formula False();
  friend Formula Atom(std::string);
  friend Formula Eq(std::string, std::string);
  friend Formula EqVar(std::string, std::string);
  friend Formula LeConst(std::string, std::int64_t);
  friend Formula Not(const Formula&);
  friend Formula And(const Formula&, const Formula&);
  friend Formula Or(const Formula&, const Formula&);
  friend Formula Implies(const Formula&, const Formula&);
  friend Formula Alw(const Formula&);
  friend Formula Som(const Formula&);
  friend Formula Dist(const Formula&, std::int64_t);

  std::shared_ptr<const Node> node_;
};

Formula True();
Formula False();
Formula Atom(std::string prop);
Formula Eq(std::string var, std::string value);
Formula EqVar(std::string var, std::string other_var);
Formula LeConst(std::string var, std::int64_t bound);
Formula Not(const Formula& f);
Formula And(const Formula& a, const Formula& b);
Formula Or(const Formula& a, const Formula& b);
Formula Implies(const Formula& a, const Formula& b);
Formula Alw(const Formula& f);
Formula Som(const Formula& f);
Formula Dist(const Formula& f, std::int64_t offset);

// Left folds; the empty conjunction is True and the empty disjunction False.
Formula conjunction(std::span<const Formula> fs);
Formula disjunction(std::span<const Formula> fs);

/// Text in the formula grammar; parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);

std::set<std::string> free_symbols(const Formula& f);

std::size_t node_count(const Formula& f);
std::size_t depth(const Formula& f);

// True when f contains no Alw/Som, i.e. its value at t depends only on a
// bounded window around t.
bool is_local(const Formula& f);

}  // namespace hrcv::logic
