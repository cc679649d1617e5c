#pragma once

#include <string>
#include <string_view>

#include "hrcv/logic/formula.hpp"
#include "hrcv/logic/symbols.hpp"

namespace hrcv::logic {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// Grammar, loosest binding first; `->` is right-associative:
//
//   formula := implies
//   implies := or ("->" implies)?
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "!" unary | "Alw(" formula ")" | "Som(" formula ")"
//            | "Dist(" formula "," int ")" | atom | "(" formula ")"
//   atom    := "true" | "false" | ident | ident "=" ident | ident "=" int
//            | ident "<=" int
//
// `a = b` is EqVar when b is a declared variable, otherwise a constant of a's
// domain. `true`/`false` are reserved.
Formula parse_formula(std::string_view text, const SymbolTable& symbols);

}  // namespace hrcv::logic
