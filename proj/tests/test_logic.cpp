#include <doctest.h>

#include "hrcv/logic/evaluator.hpp"
#include "hrcv/logic/formula.hpp"
#include "hrcv/logic/parser.hpp"
#include "support.hpp"

using namespace hrcv::logic;
using hrcv::test::start_stop_symbols;
using hrcv::test::start_stop_trace;

namespace {

SymbolTable cell_symbols() {
  SymbolTable s;
  s.add_proposition("start");
  s.add_proposition("stop");
  s.add_variable("p_g", {"L1", "L2", "L3"});
  s.add_variable("p_a", {"L1", "L2", "L3"});
  s.add_variable("risk", {"0", "1", "2", "5"});
  return s;
}

const char* kResponse = "Alw(start -> Dist(stop,3) & !(start & stop))";

}  // namespace

TEST_SUITE("symbols") {
  TEST_CASE("identifiers") {
    CHECK(is_identifier("p_g"));
    CHECK(is_identifier("_x9"));
    CHECK_FALSE(is_identifier(""));
    CHECK_FALSE(is_identifier("9x"));
    CHECK_FALSE(is_identifier("a-b"));
  }

  TEST_CASE("declaration errors") {
    SymbolTable s;
    s.add_proposition("p");
    CHECK_THROWS_AS(s.add_proposition("p"), Error);
    CHECK_THROWS_AS(s.add_variable("p", {"a"}), Error);
    CHECK_THROWS_AS(s.add_proposition("true"), Error);
    CHECK_THROWS_AS(s.add_proposition("1p"), Error);
    CHECK_THROWS_AS(s.add_variable("x", {}), Error);
    CHECK_THROWS_AS(s.add_variable("x", {"a", "a"}), Error);
    CHECK_THROWS_AS(s.index_of("nope"), Error);
  }

  TEST_CASE("integer domains") {
    auto s = cell_symbols();
    CHECK(s["risk"].integer_domain());
    CHECK_FALSE(s["p_g"].integer_domain());
    CHECK(s["p_g"].value_index("L3") == 2u);
    CHECK_FALSE(s["p_g"].value_index("L9").has_value());
  }
}

TEST_SUITE("parser") {
  TEST_CASE("bounded response formula") {
    auto f = parse_formula(kResponse, start_stop_symbols());
    auto expected = Alw(Implies(Atom("start"), And(Dist(Atom("stop"), 3), Not(And(Atom("start"), Atom("stop"))))));
    CHECK(f == expected);
  }

  TEST_CASE("atoms") {
    auto s = cell_symbols();
    CHECK(parse_formula("start", s) == Atom("start"));
    CHECK(parse_formula("Som(p_g = L3)", s) == Som(Eq("p_g", "L3")));
    CHECK(parse_formula("p_g = p_a", s) == EqVar("p_g", "p_a"));
    CHECK(parse_formula("risk <= 2", s) == LeConst("risk", 2));
    CHECK(parse_formula("risk = 5", s) == Eq("risk", "5"));
    CHECK(parse_formula("true | false", s) == Or(True(), False()));
    CHECK(parse_formula("Dist(start, -2)", s) == Dist(Atom("start"), -2));
  }

  TEST_CASE("precedence and associativity") {
    auto s = start_stop_symbols();
    CHECK(parse_formula("!start & stop | start", s) == Or(And(Not(Atom("start")), Atom("stop")), Atom("start")));
    CHECK(parse_formula("start -> stop -> start", s) ==
          Implies(Atom("start"), Implies(Atom("stop"), Atom("start"))));
    CHECK(parse_formula("start | stop & start", s) == Or(Atom("start"), And(Atom("stop"), Atom("start"))));
    CHECK(parse_formula("(start -> stop) -> start", s) ==
          Implies(Implies(Atom("start"), Atom("stop")), Atom("start")));
  }

  TEST_CASE("errors carry positions") {
    auto s = cell_symbols();
    try {
      parse_formula("start &\n  & stop", s);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_formula("ghost", s), ParseError);
    CHECK_THROWS_AS(parse_formula("Dist(start, stop)", s), ParseError);
    CHECK_THROWS_AS(parse_formula("Dist(start, 1.5)", s), ParseError);
    CHECK_THROWS_AS(parse_formula("p_g", s), ParseError);
    CHECK_THROWS_AS(parse_formula("start = L1", s), ParseError);
    CHECK_THROWS_AS(parse_formula("p_g = L9", s), ParseError);
    CHECK_THROWS_AS(parse_formula("p_g <= 2", s), ParseError);
    CHECK_THROWS_AS(parse_formula("p_g = risk", s), ParseError);
    CHECK_THROWS_AS(parse_formula("start stop", s), ParseError);
    CHECK_THROWS_AS(parse_formula("Alw(start", s), ParseError);
    CHECK_THROWS_AS(parse_formula("", s), ParseError);
  }

  TEST_CASE("printing re-parses") {
    auto s = cell_symbols();
    for (const char* text : {kResponse, "!(start | stop) & Som(p_g = L3)", "start -> stop -> Dist(!start, -1)",
                             "(start -> stop) -> start", "risk <= 1 | p_g = p_a", "!!start"}) {
      auto f = parse_formula(text, s);
      CHECK(parse_formula(to_string(f), s) == f);
    }
    CHECK(to_string(parse_formula("(start & stop) & start", s)) == "start & stop & start");
  }
}

TEST_SUITE("evaluator") {
  TEST_CASE("response formula on the reference history") {
    auto f = parse_formula(kResponse, start_stop_symbols());
    auto tr = start_stop_trace(30, {5}, {8});
    CHECK(evaluate(f, tr, 0));
    CHECK(evaluate(Dist(Atom("stop"), 3), tr, 5));
    CHECK_FALSE(evaluate(Dist(Atom("stop"), 3), tr, 28));
    CHECK_FALSE(evaluate(f, start_stop_trace(30, {5}, {7}), 0));
    CHECK_FALSE(evaluate(f, start_stop_trace(30, {28}, {}), 0));
  }

  TEST_CASE("Alw and Som span the whole trace") {
    auto tr = start_stop_trace(4, {0, 1, 2, 3, 4}, {2});
    for (int t = 0; t <= 4; ++t) {
      CHECK(evaluate(Alw(Atom("start")), tr, t));
      CHECK(evaluate(Som(Atom("stop")), tr, t));
      CHECK_FALSE(evaluate(Alw(Atom("stop")), tr, t));
    }
  }

  TEST_CASE("finite variables") {
    auto s = cell_symbols();
    Trace tr(s, Bound(1));
    tr.set("p_g", 0, "L2");
    tr.set("p_a", 0, "L2");
    tr.set("p_a", 1, "L3");
    tr.set("risk", 1, "5");
    CHECK(evaluate(EqVar("p_g", "p_a"), tr, 0));
    CHECK_FALSE(evaluate(EqVar("p_g", "p_a"), tr, 1));
    CHECK(evaluate(Eq("p_g", "L1"), tr, 1));
    CHECK(evaluate(LeConst("risk", 0), tr, 0));
    CHECK_FALSE(evaluate(LeConst("risk", 2), tr, 1));
    CHECK(evaluate(LeConst("risk", 5), tr, 1));
    CHECK(evaluate(LeConst("risk", 3), tr, 0));
    CHECK_FALSE(evaluate(LeConst("risk", -1), tr, 0));
  }

  TEST_CASE("errors") {
    auto tr = start_stop_trace(3, {}, {});
    CHECK_THROWS_AS(evaluate(Atom("start"), tr, 4), Error);
    CHECK_THROWS_AS(evaluate(Atom("start"), tr, -1), Error);
    CHECK_THROWS_AS(evaluate(Atom("ghost"), tr, 0), Error);
    CHECK_THROWS_AS(evaluate(Eq("start", "x"), tr, 0), Error);
    auto s = cell_symbols();
    Trace cells(s, Bound(0));
    CHECK_THROWS_AS(evaluate(Eq("p_g", "L7"), cells, 0), Error);
    CHECK_THROWS_AS(evaluate(LeConst("p_g", 1), cells, 0), Error);
  }

  TEST_CASE("all instants") {
    auto tr = start_stop_trace(3, {1}, {});
    Evaluator ev(Dist(Atom("start"), -1), tr.symbols());
    CHECK(ev.all(tr) == std::vector<bool>{false, false, true, false});
  }
}

TEST_SUITE("formula") {
  TEST_CASE("free symbols") {
    auto f = parse_formula(kResponse, start_stop_symbols());
    CHECK(free_symbols(f) == std::set<std::string>{"start", "stop"});
    CHECK(free_symbols(Atom("p")) == std::set<std::string>{"p"});
    CHECK(free_symbols(Som(Eq("p_g", "L3"))) == std::set<std::string>{"p_g"});
    CHECK(free_symbols(EqVar("a", "b")) == std::set<std::string>{"a", "b"});
    CHECK(free_symbols(True()).empty());
  }

  TEST_CASE("shape helpers") {
    auto f = And(Atom("p"), Dist(Not(Atom("q")), 1));
    CHECK(node_count(f) == 5);
    CHECK(depth(f) == 4);
    CHECK(is_local(f));
    CHECK_FALSE(is_local(Not(Alw(Atom("p")))));
    std::vector<Formula> none;
    CHECK(conjunction(none) == True());
    CHECK(disjunction(none) == False());
    CHECK(f.child(1).op() == Op::Dist);
    CHECK(f.child(1).integer() == 1);
  }
}

TEST_SUITE("trace") {
  TEST_CASE("defaults and setters") {
    auto s = cell_symbols();
    Trace tr(s, Bound(2));
    CHECK(tr.k() == 2);
    CHECK(tr.value("p_g", 2) == "L1");
    CHECK_FALSE(tr.prop("start", 0));
    tr.set("start", 1, true);
    CHECK(tr.prop("start", 1));
    CHECK_THROWS_AS(tr.set("p_g", 0, "L9"), Error);
    CHECK_THROWS_AS(tr.set("p_g", 0, true), Error);
    CHECK_THROWS_AS(tr.prop("start", 3), Error);
    CHECK_THROWS_AS(Bound(-1), Error);
  }
}
