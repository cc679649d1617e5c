#include <doctest.h>

#include "hrcv/sat/cnf.hpp"
#include "support.hpp"

using namespace hrcv::sat;
using hrcv::test::Rng;

namespace {

Cnf make(int vars, std::vector<std::vector<int>> clauses) {
  Cnf c;
  c.num_vars = vars;
  for (const auto& cl : clauses) {
    Clause out;
    for (int x : cl) out.push_back(Lit::from_dimacs(x));
    c.add_clause(out);
  }
  return c;
}

}  // namespace

TEST_SUITE("sat") {
  TEST_CASE("literals") {
    auto l = Lit::neg(3);
    CHECK(l.var() == 3);
    CHECK_FALSE(l.positive());
    CHECK(l.dimacs() == -3);
    CHECK((~l).dimacs() == 3);
    CHECK(Lit::from_dimacs(-3) == l);
  }

  TEST_CASE("cnf construction") {
    Cnf c;
    CHECK(c.new_var() == 1);
    CHECK_THROWS_AS(c.add_clause({Lit::pos(2)}), Error);
    c.add_clause({});
    CHECK(c.trivially_unsat);
    CHECK(c.clauses.empty());
  }

  TEST_CASE("solve basics") {
    CHECK_FALSE(solve(make(1, {{1}, {-1}})).is_sat());
    auto r = solve(make(2, {{1, 2}, {-1}}));
    REQUIRE(r.is_sat());
    CHECK(r.model().value(2));
    CHECK_FALSE(r.model().value(1));
    CHECK(solve(Cnf{}).is_sat());
    CHECK(solve(make(3, {})).is_sat());
    CHECK_FALSE(solve(make(1, {{}})).is_sat());
    CHECK_THROWS(SolveResult::unsat().model());
  }

  TEST_CASE("pigeonhole") {
    auto php = hrcv::test::pigeonhole(4, 3);
    CHECK(php.num_vars == 12);
    CHECK_FALSE(solve(php).is_sat());
    CHECK_FALSE(brute_force_solve(php).is_sat());
    CHECK_FALSE(solve(hrcv::test::pigeonhole(6, 5)).is_sat());
    auto fits = solve(hrcv::test::pigeonhole(3, 3));
    REQUIRE(fits.is_sat());
    CHECK(satisfies(hrcv::test::pigeonhole(3, 3), fits.model()));
  }

  TEST_CASE("brute force") {
    auto r = brute_force_solve(make(1, {{1}}));
    REQUIRE(r.is_sat());
    CHECK(r.model().value(1));
    CHECK(brute_force_solve(make(3, {})).is_sat());
    auto x = brute_force_solve(make(2, {{1, 2}, {-1, -2}}));
    REQUIRE(x.is_sat());
    CHECK(x.model().value(1) != x.model().value(2));
    CHECK_THROWS_AS(brute_force_solve(make(25, {})), Error);
  }

  TEST_CASE("solver agrees with brute force on random formulas") {
    Rng rng(7);
    int sat = 0;
    for (int i = 0; i < 200; ++i) {
      auto c = hrcv::test::random_cnf(rng, 12, 60);
      auto a = solve(c), b = brute_force_solve(c);
      CHECK(a.is_sat() == b.is_sat());
      if (a.is_sat()) {
        ++sat;
        CHECK(satisfies(c, a.model()));
      }
    }
    CHECK(sat > 20);
    CHECK(sat < 190);
  }

  TEST_CASE("dimacs writing") {
    CHECK(write_dimacs(make(2, {{1, -2}})) == "p cnf 2 1\n1 -2 0\n");
    CHECK(write_dimacs(make(1, {{1}, {-1}})) == "p cnf 1 2\n1 0\n-1 0\n");
    CHECK(write_dimacs(Cnf{}) == "p cnf 0 0\n");
  }

  TEST_CASE("dimacs reading") {
    auto c = read_dimacs("p cnf 2 1\n1 -2 0\n");
    CHECK(c == make(2, {{1, -2}}));
    CHECK(read_dimacs("c comment\np cnf 2 1\n1 -2 0\n") == c);
    CHECK(read_dimacs("p cnf 2 2\n1\n -2 0 2 0\n") == make(2, {{1, -2}, {2}}));
    CHECK_THROWS_AS(read_dimacs("p cnf 1 1\n2 0\n"), Error);
    CHECK_THROWS_AS(read_dimacs("p cnf 2 1\n1 -2\n"), Error);
    CHECK_THROWS_AS(read_dimacs("p dnf 2 1\n1 0\n"), Error);
    CHECK_THROWS_AS(read_dimacs("p cnf 2 2\n1 0\n"), Error);
    CHECK_THROWS_AS(read_dimacs("1 0\np cnf 1 1\n"), Error);
    CHECK_THROWS_AS(read_dimacs(""), Error);
    auto unsat = read_dimacs("p cnf 1 1\n0\n");
    CHECK(unsat.trivially_unsat);
  }
}
