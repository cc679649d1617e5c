#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "hrcv/encode/encoder.hpp"
#include "hrcv/logic/evaluator.hpp"
#include "hrcv/logic/parser.hpp"
#include "hrcv/replay/classify.hpp"
#include "hrcv/replay/distance.hpp"
#include "hrcv/replay/motion.hpp"
#include "hrcv/world/loader.hpp"
#include "hrcv/world/model.hpp"
#include "support.hpp"

using namespace hrcv;
using namespace hrcv::logic;
using test::Rng;
using test::uniform;

namespace {

SymbolTable mixed_symbols() {
  SymbolTable s;
  s.add_proposition("p");
  s.add_proposition("q");
  s.add_variable("x", {"a", "b", "c"});
  s.add_variable("y", {"a", "b", "c"});
  s.add_variable("n", {"0", "1", "2"});
  return s;
}

// Som and Dist only under an even number of negations, Alw only under an
// odd number. Out-of-bound Dist is false, so a Dist in negative position can
// turn true when the bound grows and break the witness.
bool existential(const Formula& f, bool positive = true) {
  switch (f.op()) {
    case Op::Not: return existential(f.child(0), !positive);
    case Op::Implies: return existential(f.lhs(), !positive) && existential(f.rhs(), positive);
    case Op::And:
    case Op::Or: return existential(f.lhs(), positive) && existential(f.rhs(), positive);
    case Op::Alw: return !positive && existential(f.child(0), positive);
    case Op::Som:
    case Op::Dist: return positive && existential(f.child(0), positive);
    default: return true;
  }
}

// Push negations through Alw/Som/And/Or/Implies, removing double negation.
Formula negation_normal(const Formula& f, bool negate) {
  switch (f.op()) {
    case Op::Not: return negation_normal(f.child(0), !negate);
    case Op::And:
    case Op::Or: {
      auto a = negation_normal(f.lhs(), negate), b = negation_normal(f.rhs(), negate);
      return (f.op() == Op::And) != negate ? And(a, b) : Or(a, b);
    }
    case Op::Implies:
      return negate ? And(negation_normal(f.lhs(), false), negation_normal(f.rhs(), true))
                    : Or(negation_normal(f.lhs(), true), negation_normal(f.rhs(), false));
    case Op::Alw: return negate ? Som(negation_normal(f.child(0), true)) : Alw(negation_normal(f.child(0), false));
    case Op::Som: return negate ? Alw(negation_normal(f.child(0), true)) : Som(negation_normal(f.child(0), false));
    default: return negate ? Not(f) : f;
  }
}

double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Box random_box(Rng& rng) {
  Box b;
  for (int a = 0; a < 3; ++a) {
    double lo = uniform_real(rng, -5, 5);
    double len = uniform(rng, 0, 9) == 0 ? 0.0 : uniform_real(rng, 0, 3);
    (a == 0 ? b.min.x : a == 1 ? b.min.y : b.min.z) = lo;
    (a == 0 ? b.max.x : a == 1 ? b.max.y : b.max.z) = lo + len;
  }
  return b;
}

Vec3 point_in(const Box& b, Rng& rng) {
  auto e = b.extent();
  return {b.min.x + uniform_real(rng, 0, 1) * e.x, b.min.y + uniform_real(rng, 0, 1) * e.y,
          b.min.z + uniform_real(rng, 0, 1) * e.z};
}

std::array<Vec3, 8> corners(const Box& b) {
  std::array<Vec3, 8> out;
  for (int i = 0; i < 8; ++i)
    out[i] = {(i & 1) ? b.max.x : b.min.x, (i & 2) ? b.max.y : b.min.y, (i & 4) ? b.max.z : b.min.z};
  return out;
}

}  // namespace

TEST_SUITE("logic properties") {
  TEST_CASE("Dist composition") {
    auto s = mixed_symbols();
    Rng rng(101);
    test::FormulaGen gen{s};
    for (int i = 0; i < 500; ++i) {
      auto f = gen(rng, 3);
      Bound k(uniform(rng, 0, 6));
      auto tr = test::random_trace(s, k, rng);
      int d1 = uniform(rng, -3, 3), d2 = uniform(rng, -3, 3);
      for (int t = 0; t <= k.k; ++t) {
        if (t + d1 < 0 || t + d1 > k.k || t + d1 + d2 < 0 || t + d1 + d2 > k.k) continue;
        CHECK(evaluate(Dist(Dist(f, d2), d1), tr, t) == evaluate(Dist(f, d1 + d2), tr, t));
      }
    }
  }

  TEST_CASE("Alw and Som ignore the evaluation instant") {
    auto s = mixed_symbols();
    Rng rng(102);
    test::FormulaGen gen{s};
    for (int i = 0; i < 300; ++i) {
      auto f = gen(rng, 3);
      Bound k(uniform(rng, 0, 6));
      auto tr = test::random_trace(s, k, rng);
      for (auto g : {Alw(f), Som(f)}) {
        Evaluator ev(g, s);
        auto v = ev.all(tr);
        CHECK(std::all_of(v.begin(), v.end(), [&](bool b) { return b == v[0]; }));
      }
    }
  }

  TEST_CASE("duality and De Morgan") {
    auto s = mixed_symbols();
    Rng rng(103);
    test::FormulaGen gen{s};
    for (int i = 0; i < 1000; ++i) {
      auto f = gen(rng, 3), g = gen(rng, 3);
      Bound k(uniform(rng, 0, 5));
      auto tr = test::random_trace(s, k, rng);
      int t = uniform(rng, 0, k.k);
      CHECK(evaluate(Not(Alw(f)), tr, t) == evaluate(Som(Not(f)), tr, t));
      CHECK(evaluate(Not(And(f, g)), tr, t) == evaluate(Or(Not(f), Not(g)), tr, t));
      CHECK(evaluate(Not(Or(f, g)), tr, t) == evaluate(And(Not(f), Not(g)), tr, t));
      CHECK(evaluate(Not(Not(f)), tr, t) == evaluate(f, tr, t));
      auto h = Not(Implies(f, g));
      CHECK(evaluate(h, tr, t) == evaluate(negation_normal(h, false), tr, t));
    }
  }

  TEST_CASE("print then parse is the identity") {
    auto s = mixed_symbols();
    Rng rng(104);
    test::FormulaGen gen{s};
    for (int i = 0; i < 1000; ++i) {
      auto f = gen(rng, 4);
      auto text = to_string(f);
      CHECK_MESSAGE(parse_formula(text, s) == f, text);
    }
  }
}

TEST_SUITE("sat properties") {
  TEST_CASE("DIMACS round trip") {
    Rng rng(201);
    for (int i = 0; i < 300; ++i) {
      auto c = test::random_cnf(rng, 20, 90);
      CHECK(sat::read_dimacs(sat::write_dimacs(c)) == c);
    }
  }

  TEST_CASE("renaming invariance") {
    Rng rng(202);
    for (int i = 0; i < 200; ++i) {
      auto c = test::random_cnf(rng, 14, 70);
      std::vector<int> perm(static_cast<std::size_t>(c.num_vars));
      std::iota(perm.begin(), perm.end(), 1);
      std::shuffle(perm.begin(), perm.end(), rng);
      sat::Cnf renamed;
      renamed.num_vars = c.num_vars;
      for (const auto& cl : c.clauses) {
        sat::Clause out;
        for (auto l : cl) {
          int v = perm[static_cast<std::size_t>(l.var() - 1)];
          out.push_back(l.positive() ? sat::Lit::pos(v) : sat::Lit::neg(v));
        }
        renamed.add_clause(out);
      }
      CHECK(sat::solve(c).is_sat() == sat::solve(renamed).is_sat());
    }
  }
}

TEST_SUITE("encode properties") {
  TEST_CASE("sound witnesses and size bound") {
    auto s = mixed_symbols();
    Rng rng(301);
    test::FormulaGen gen{s};
    std::size_t cells_per_instant = 0;
    for (const auto& sym : s) cells_per_instant += sym.kind == SymbolKind::Proposition ? 1 : sym.domain.size();
    for (int i = 0; i < 300; ++i) {
      auto f = gen(rng, 4);
      Bound k(uniform(rng, 0, 8));
      auto e = encode::encode(f, s, k);
      auto bound = static_cast<std::size_t>(k.k + 1) * (cells_per_instant + node_count(f));
      CHECK(static_cast<std::size_t>(e.cnf.num_vars) <= bound);
      auto r = encode::check(f, s, k);
      if (r.is_sat()) CHECK(evaluate(f, *r.trace, 0));
    }
  }

  TEST_CASE("existential witnesses survive a longer bound") {
    auto s = mixed_symbols();
    Rng rng(302);
    test::FormulaGen gen{s};
    int checked = 0;
    while (checked < 150) {
      auto f = gen(rng, 3);
      if (!existential(f)) continue;
      Bound k(uniform(rng, 0, 5));
      if (!encode::check(f, s, k).is_sat()) continue;
      ++checked;
      CHECK_MESSAGE(encode::check(f, s, Bound(k.k + 1)).is_sat(), to_string(f));
    }
  }
}

TEST_SUITE("geometry properties") {
  TEST_CASE("distance bounds sandwich sampled pairs") {
    Rng rng(401);
    for (int i = 0; i < 1000; ++i) {
      auto a = random_box(rng), b = random_box(rng);
      double lo = replay::aabb_min_distance(a, b), hi = replay::aabb_max_distance(a, b);
      CHECK(lo <= hi);
      for (int j = 0; j < 100; ++j) {
        double d = distance(point_in(a, rng), point_in(b, rng));
        CHECK(lo <= d + 1e-12);
        CHECK(d <= hi + 1e-12);
      }
    }
  }

  TEST_CASE("verdicts agree with probabilities") {
    Rng rng(402);
    for (int i = 0; i < 300; ++i) {
      auto a = random_box(rng), b = random_box(rng);
      double theta = uniform_real(rng, 0, 4);
      auto row = replay::classify_cells("h", 0, a, b, theta, {2000, 9});
      if (row.verdict == replay::Verdict::Confirmed) CHECK(row.contact_probability == 1.0);
      if (row.verdict == replay::Verdict::Spurious) CHECK(row.contact_probability == 0.0);
      CHECK(row.d_min <= row.d_max);
    }
  }

  TEST_CASE("corner oracle") {
    Rng rng(403);
    for (int i = 0; i < 200; ++i) {
      auto a = random_box(rng), b = random_box(rng);
      double best = 0;
      for (auto p : corners(a))
        for (auto q : corners(b)) best = std::max(best, distance(p, q));
      CHECK(replay::aabb_max_distance(a, b) == doctest::Approx(best).epsilon(1e-9));
    }
  }
}

TEST_SUITE("scenario properties") {
  TEST_CASE("replays of counterexamples") {
    for (const char* name : {"handover.scn", "handover_small.scn", "handover_points.scn"}) {
      auto s = world::load_scenario_file(test::scenario_path(name));
      for (auto m : {std::optional<world::MitigationKind>{}, std::optional{world::MitigationKind::SlowDown},
                     std::optional{world::MitigationKind::Retract}}) {
        auto sc = m ? world::apply_mitigation(s, {*m, "haz1"}) : s;
        auto r = world::verify(sc);
        REQUIRE(r.trace);
        auto compiled = world::compile(sc);
        for (const auto& ax : compiled.axioms)
          if (ax.label.rfind("mitigation", 0) == 0) CHECK_MESSAGE(evaluate(ax.formula, *r.trace, 0), ax.label);

        const int sub = 4;
        auto paths = replay::replay_trace(*r.trace, sc, sub);
        auto pois = sc.pois();
        for (std::size_t i = 0; i < paths.size(); ++i) {
          const auto& v = paths[i].samples;
          for (std::size_t j = 1; j < v.size(); ++j) CHECK(v[j].time > v[j - 1].time);
          for (int t = 0; t <= r.trace->k(); ++t) {
            if (r.trace->prop(world::names::transit(pois[i]->id), t)) continue;
            // Outside transit runs a whole instant sits exactly at the cell center.
            auto c = sc.layout.at(r.trace->value(pois[i]->id, t)).box.center();
            CHECK(v[static_cast<std::size_t>(t * sub)].point == c);
          }
        }
        for (const auto& cmd : replay::extract_motions(*r.trace, sc)) {
          auto path = replay::interpolate(cmd, sc, 0.25 * sc.dt);
          double len = distance(sc.layout.at(cmd.source).box.center(), sc.layout.at(cmd.destination).box.center());
          double speed = len / (cmd.duration * sc.dt);
          for (std::size_t j = 1; j < path.samples.size(); ++j)
            CHECK(distance(path.samples[j].point, path.samples[j - 1].point) <=
                  speed * (path.samples[j].time - path.samples[j - 1].time) + 1e-9);
        }
      }
    }
  }
}
