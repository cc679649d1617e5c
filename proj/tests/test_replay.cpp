#include <doctest.h>

#include <cmath>

#include "hrcv/replay/classify.hpp"
#include "hrcv/replay/distance.hpp"
#include "hrcv/replay/motion.hpp"
#include "hrcv/world/loader.hpp"
#include "hrcv/world/model.hpp"
#include "support.hpp"

using namespace hrcv;
using namespace hrcv::replay;

namespace {

const Box kUnit{{0, 0, 0}, {1, 1, 1}};

Box box(double x0, double y0, double z0, double x1, double y1, double z1) { return {{x0, y0, z0}, {x1, y1, z1}}; }

world::Scenario row_of_cells(int travel = 0) {
  std::string text = R"(
[layout]
loc L1 box 0 0 0 1 1 1
loc L2 box 1 0 0 2 1 1
loc L3 box 2 0 0 3 1 1
loc L4 box 3 0 0 4 1 1
adj L1 L2
adj L2 L3
adj L3 L4
[agents]
agent kuka robot
poi kuka p_g radius 0.05
)";
  if (travel) text += "[params]\ntravel L1 L2 " + std::to_string(travel) + "\n";
  return world::load_scenario(text);
}

logic::Trace positions(const world::Scenario& s, std::vector<std::string> cells, std::vector<int> transit) {
  auto m = world::compile(s);
  logic::Trace tr(m.symbols, logic::Bound(static_cast<int>(cells.size()) - 1));
  for (std::size_t t = 0; t < cells.size(); ++t) {
    tr.set("p_g", static_cast<int>(t), cells[t]);
    tr.set("transit_p_g", static_cast<int>(t), transit[t] != 0);
  }
  return tr;
}

}  // namespace

TEST_SUITE("distance") {
  TEST_CASE("minimum distance") {
    CHECK(aabb_min_distance(kUnit, kUnit) == 0.0);
    CHECK(aabb_min_distance(kUnit, box(2, 0, 0, 3, 1, 1)) == doctest::Approx(1.0));
    CHECK(aabb_min_distance(kUnit, box(2, 2, 2, 3, 3, 3)) == doctest::Approx(std::sqrt(3.0)));
    CHECK(aabb_min_distance(kUnit, box(1, 0, 0, 2, 1, 1)) == 0.0);
    CHECK(aabb_min_distance(box(2, 2, 2, 3, 3, 3), kUnit) == doctest::Approx(std::sqrt(3.0)));
  }

  TEST_CASE("maximum distance") {
    CHECK(aabb_max_distance(kUnit, kUnit) == doctest::Approx(std::sqrt(3.0)));
    CHECK(aabb_max_distance(kUnit, box(1, 0, 0, 2, 1, 1)) == doctest::Approx(std::sqrt(6.0)));
    Box p{{0.5, 0.5, 0.5}, {0.5, 0.5, 0.5}};
    CHECK(aabb_max_distance(p, p) == 0.0);
  }

  TEST_CASE("contact probability edge cases") {
    Box p{{0.5, 0.5, 0.5}, {0.5, 0.5, 0.5}};
    CHECK(contact_probability(p, p, 0.1, 1000, 1) == 1.0);
    CHECK(contact_probability(kUnit, box(11, 0, 0, 12, 1, 1), 0.1, 1000, 1) == 0.0);
    CHECK_THROWS(contact_probability(kUnit, kUnit, 0.1, 0, 1));
    CHECK_THROWS(contact_probability(kUnit, kUnit, -0.1, 10, 1));
  }

  TEST_CASE("contact probability is reproducible") {
    double a = contact_probability(kUnit, kUnit, 0.3, 200000, 42);
    double b = contact_probability(kUnit, kUnit, 0.3, 200000, 42);
    double c = contact_probability(kUnit, kUnit, 0.3, 200000, 43);
    CHECK(a == b);
    CHECK(a != c);
    CHECK(a > 0.0);
    CHECK(a < 1.0);
  }

  TEST_CASE("flat boxes") {
    // Zero thickness is fine; the square diagonal is below theta.
    double p = contact_probability(box(0, 0, 0, 1, 1, 0), box(0, 0, 0, 1, 1, 0), 2.0, 1000, 3);
    CHECK(p == 1.0);
  }
}

TEST_SUITE("motion") {
  TEST_CASE("single step") {
    auto s = row_of_cells();
    auto cmds = extract_motions(positions(s, {"L1", "L1", "L2"}, {0, 1, 0}), s);
    REQUIRE(cmds.size() == 1);
    CHECK(cmds[0] == MotionCommand{"p_g", "L1", "L2", 1, 2, 1});
  }

  TEST_CASE("three instant transit") {
    auto s = row_of_cells(3);
    auto cmds = extract_motions(positions(s, {"L1", "L1", "L1", "L1", "L2"}, {0, 1, 1, 1, 0}), s);
    REQUIRE(cmds.size() == 1);
    CHECK(cmds[0] == MotionCommand{"p_g", "L1", "L2", 1, 4, 3});
  }

  TEST_CASE("no movement, no commands") {
    auto s = row_of_cells();
    CHECK(extract_motions(positions(s, {"L2", "L2", "L2"}, {0, 0, 0}), s).empty());
  }

  TEST_CASE("instantaneous change") {
    auto s = row_of_cells();
    auto cmds = extract_motions(positions(s, {"L1", "L2"}, {0, 0}), s);
    REQUIRE(cmds.size() == 1);
    CHECK(cmds[0] == MotionCommand{"p_g", "L1", "L2", 0, 1, 1});
  }

  TEST_CASE("non-adjacent jump is corrupt") {
    auto s = row_of_cells();
    CHECK_THROWS_AS(extract_motions(positions(s, {"L1", "L3"}, {1, 0}), s), ReplayError);
  }

  TEST_CASE("missing symbols") {
    auto s = row_of_cells();
    logic::SymbolTable other;
    other.add_proposition("x");
    CHECK_THROWS_AS(extract_motions(logic::Trace(other, logic::Bound(1)), s), ReplayError);
  }

  TEST_CASE("interpolation midpoint") {
    auto s = row_of_cells();
    auto path = interpolate({"p_g", "L1", "L2", 0, 1, 1}, s, 0.5);
    REQUIRE(path.samples.size() == 3);
    CHECK(path.samples[0].point == Vec3{0.5, 0.5, 0.5});
    CHECK(path.samples[1].point.x == doctest::Approx(1.0));
    CHECK(path.samples[2].point == Vec3{1.5, 0.5, 0.5});
    CHECK(path.samples[2].time == 1.0);
  }

  TEST_CASE("constant speed") {
    auto s = world::load_scenario(R"(
[layout]
loc A box 0 0 0 1 1 1
loc B box 1 0 0 4 1 1
adj A B
[agents]
agent kuka robot
poi kuka p_g radius 0.05
[params]
travel A B 3
)");
    // Centers 0.5 and 2.5 apart by 2 m over 3 s.
    auto path = interpolate({"p_g", "A", "B", 2, 5, 3}, s, 0.25);
    REQUIRE(path.samples.size() == 13);
    CHECK(path.samples.front().time == 2.0);
    CHECK(path.samples.back().time == 5.0);
    for (std::size_t i = 1; i < path.samples.size(); ++i) {
      double dx = distance(path.samples[i].point, path.samples[i - 1].point);
      double dt = path.samples[i].time - path.samples[i - 1].time;
      CHECK(dx / dt == doctest::Approx(2.0 / 3.0));
    }
  }

  TEST_CASE("stationary replay holds the center") {
    auto s = row_of_cells();
    auto paths = replay_trace(positions(s, {"L3", "L3", "L3"}, {0, 0, 0}), s, 4);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].samples.size() == 9);
    for (const auto& p : paths[0].samples) CHECK(p.point == Vec3{2.5, 0.5, 0.5});
  }

  TEST_CASE("replay of a transit run") {
    auto s = row_of_cells(3);
    auto paths = replay_trace(positions(s, {"L1", "L1", "L1", "L1", "L2"}, {0, 1, 1, 1, 0}), s, 2);
    const auto& v = paths[0].samples;
    REQUIRE(v.size() == 9);
    CHECK(v[0].point.x == 0.5);
    CHECK(v[2].point.x == 0.5);
    CHECK(v[3].point.x == doctest::Approx(0.5 + 1.0 / 6));
    CHECK(v[8].point.x == 1.5);
    CHECK(v[8].time == 4.0);
  }
}

TEST_SUITE("classify") {
  TEST_CASE("verdict rule") {
    auto same = classify_cells("h", 3, kUnit, kUnit, 0.1, {10000, 1});
    CHECK(same.verdict == Verdict::Possible);
    CHECK(same.d_min == 0.0);
    CHECK(same.d_max == doctest::Approx(std::sqrt(3.0)));
    CHECK(same.contact_probability > 0.0);
    CHECK(same.contact_probability < 0.02);

    auto far = classify_cells("h", 3, kUnit, box(4, 0, 0, 5, 1, 1), 0.1);
    CHECK(far.verdict == Verdict::Spurious);
    CHECK(far.d_min == doctest::Approx(3.0));
    CHECK(far.contact_probability == 0.0);

    Box p{{0.5, 0.5, 0.5}, {0.5, 0.5, 0.5}};
    auto point = classify_cells("h", 3, p, p, 0.1);
    CHECK(point.verdict == Verdict::Confirmed);
    CHECK(point.contact_probability == 1.0);
  }

  TEST_CASE("handover counterexample") {
    auto s = world::load_scenario_file(test::scenario_path("handover.scn"));
    auto r = world::verify(s);
    REQUIRE(r.trace);
    auto rows = classify(*r.trace, s, {20000, 5});
    REQUIRE(rows.size() == r.violations.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].hazard == r.violations[i].hazard);
      CHECK(rows[i].instant == r.violations[i].instant);
      CHECK(rows[i].verdict == Verdict::Possible);
      CHECK(rows[i].contact_threshold == doctest::Approx(0.1));
    }
  }

  TEST_CASE("point cells confirm") {
    auto s = world::load_scenario_file(test::scenario_path("handover_points.scn"));
    auto r = world::verify(s);
    REQUIRE(r.trace);
    auto rows = classify(*r.trace, s);
    REQUIRE_FALSE(rows.empty());
    for (const auto& row : rows) CHECK(row.verdict == Verdict::Confirmed);
  }

  TEST_CASE("to_string") {
    CHECK(std::string(to_string(Verdict::Confirmed)) == "CONFIRMED");
    CHECK(std::string(to_string(Verdict::Possible)) == "POSSIBLE");
    CHECK(std::string(to_string(Verdict::Spurious)) == "SPURIOUS");
  }
}
