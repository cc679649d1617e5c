#include "hrcv/world/model.hpp"

#include <algorithm>

#include "hrcv/encode/encoder.hpp"
#include "hrcv/logic/evaluator.hpp"
#include "hrcv/oracle/enumerate.hpp"

namespace hrcv::world {

using logic::Formula;
namespace L = hrcv::logic;

const char* to_string(Speed s) noexcept {
  switch (s) {
    case Speed::Normal: return "normal";
    case Speed::Slow: return "slow";
    case Speed::Stopped: return "stopped";
  }
  return "?";
}

int risk_value(int severity, int exposure, int avoidability, Speed speed) {
  for (int v : {severity, exposure, avoidability})
    if (v < 0 || v > kMaxLevel) throw ScenarioError("risk level " + std::to_string(v) + " outside 0..2");
  if (speed == Speed::Stopped) return 0;
  if (speed == Speed::Slow) severity = std::max(0, severity - 1);
  return severity + exposure + avoidability;
}

namespace names {
std::string transit(const std::string& poi) { return "transit_" + poi; }
std::string speed(const std::string& robot) { return "speed_" + robot; }
std::string risk(const std::string& hazard) { return "risk_" + hazard; }
std::string done(std::size_t step) { return "done_" + std::to_string(step); }
}  // namespace names

Formula CompiledModel::model() const {
  std::vector<Formula> fs;
  for (const auto& a : axioms) fs.push_back(a.formula);
  return L::conjunction(fs);
}

Formula CompiledModel::query() const { return L::And(model(), violation); }

std::vector<Formula> CompiledModel::query_conjuncts() const {
  std::vector<Formula> fs;
  for (const auto& a : axioms) fs.push_back(a.formula);
  fs.push_back(violation);
  return fs;
}

const Formula* CompiledModel::find(const std::string& label) const {
  for (const auto& a : axioms)
    if (a.label == label) return &a.formula;
  return nullptr;
}

namespace {

Formula prev(const Formula& f, int n = 1) { return L::Dist(f, -n); }
Formula iff(const Formula& a, const Formula& b) { return L::And(L::Implies(a, b), L::Implies(b, a)); }
Formula all(const std::vector<Formula>& fs) { return L::conjunction(fs); }
Formula any(const std::vector<Formula>& fs) { return L::disjunction(fs); }

const char* kSpeedValues[] = {"normal", "slow", "stopped"};

class Compiler {
 public:
  explicit Compiler(const Scenario& s) : s_(s) {}

  CompiledModel run() {
    s_.validate();
    m_.bound = L::Bound(s_.bound);
    declare();
    for (const auto* p : s_.pois()) motion(*p);
    for (const auto& a : s_.agents)
      if (a.kind == AgentKind::Robot) speed(a);
    for (const auto& h : s_.hazards) hazard(h);
    task();
    std::vector<Formula> over;
    for (const auto& h : s_.hazards) over.push_back(L::Not(L::LeConst(names::risk(h.id), s_.threshold)));
    m_.violation = L::Som(any(over));
    return std::move(m_);
  }

 private:
  void declare() {
    try {
      const auto locs = s_.layout.ids();
      for (const auto* p : s_.pois()) m_.symbols.add_variable(p->id, locs);
      for (const auto* p : s_.pois()) m_.symbols.add_proposition(names::transit(p->id));
      // Hazards precede speed and risk: both are functions of them.
      for (const auto& h : s_.hazards) m_.symbols.add_proposition(h.id);
      for (const auto& a : s_.agents)
        if (a.kind == AgentKind::Robot)
          m_.symbols.add_variable(names::speed(a.id), {std::begin(kSpeedValues), std::end(kSpeedValues)});
      std::vector<std::string> levels;
      for (int r = 0; r <= kMaxRisk; ++r) levels.push_back(std::to_string(r));
      for (const auto& h : s_.hazards) m_.symbols.add_variable(names::risk(h.id), levels);
      for (std::size_t i = 1; i <= s_.task.size(); ++i) m_.symbols.add_proposition(names::done(i));
    } catch (const L::Error& e) {
      throw ScenarioError(std::string("scenario symbols clash: ") + e.what());
    }
  }

  void add(std::string label, Formula f) { m_.axioms.push_back({std::move(label), std::move(f)}); }

  Formula at(const std::string& poi, const std::string& loc) const { return L::Eq(poi, loc); }

  // Position at t equals position at t-1 (vacuous at instant 0).
  Formula unchanged(const std::string& poi) const {
    std::vector<Formula> fs;
    for (const auto& l : s_.layout.locations()) fs.push_back(L::Implies(prev(at(poi, l.id)), at(poi, l.id)));
    return all(fs);
  }

  const Agent* robot_of(const PointOfInterest& p) const {
    const Agent& a = s_.owner(p);
    return a.kind == AgentKind::Robot ? &a : nullptr;
  }

  std::vector<const Hazard*> mitigated(MitigationKind kind, auto&& pred) const {
    std::vector<const Hazard*> out;
    for (const auto& m : s_.mitigations) {
      if (m.kind != kind) continue;
      const Hazard* h = s_.find_hazard(m.trigger);
      if (h && pred(*h) && std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
    }
    return out;
  }

  void motion(const PointOfInterest& p) {
    const auto& layout = s_.layout;
    const auto& locs = layout.locations();
    const std::string tr = names::transit(p.id);
    const Agent* robot = robot_of(p);
    const bool can_stop =
        robot && !mitigated(MitigationKind::Stop, [&](const Hazard& h) {
                    return s_.owner(*s_.find_poi(h.robot_poi)).id == robot->id;
                  }).empty();
    const auto retracts = mitigated(MitigationKind::Retract, [&](const Hazard& h) { return h.robot_poi == p.id; });
    const Formula stopped = robot ? L::Eq(names::speed(robot->id), "stopped") : L::False();

    if (p.initial) add("init " + p.id, at(p.id, *p.initial));

    std::vector<Formula> steps;
    for (std::size_t i = 0; i < locs.size(); ++i) {
      std::vector<Formula> next{at(p.id, locs[i].id)};
      for (auto j : layout.neighbours(i)) next.push_back(at(p.id, locs[j].id));
      steps.push_back(L::Implies(prev(at(p.id, locs[i].id)), any(next)));
    }
    add("movement " + p.id, L::Alw(all(steps)));

    add("transit hold " + p.id, L::Alw(L::Implies(L::And(prev(L::Atom(tr)), L::Atom(tr)), unchanged(p.id))));

    Formula run_ends = L::And(prev(L::Atom(tr)), L::Not(L::Atom(tr)));
    if (can_stop) run_ends = L::And(run_ends, L::Not(prev(stopped)));
    add("transit end " + p.id, L::Alw(L::Implies(run_ends, L::Not(unchanged(p.id)))));

    // A retract jumps back without a transit run.
    std::vector<Formula> retracting;
    for (const auto* h : retracts) retracting.push_back(L::And(prev(L::Atom(h->id)), prev(L::True(), 2)));
    Formula exempt = any(retracting);
    if (can_stop && !retracts.empty()) exempt = L::And(exempt, L::Not(prev(stopped)));

    std::vector<Formula> moves;
    for (std::size_t i = 0; i < locs.size(); ++i) {
      for (auto j : layout.neighbours(i)) {
        const int n = s_.travel_time(i, j);
        std::vector<Formula> run;
        for (int d = 1; d <= n; ++d) run.push_back(prev(L::Atom(tr), d));
        run.push_back(L::Not(prev(L::Atom(tr), n + 1)));
        Formula change = L::And(prev(at(p.id, locs[i].id)), at(p.id, locs[j].id));
        if (!retracts.empty()) change = L::And(change, L::Not(exempt));
        moves.push_back(L::Implies(change, all(run)));
      }
    }
    add("transit duration " + p.id, L::Alw(all(moves)));

    if (can_stop)
      add("stopped " + p.id, L::Alw(L::Implies(prev(stopped), L::And(unchanged(p.id), L::Not(L::Atom(tr))))));

    for (const auto* h : retracts) {
      std::vector<Formula> back;
      Formula trigger = prev(L::Atom(h->id));
      if (can_stop) trigger = L::And(trigger, L::Not(prev(stopped)));
      for (const auto& l : locs) back.push_back(L::Implies(L::And(trigger, prev(at(p.id, l.id), 2)), at(p.id, l.id)));
      add("mitigation retract " + h->id + " " + p.id, L::Alw(all(back)));
    }
  }

  void speed(const Agent& robot) {
    auto owned = [&](const Hazard& h) { return s_.owner(*s_.find_poi(h.robot_poi)).id == robot.id; };
    auto active = [](const Hazard* h) { return L::Or(L::Atom(h->id), prev(L::Atom(h->id))); };
    const auto stops = mitigated(MitigationKind::Stop, owned);
    const auto slows = mitigated(MitigationKind::SlowDown, owned);
    std::vector<Formula> stop_cond, slow_cond;
    for (const auto* h : stops) stop_cond.push_back(active(h));
    for (const auto* h : slows) slow_cond.push_back(active(h));
    const std::string v = names::speed(robot.id);

    // The controller reacts in the instant a hazard is detected and keeps
    // the reduced speed for one more instant.
    add("speed " + robot.id,
        L::Alw(L::And(iff(L::Eq(v, "stopped"), any(stop_cond)),
                      iff(L::Eq(v, "slow"), L::And(any(slow_cond), L::Not(any(stop_cond)))))));
    for (const auto* h : stops)
      add("mitigation stop " + h->id, L::Alw(L::Implies(active(h), L::Eq(v, "stopped"))));
    for (const auto* h : slows)
      add("mitigation slowdown " + h->id, L::Alw(L::Implies(active(h), L::Not(L::Eq(v, "normal")))));
  }

  void hazard(const Hazard& h) {
    add("hazard " + h.id, L::Alw(iff(L::Atom(h.id), L::EqVar(h.human_poi, h.robot_poi))));
    const auto& robot = s_.owner(*s_.find_poi(h.robot_poi));
    const std::string r = names::risk(h.id);
    std::vector<Formula> cases{L::Implies(L::Not(L::Atom(h.id)), L::Eq(r, "0"))};
    for (Speed sp : {Speed::Normal, Speed::Slow, Speed::Stopped}) {
      int value = risk_value(h.severity, h.exposure, h.avoidability, sp);
      cases.push_back(L::Implies(L::And(L::Atom(h.id), L::Eq(names::speed(robot.id), to_string(sp))),
                                 L::Eq(r, std::to_string(value))));
    }
    add("risk " + h.id, L::Alw(all(cases)));
  }

  Formula achieved(const TaskStep& step) const {
    if (step.kind == StepKind::Handover) return L::And(at(step.poi, step.goal), at(step.partner_poi, step.goal));
    return at(step.poi, step.goal);
  }

  void task() {
    for (std::size_t i = 1; i <= s_.task.size(); ++i) {
      Formula before = i == 1 ? L::True() : L::Atom(names::done(i - 1));
      Formula d = L::Atom(names::done(i));
      add("task step " + std::to_string(i),
          L::Alw(iff(d, L::Or(prev(d), L::And(achieved(s_.task[i - 1]), before)))));
    }
    if (!s_.task.empty()) add("task complete", L::Som(L::Atom(names::done(s_.task.size()))));
  }

  const Scenario& s_;
  CompiledModel m_;
};

}  // namespace

CompiledModel compile(const Scenario& s) { return Compiler(s).run(); }

std::vector<Violation> violations(const logic::Trace& tr, const Scenario& s) {
  std::vector<Violation> out;
  for (int t = 0; t <= tr.k(); ++t) {
    for (const auto& h : s.hazards) {
      const auto& sym = names::risk(h.id);
      if (!tr.symbols().contains(sym)) throw ScenarioError("trace has no risk variable for hazard '" + h.id + "'");
      int risk = std::stoi(tr.value(sym, t));
      if (risk > s.threshold) out.push_back({h.id, t, risk});
    }
  }
  return out;
}

VerifyResult verify(const Scenario& s) {
  CompiledModel m = compile(s);
  auto r = encode::check(m.query(), m.symbols, m.bound);
  VerifyResult out;
  out.sat_vars = r.sat_vars;
  out.sat_clauses = r.sat_clauses;
  if (!r.is_sat()) return out;
  out.safe = false;
  out.violations = violations(*r.trace, s);
  out.trace = std::move(r.trace);
  return out;
}

VerifyResult verify_exhaustive(const Scenario& s) {
  CompiledModel m = compile(s);
  auto w = oracle::find_witness(m.query_conjuncts(), m.symbols, m.bound);
  VerifyResult out;
  if (!w) return out;
  out.safe = false;
  out.violations = violations(*w, s);
  out.trace = std::move(w);
  return out;
}

}  // namespace hrcv::world
