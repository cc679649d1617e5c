#include "hrcv/world/scenario.hpp"

#include <algorithm>
#include <limits>

#include "hrcv/logic/symbols.hpp"

namespace hrcv::world {

const char* to_string(MitigationKind k) noexcept {
  switch (k) {
    case MitigationKind::SlowDown: return "slowdown";
    case MitigationKind::Retract: return "retract";
    case MitigationKind::Stop: return "stop";
  }
  return "?";
}

const char* to_string(StepKind k) noexcept {
  switch (k) {
    case StepKind::Reach: return "reach";
    case StepKind::Pick: return "pick";
    case StepKind::Place: return "place";
    case StepKind::Handover: return "handover";
  }
  return "?";
}

void Layout::add_location(Location loc) {
  if (find(loc.id)) throw ScenarioError("duplicate location '" + loc.id + "'");
  locations_.push_back(std::move(loc));
  adjacency_.emplace_back();
}

void Layout::add_edge(std::string_view from, std::string_view to) {
  adjacency_[index_of(from)].insert(index_of(to));
}

void Layout::connect(std::string_view a, std::string_view b) {
  add_edge(a, b);
  add_edge(b, a);
}

std::optional<std::size_t> Layout::find(std::string_view id) const {
  for (std::size_t i = 0; i < locations_.size(); ++i)
    if (locations_[i].id == id) return i;
  return std::nullopt;
}

std::size_t Layout::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw ScenarioError("unknown location '" + std::string(id) + "'");
}

const Location& Layout::at(std::string_view id) const { return locations_[index_of(id)]; }

std::vector<std::string> Layout::ids() const {
  std::vector<std::string> out;
  for (const auto& l : locations_) out.push_back(l.id);
  return out;
}

void Layout::validate() const {
  if (locations_.empty()) throw ScenarioError("layout has no locations");
  for (std::size_t i = 0; i < locations_.size(); ++i) {
    const auto& l = locations_[i];
    if (!logic::is_identifier(l.id)) throw ScenarioError("invalid location id '" + l.id + "'");
    for (int a = 0; a < 3; ++a)
      if (!(l.box.min[a] < l.box.max[a])) throw ScenarioError("location '" + l.id + "' needs min < max on every axis");
    for (std::size_t j = 0; j < i; ++j) {
      const auto& o = locations_[j];
      bool overlap = true;
      for (int a = 0; a < 3; ++a)
        overlap = overlap && l.box.min[a] < o.box.max[a] && o.box.min[a] < l.box.max[a];
      if (overlap) throw ScenarioError("locations '" + o.id + "' and '" + l.id + "' overlap");
    }
    for (auto j : adjacency_[i]) {
      if (j == i) throw ScenarioError("location '" + l.id + "' is adjacent to itself");
      if (!adjacency_[j].contains(i))
        throw ScenarioError("asymmetric adjacency: '" + l.id + "' -> '" + locations_[j].id + "' has no reverse");
    }
  }
}

int Scenario::travel_time(std::size_t a, std::size_t b) const {
  auto it = travel.find(std::minmax(a, b));
  return it == travel.end() ? 1 : it->second;
}

void Scenario::set_travel_time(std::string_view a, std::string_view b, int instants) {
  auto i = layout.index_of(a), j = layout.index_of(b);
  if (!layout.adjacent(i, j))
    throw ScenarioError("travel time given for non-adjacent locations '" + std::string(a) + "', '" + std::string(b) + "'");
  if (instants < 1) throw ScenarioError("travel time must be at least 1 instant");
  travel[std::minmax(i, j)] = instants;
}

const PointOfInterest* Scenario::find_poi(std::string_view id) const {
  for (const auto& a : agents)
    for (const auto& p : a.pois)
      if (p.id == id) return &p;
  return nullptr;
}

const Agent& Scenario::owner(const PointOfInterest& poi) const {
  for (const auto& a : agents)
    if (a.id == poi.owner) return a;
  throw ScenarioError("POI '" + poi.id + "' has no owner '" + poi.owner + "'");
}

const Hazard* Scenario::find_hazard(std::string_view id) const {
  for (const auto& h : hazards)
    if (h.id == id) return &h;
  return nullptr;
}

std::vector<const PointOfInterest*> Scenario::pois() const {
  std::vector<const PointOfInterest*> out;
  for (const auto& a : agents)
    for (const auto& p : a.pois) out.push_back(&p);
  return out;
}

namespace {

void check_level(const Hazard& h, int v, const char* what) {
  if (v < 0 || v > 2)
    throw ScenarioError("hazard '" + h.id + "': " + what + " level " + std::to_string(v) + " outside 0..2");
}

AgentKind kind_of(const Scenario& s, std::string_view poi_id, const std::string& context) {
  const auto* p = s.find_poi(poi_id);
  if (!p) throw ScenarioError(context + ": unknown POI '" + std::string(poi_id) + "'");
  return s.owner(*p).kind;
}

}  // namespace

void Scenario::validate() const {
  layout.validate();
  if (agents.empty()) throw ScenarioError("scenario has no agents");
  if (bound < 0) throw ScenarioError("bound must be non-negative");
  if (threshold < 0) throw ScenarioError("threshold must be non-negative");
  if (!(dt > 0)) throw ScenarioError("dt must be positive");
  for (const auto& [pair, n] : travel) {
    if (n < 1) throw ScenarioError("travel time must be at least 1 instant");
    if (!layout.adjacent(pair.first, pair.second)) throw ScenarioError("travel time given for non-adjacent locations");
  }

  double min_edge = std::numeric_limits<double>::infinity();
  for (const auto& l : layout.locations()) {
    auto e = l.box.extent();
    min_edge = std::min({min_edge, e.x, e.y, e.z});
  }

  std::set<std::string> ids;
  for (const auto& a : agents) {
    if (!ids.insert(a.id).second) throw ScenarioError("duplicate agent '" + a.id + "'");
    if (a.pois.empty()) throw ScenarioError("agent '" + a.id + "' has no points of interest");
  }
  for (const auto& a : agents) {
    for (const auto& p : a.pois) {
      if (!logic::is_identifier(p.id)) throw ScenarioError("invalid POI id '" + p.id + "'");
      if (!ids.insert(p.id).second) throw ScenarioError("duplicate identifier '" + p.id + "'");
      if (p.owner != a.id) throw ScenarioError("POI '" + p.id + "' listed under the wrong agent");
      if (!(p.radius > 0)) throw ScenarioError("POI '" + p.id + "' needs a positive radius");
      if (!(p.radius < min_edge))
        throw ScenarioError("POI '" + p.id + "' radius must be smaller than the smallest cell edge");
      if (p.initial && !layout.find(*p.initial))
        throw ScenarioError("POI '" + p.id + "' starts in unknown location '" + *p.initial + "'");
    }
  }

  for (const auto& step : task) {
    const std::string ctx = std::string("task step ") + to_string(step.kind);
    if (!layout.find(step.goal)) throw ScenarioError(ctx + ": unknown location '" + step.goal + "'");
    auto k = kind_of(*this, step.poi, ctx);
    if (step.kind == StepKind::Handover) {
      if (k != AgentKind::Robot) throw ScenarioError(ctx + ": '" + step.poi + "' is not a robot POI");
      if (kind_of(*this, step.partner_poi, ctx) != AgentKind::Human)
        throw ScenarioError(ctx + ": '" + step.partner_poi + "' is not a human POI");
    }
  }

  std::set<std::string> hazard_ids;
  for (const auto& h : hazards) {
    if (!logic::is_identifier(h.id)) throw ScenarioError("invalid hazard id '" + h.id + "'");
    if (!hazard_ids.insert(h.id).second || ids.contains(h.id))
      throw ScenarioError("duplicate identifier '" + h.id + "'");
    const std::string ctx = "hazard '" + h.id + "'";
    if (kind_of(*this, h.human_poi, ctx) != AgentKind::Human)
      throw ScenarioError(ctx + ": '" + h.human_poi + "' is not a human POI");
    if (kind_of(*this, h.robot_poi, ctx) != AgentKind::Robot)
      throw ScenarioError(ctx + ": '" + h.robot_poi + "' is not a robot POI");
    check_level(h, h.severity, "severity");
    check_level(h, h.exposure, "exposure");
    check_level(h, h.avoidability, "avoidability");
  }

  for (std::size_t i = 0; i < mitigations.size(); ++i) {
    const auto& m = mitigations[i];
    if (!find_hazard(m.trigger)) throw ScenarioError("mitigation triggers unknown hazard '" + m.trigger + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (mitigations[j] == m)
        throw ScenarioError(std::string("duplicate mitigation ") + to_string(m.kind) + " " + m.trigger);
  }
}

Scenario apply_mitigation(const Scenario& s, const Mitigation& m) {
  if (!s.find_hazard(m.trigger)) throw ScenarioError("mitigation triggers unknown hazard '" + m.trigger + "'");
  if (std::find(s.mitigations.begin(), s.mitigations.end(), m) != s.mitigations.end())
    throw ScenarioError(std::string("duplicate mitigation ") + to_string(m.kind) + " " + m.trigger);
  Scenario out = s;
  out.mitigations.push_back(m);
  return out;
}

}  // namespace hrcv::world
