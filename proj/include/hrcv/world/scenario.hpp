#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hrcv/geometry.hpp"

namespace hrcv::world {

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Location {
  std::string id;
  Box box;
};

/// Cells of the workcell and their undirected adjacency.
class Layout {
 public:
  void add_location(Location loc);
  // Directed edge; validate() rejects layouts where the reverse is missing.
  void add_edge(std::string_view from, std::string_view to);
  // Both directions.
  void connect(std::string_view a, std::string_view b);

  const std::vector<Location>& locations() const noexcept { return locations_; }
  std::optional<std::size_t> find(std::string_view id) const;
  const Location& at(std::string_view id) const;
  std::size_t index_of(std::string_view id) const;
  const std::set<std::size_t>& neighbours(std::size_t i) const { return adjacency_.at(i); }
  bool adjacent(std::size_t a, std::size_t b) const { return adjacency_.at(a).contains(b); }
  std::vector<std::string> ids() const;

  // Unique ids, positive-volume boxes, disjoint interiors, irreflexive and
  // symmetric adjacency.
  void validate() const;

 private:
  std::vector<Location> locations_;
  std::vector<std::set<std::size_t>> adjacency_;
};

enum class AgentKind { Human, Robot };

struct PointOfInterest {
  std::string id;
  std::string owner;
  double radius = 0;
  std::optional<std::string> initial;  // location at instant 0, if pinned
};

struct Agent {
  std::string id;
  AgentKind kind = AgentKind::Human;
  std::vector<PointOfInterest> pois;
};

enum class StepKind { Reach, Pick, Place, Handover };

struct TaskStep {
  StepKind kind = StepKind::Reach;
  std::string poi;          // handover: the robot POI
  std::string partner_poi;  // handover: the human POI
  std::string goal;
};

struct Hazard {
  std::string id;
  std::string human_poi;
  std::string robot_poi;
  int severity = 0;
  int exposure = 0;
  int avoidability = 0;
};

enum class MitigationKind { SlowDown, Retract, Stop };

struct Mitigation {
  MitigationKind kind = MitigationKind::Stop;
  std::string trigger;  // hazard id
  friend bool operator==(const Mitigation&, const Mitigation&) = default;
};

const char* to_string(MitigationKind k) noexcept;
const char* to_string(StepKind k) noexcept;

struct Scenario {
  std::string name = "scenario";
  Layout layout;
  std::vector<Agent> agents;
  std::vector<TaskStep> task;
  std::vector<Hazard> hazards;
  std::vector<Mitigation> mitigations;
  int bound = 30;
  int threshold = 3;
  double dt = 1.0;
  // Instants needed to cross between two adjacent cells; 1 when absent.
  std::map<std::pair<std::size_t, std::size_t>, int> travel;

  int travel_time(std::size_t a, std::size_t b) const;
  void set_travel_time(std::string_view a, std::string_view b, int instants);

  const PointOfInterest* find_poi(std::string_view id) const;
  const Agent& owner(const PointOfInterest& poi) const;
  const Hazard* find_hazard(std::string_view id) const;
  std::vector<const PointOfInterest*> pois() const;

  // Every cross-reference and range invariant; throws ScenarioError.
  void validate() const;
};

/// Returns a copy of `s` with `m` appended. Throws if the trigger is unknown
/// or the same mitigation is already present.
Scenario apply_mitigation(const Scenario& s, const Mitigation& m);

}  // namespace hrcv::world
