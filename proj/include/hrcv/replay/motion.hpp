#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hrcv/geometry.hpp"
#include "hrcv/logic/trace.hpp"
#include "hrcv/world/scenario.hpp"

namespace hrcv::replay {

class ReplayError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A move between adjacent cells. The POI leaves `source` at `start` and is
/// in `destination` from instant `arrival` on.
struct MotionCommand {
  std::string poi;
  std::string source;
  std::string destination;
  int start = 0;
  int arrival = 0;
  int duration = 1;
  friend bool operator==(const MotionCommand&, const MotionCommand&) = default;
};

struct PathSample {
  double time = 0;  // seconds
  Vec3 point;
};

struct ContinuousPath {
  std::string poi;
  std::vector<PathSample> samples;
};

/// One command per position change, in POI order then time. The duration is
/// the transit run ending just before the change; a change without transit
/// (a retract) lasts one instant.
std::vector<MotionCommand> extract_motions(const logic::Trace& tr, const world::Scenario& s);

/// Constant-speed straight line between the two cell centers over
/// duration * dt seconds, sampled at most `sample_interval` apart. Both
/// endpoints are the exact centers.
ContinuousPath interpolate(const MotionCommand& m, const world::Scenario& s, double sample_interval);

/// Whole-trace replay of every POI over [0, k * dt] with `substeps` samples
/// per instant. At whole instants outside a command the POI sits exactly at
/// its cell center.
std::vector<ContinuousPath> replay_trace(const logic::Trace& tr, const world::Scenario& s, int substeps = 10);

}  // namespace hrcv::replay
