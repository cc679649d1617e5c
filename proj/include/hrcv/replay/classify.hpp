#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hrcv/geometry.hpp"
#include "hrcv/logic/trace.hpp"
#include "hrcv/world/scenario.hpp"

namespace hrcv::replay {

enum class Verdict { Confirmed, Possible, Spurious };

const char* to_string(Verdict v) noexcept;  // CONFIRMED, POSSIBLE, SPURIOUS

struct ClassifiedHazard {
  std::string hazard;
  int instant = 0;
  Verdict verdict = Verdict::Possible;
  double d_min = 0;
  double d_max = 0;
  double contact_probability = 0;
  double contact_threshold = 0;
  friend bool operator==(const ClassifiedHazard&, const ClassifiedHazard&) = default;
};

inline constexpr std::uint64_t kDefaultSamples = 1'000'000;
inline constexpr std::uint64_t kDefaultSeed = 20260501;

struct ClassifyOptions {
  std::uint64_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
};

/// Verdict for two POIs known only to lie somewhere in cells a and b.
/// CONFIRMED when every placement is a contact, SPURIOUS when none is.
ClassifiedHazard classify_cells(std::string hazard, int instant, const Box& a, const Box& b, double theta,
                                const ClassifyOptions& opts = {});

/// One row per (hazard, instant) whose risk exceeds the threshold in `tr`,
/// ordered by instant then hazard declaration.
std::vector<ClassifiedHazard> classify(const logic::Trace& tr, const world::Scenario& s,
                                       const ClassifyOptions& opts = {});

}  // namespace hrcv::replay
