#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hrcv/world/scenario.hpp"

namespace hrcv::world {

// Line-oriented scenario format, `#` starts a comment:
//
//   [layout]       loc <id> box <x0> <y0> <z0> <x1> <y1> <z1>
//                  adj <id> <id>                   (undirected)
//   [agents]       agent <id> human|robot
//                  poi <agent> <id> radius <m>
//                  init <poi> <loc>                (optional start cell)
//   [task]         step <poi> reach|pick|place <loc>
//                  step handover <robot-poi> <human-poi> <loc>
//   [hazards]      hazard <id> <human-poi> <robot-poi> sev <0-2> exp <0-2> avoid <0-2>
//   [mitigations]  mitigate slowdown|retract|stop <hazard>
//   [params]       bound <k> | threshold <n> | dt <seconds> | travel <locA> <locB> <instants>
//
// The result is validated; errors carry the offending line number.
Scenario load_scenario(std::string_view text, std::string name = "scenario");
Scenario load_scenario_file(const std::filesystem::path& path);

}  // namespace hrcv::world
