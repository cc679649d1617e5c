#include "hrcv/world/loader.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace hrcv::world {

namespace {

class LineError : public ScenarioError {
 public:
  LineError(int line, const std::string& msg) : ScenarioError("line " + std::to_string(line) + ": " + msg) {}
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

template <class T>
T number(const std::string& tok, int line) {
  T v{};
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) throw LineError(line, "'" + tok + "' is not a number");
  return v;
}

void arity(const std::vector<std::string>& w, std::size_t n, int line) {
  if (w.size() != n) throw LineError(line, "'" + w[0] + "' expects " + std::to_string(n - 1) + " fields");
}

void keyword(const std::string& got, const char* want, int line) {
  if (got != want) throw LineError(line, std::string("expected '") + want + "', found '" + got + "'");
}

}  // namespace

Scenario load_scenario(std::string_view text, std::string name) {
  Scenario s;
  s.name = std::move(name);
  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;

  // References are resolved after the whole file is read, so sections may
  // appear in any order.
  struct Pending {
    int line;
    std::vector<std::string> words;
  };
  std::vector<Pending> adjacency, pois, inits, travel;

  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto w = split(raw);
    if (w.empty()) continue;
    if (w[0].front() == '[') {
      if (w.size() != 1 || w[0].back() != ']') throw LineError(line, "malformed section header");
      section = w[0].substr(1, w[0].size() - 2);
      static const char* known[] = {"layout", "agents", "task", "hazards", "mitigations", "params"};
      if (std::find(std::begin(known), std::end(known), section) == std::end(known))
        throw LineError(line, "unknown section [" + section + "]");
      continue;
    }
    try {
      if (section == "layout" && w[0] == "loc") {
        arity(w, 9, line);
        keyword(w[2], "box", line);
        Box b{{number<double>(w[3], line), number<double>(w[4], line), number<double>(w[5], line)},
              {number<double>(w[6], line), number<double>(w[7], line), number<double>(w[8], line)}};
        s.layout.add_location({w[1], b});
      } else if (section == "layout" && w[0] == "adj") {
        arity(w, 3, line);
        adjacency.push_back({line, w});
      } else if (section == "agents" && w[0] == "agent") {
        arity(w, 3, line);
        AgentKind kind;
        if (w[2] == "human")
          kind = AgentKind::Human;
        else if (w[2] == "robot")
          kind = AgentKind::Robot;
        else
          throw LineError(line, "agent kind must be human or robot");
        s.agents.push_back({w[1], kind, {}});
      } else if (section == "agents" && w[0] == "poi") {
        arity(w, 5, line);
        keyword(w[3], "radius", line);
        pois.push_back({line, w});
      } else if (section == "agents" && w[0] == "init") {
        arity(w, 3, line);
        inits.push_back({line, w});
      } else if (section == "task" && w[0] == "step") {
        if (w.size() == 5 && w[1] == "handover") {
          s.task.push_back({StepKind::Handover, w[2], w[3], w[4]});
        } else {
          arity(w, 4, line);
          StepKind k;
          if (w[2] == "reach")
            k = StepKind::Reach;
          else if (w[2] == "pick")
            k = StepKind::Pick;
          else if (w[2] == "place")
            k = StepKind::Place;
          else
            throw LineError(line, "step kind must be reach, pick, place or handover");
          s.task.push_back({k, w[1], {}, w[3]});
        }
      } else if (section == "hazards" && w[0] == "hazard") {
        arity(w, 10, line);
        keyword(w[4], "sev", line);
        keyword(w[6], "exp", line);
        keyword(w[8], "avoid", line);
        Hazard h{w[1], w[2], w[3], number<int>(w[5], line), number<int>(w[7], line), number<int>(w[9], line)};
        s.hazards.push_back(std::move(h));
      } else if (section == "mitigations" && w[0] == "mitigate") {
        arity(w, 3, line);
        MitigationKind k;
        if (w[1] == "slowdown")
          k = MitigationKind::SlowDown;
        else if (w[1] == "retract")
          k = MitigationKind::Retract;
        else if (w[1] == "stop")
          k = MitigationKind::Stop;
        else
          throw LineError(line, "mitigation must be slowdown, retract or stop");
        s.mitigations.push_back({k, w[2]});
      } else if (section == "params" && w[0] == "bound") {
        arity(w, 2, line);
        s.bound = number<int>(w[1], line);
      } else if (section == "params" && w[0] == "threshold") {
        arity(w, 2, line);
        s.threshold = number<int>(w[1], line);
      } else if (section == "params" && w[0] == "dt") {
        arity(w, 2, line);
        s.dt = number<double>(w[1], line);
      } else if (section == "params" && w[0] == "travel") {
        arity(w, 4, line);
        travel.push_back({line, w});
      } else {
        throw LineError(line, section.empty() ? "'" + w[0] + "' outside any section"
                                              : "unexpected '" + w[0] + "' in [" + section + "]");
      }
    } catch (const LineError&) {
      throw;
    } catch (const ScenarioError& e) {
      throw LineError(line, e.what());
    }
  }

  auto resolve = [](const Pending& p, auto&& fn) {
    try {
      fn(p.words);
    } catch (const LineError&) {
      throw;
    } catch (const ScenarioError& e) {
      throw LineError(p.line, e.what());
    }
  };
  for (const auto& p : adjacency)
    resolve(p, [&](const auto& w) {
      if (w[1] == w[2]) throw ScenarioError("location '" + w[1] + "' is adjacent to itself");
      s.layout.connect(w[1], w[2]);
    });
  for (const auto& p : pois)
    resolve(p, [&](const auto& w) {
      auto it = std::find_if(s.agents.begin(), s.agents.end(), [&](const Agent& a) { return a.id == w[1]; });
      if (it == s.agents.end()) throw ScenarioError("unknown agent '" + w[1] + "'");
      it->pois.push_back({w[2], w[1], number<double>(w[4], p.line), std::nullopt});
    });
  for (const auto& p : inits)
    resolve(p, [&](const auto& w) {
      for (auto& a : s.agents)
        for (auto& poi : a.pois)
          if (poi.id == w[1]) {
            poi.initial = w[2];
            return;
          }
      throw ScenarioError("unknown POI '" + w[1] + "'");
    });
  for (const auto& p : travel)
    resolve(p, [&](const auto& w) { s.set_travel_time(w[1], w[2], number<int>(w[3], p.line)); });

  s.validate();
  return s;
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot read scenario file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return load_scenario(buf.str(), path.stem().string());
  } catch (const ScenarioError& e) {
    throw ScenarioError(path.string() + ": " + e.what());
  }
}

}  // namespace hrcv::world
