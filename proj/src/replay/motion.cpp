#include "hrcv/replay/motion.hpp"

#include <cmath>

#include "hrcv/world/model.hpp"

namespace hrcv::replay {

namespace {

void require(const logic::Trace& tr, const std::string& name, logic::SymbolKind kind) {
  auto i = tr.symbols().find(name);
  if (!i || tr.symbols().at(*i).kind != kind) throw ReplayError("trace has no symbol '" + name + "' of the expected kind");
}

Vec3 lerp(Vec3 a, Vec3 b, double f) {
  if (f <= 0) return a;
  if (f >= 1) return b;
  return a + f * (b - a);
}

}  // namespace

std::vector<MotionCommand> extract_motions(const logic::Trace& tr, const world::Scenario& s) {
  std::vector<MotionCommand> out;
  for (const auto* p : s.pois()) {
    const std::string tr_name = world::names::transit(p->id);
    require(tr, p->id, logic::SymbolKind::Variable);
    require(tr, tr_name, logic::SymbolKind::Proposition);
    for (int t = 0; t < tr.k(); ++t) {
      const auto& from = tr.value(p->id, t);
      const auto& to = tr.value(p->id, t + 1);
      if (from == to) continue;
      auto i = s.layout.find(from), j = s.layout.find(to);
      if (!i || !j) throw ReplayError("trace places '" + p->id + "' in a location missing from the layout");
      if (!s.layout.adjacent(*i, *j))
        throw ReplayError("'" + p->id + "' jumps from " + from + " to non-adjacent " + to + " at instant " +
                          std::to_string(t + 1));
      int run = 0;
      while (t - run >= 0 && tr.prop(tr_name, t - run)) ++run;
      const int duration = std::max(run, 1);
      out.push_back({p->id, from, to, t + 1 - duration, t + 1, duration});
    }
  }
  return out;
}

ContinuousPath interpolate(const MotionCommand& m, const world::Scenario& s, double sample_interval) {
  const double span = m.duration * s.dt;
  if (!(sample_interval > 0)) throw ReplayError("sample interval must be positive");
  const Vec3 a = s.layout.at(m.source).box.center();
  const Vec3 b = s.layout.at(m.destination).box.center();
  const auto n = static_cast<int>(std::ceil(span / sample_interval - 1e-12));
  ContinuousPath path{m.poi, {}};
  const double t0 = m.start * s.dt;
  for (int i = 0; i <= n; ++i) {
    double f = static_cast<double>(i) / n;
    path.samples.push_back({i == n ? m.arrival * s.dt : t0 + f * span, lerp(a, b, f)});
  }
  return path;
}

std::vector<ContinuousPath> replay_trace(const logic::Trace& tr, const world::Scenario& s, int substeps) {
  if (substeps < 1) throw ReplayError("substeps must be at least 1");
  const auto motions = extract_motions(tr, s);
  std::vector<ContinuousPath> out;
  for (const auto* p : s.pois()) {
    // Command covering each instant, if any.
    std::vector<const MotionCommand*> active(tr.k() + 1, nullptr);
    for (const auto& m : motions)
      if (m.poi == p->id)
        for (int t = m.start; t < m.arrival; ++t) active[t] = &m;

    ContinuousPath path{p->id, {}};
    for (int t = 0; t <= tr.k(); ++t) {
      const int steps = t == tr.k() ? 1 : substeps;
      for (int j = 0; j < steps; ++j) {
        const double time = (t + static_cast<double>(j) / substeps) * s.dt;
        Vec3 at = s.layout.at(tr.value(p->id, t)).box.center();
        if (const auto* m = active[t]) {
          double f = static_cast<double>((t - m->start) * substeps + j) / (m->duration * substeps);
          at = lerp(s.layout.at(m->source).box.center(), s.layout.at(m->destination).box.center(), f);
        }
        path.samples.push_back({time, at});
      }
    }
    out.push_back(std::move(path));
  }
  return out;
}

}  // namespace hrcv::replay
