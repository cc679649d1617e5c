#include "hrcv/replay/classify.hpp"

#include <map>

#include "hrcv/replay/distance.hpp"
#include "hrcv/replay/motion.hpp"
#include "hrcv/world/model.hpp"

namespace hrcv::replay {

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Confirmed: return "CONFIRMED";
    case Verdict::Possible: return "POSSIBLE";
    case Verdict::Spurious: return "SPURIOUS";
  }
  return "?";
}

ClassifiedHazard classify_cells(std::string hazard, int instant, const Box& a, const Box& b, double theta,
                                const ClassifyOptions& opts) {
  ClassifiedHazard row{std::move(hazard), instant, Verdict::Possible, aabb_min_distance(a, b),
                       aabb_max_distance(a, b), 0.0, theta};
  if (row.d_max <= theta) {
    row.verdict = Verdict::Confirmed;
    row.contact_probability = 1.0;
  } else if (row.d_min > theta) {
    row.verdict = Verdict::Spurious;
  } else {
    row.contact_probability = contact_probability(a, b, theta, opts.samples, opts.seed);
  }
  return row;
}

std::vector<ClassifiedHazard> classify(const logic::Trace& tr, const world::Scenario& s,
                                       const ClassifyOptions& opts) {
  std::vector<ClassifiedHazard> out;
  std::map<std::pair<std::string, std::string>, ClassifiedHazard> memo;
  for (const auto& v : world::violations(tr, s)) {
    const auto* h = s.find_hazard(v.hazard);
    const auto* hp = s.find_poi(h->human_poi);
    const auto* rp = s.find_poi(h->robot_poi);
    for (const auto* p : {hp, rp})
      if (!tr.symbols().contains(p->id)) throw ReplayError("trace has no position for POI '" + p->id + "'");
    const auto& la = tr.value(hp->id, v.instant);
    const auto& lb = tr.value(rp->id, v.instant);
    if (!s.layout.find(la) || !s.layout.find(lb)) throw ReplayError("trace places a POI outside the layout");

    auto key = std::make_pair(la, lb);
    auto it = memo.find(key);
    if (it == memo.end() || it->second.contact_threshold != hp->radius + rp->radius)
      it = memo.insert_or_assign(key, classify_cells(h->id, v.instant, s.layout.at(la).box, s.layout.at(lb).box,
                                                     hp->radius + rp->radius, opts))
               .first;
    ClassifiedHazard row = it->second;
    row.hazard = h->id;
    row.instant = v.instant;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace hrcv::replay
