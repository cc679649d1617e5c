#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "hrcv/logic/trace.hpp"
#include "hrcv/replay/classify.hpp"

namespace hrcv::io {

struct HazardReport {
  std::string scenario;
  std::vector<replay::ClassifiedHazard> rows;

  // Indexed by replay::Verdict.
  std::array<std::size_t, 3> counts() const;
  bool all_confirmed() const;
};

void write_report_text(std::ostream& out, const HazardReport& r);
// Columns: hazard,instant,verdict,d_min,d_max,probability,threshold
void write_report_csv(std::ostream& out, const HazardReport& r);
// One bar per row spanning [d_min, d_max] against the contact threshold.
void write_report_svg(std::ostream& out, const HazardReport& r);

// One line per instant: `t=<t> <name>=<value> ...`.
void write_trace_table(std::ostream& out, const logic::Trace& tr);
// One horizontal band per symbol over the instants; propositions are shaded
// where true, variables are labelled with their value at each change.
void write_timeline_svg(std::ostream& out, const logic::Trace& tr);

}  // namespace hrcv::io
