#include "hrcv/io/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <ostream>

namespace hrcv::io {

using replay::Verdict;

std::array<std::size_t, 3> HazardReport::counts() const {
  std::array<std::size_t, 3> c{};
  for (const auto& r : rows) ++c[static_cast<std::size_t>(r.verdict)];
  return c;
}

bool HazardReport::all_confirmed() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.verdict == Verdict::Confirmed; });
}

void write_report_text(std::ostream& out, const HazardReport& r) {
  auto c = r.counts();
  out << fmt::format("scenario {}: {} hazard report(s), {} CONFIRMED, {} POSSIBLE, {} SPURIOUS\n", r.scenario,
                     r.rows.size(), c[0], c[1], c[2]);
  if (r.rows.empty()) return;
  out << fmt::format("{:<12} {:>7}  {:<9} {:>11} {:>11} {:>11} {:>9}\n", "hazard", "instant", "verdict", "d_min",
                     "d_max", "probability", "threshold");
  for (const auto& row : r.rows)
    out << fmt::format("{:<12} {:>7}  {:<9} {:>11.6f} {:>11.6f} {:>11.6f} {:>9.4f}\n", row.hazard, row.instant,
                       replay::to_string(row.verdict), row.d_min, row.d_max, row.contact_probability,
                       row.contact_threshold);
}

void write_report_csv(std::ostream& out, const HazardReport& r) {
  out << "hazard,instant,verdict,d_min,d_max,probability,threshold\n";
  for (const auto& row : r.rows)
    out << fmt::format("{},{},{},{:.9f},{:.9f},{:.6f},{:.9f}\n", row.hazard, row.instant,
                       replay::to_string(row.verdict), row.d_min, row.d_max, row.contact_probability,
                       row.contact_threshold);
}

namespace {

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* colour(Verdict v) {
  switch (v) {
    case Verdict::Confirmed: return "#c0392b";
    case Verdict::Possible: return "#e67e22";
    case Verdict::Spurious: return "#7f8c8d";
  }
  return "#000000";
}

}  // namespace

void write_report_svg(std::ostream& out, const HazardReport& r) {
  constexpr double left = 170, plot = 480, row_h = 22, top = 40;
  const double height = top + row_h * static_cast<double>(r.rows.size()) + 40;
  double scale_max = 0;
  for (const auto& row : r.rows) scale_max = std::max({scale_max, row.d_max, row.contact_threshold});
  if (scale_max <= 0) scale_max = 1;
  auto x = [&](double d) { return left + plot * d / scale_max; };

  out << fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" font-family=\"monospace\" "
      "font-size=\"11\">\n",
      left + plot + 150, height);
  auto c = r.counts();
  out << fmt::format("<text x=\"10\" y=\"20\">{}: {} CONFIRMED, {} POSSIBLE, {} SPURIOUS</text>\n",
                     xml_escape(r.scenario), c[0], c[1], c[2]);
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    const double y = top + row_h * static_cast<double>(i);
    out << fmt::format("<text x=\"10\" y=\"{:.1f}\">{} t={}</text>\n", y + 14, xml_escape(row.hazard), row.instant);
    out << fmt::format("<rect x=\"{:.2f}\" y=\"{:.1f}\" width=\"{:.2f}\" height=\"14\" fill=\"{}\"/>\n", x(row.d_min),
                       y + 3, std::max(1.0, x(row.d_max) - x(row.d_min)), colour(row.verdict));
    out << fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.1f}\" x2=\"{0:.2f}\" y2=\"{2:.1f}\" stroke=\"#000\"/>\n",
                       x(row.contact_threshold), y + 1, y + 19);
    out << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\">{} p={:.6f}</text>\n", left + plot + 8, y + 14,
                       replay::to_string(row.verdict), row.contact_probability);
  }
  const double axis_y = top + row_h * static_cast<double>(r.rows.size()) + 8;
  out << fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"#000\"/>\n", left, axis_y,
                     left + plot, axis_y);
  for (int k = 0; k <= 4; ++k) {
    double d = scale_max * k / 4;
    out << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{:.3f} m</text>\n", x(d), axis_y + 16,
                       d);
  }
  out << "</svg>\n";
}

void write_trace_table(std::ostream& out, const logic::Trace& tr) {
  const auto& syms = tr.symbols();
  for (int t = 0; t <= tr.k(); ++t) {
    out << "t=" << t;
    for (std::size_t i = 0; i < syms.size(); ++i) {
      const auto& s = syms.at(i);
      out << ' ' << s.name << '=';
      if (s.kind == logic::SymbolKind::Proposition)
        out << (tr.raw(i, t) ? 1 : 0);
      else
        out << s.domain[tr.raw(i, t)];
    }
    out << '\n';
  }
}

void write_timeline_svg(std::ostream& out, const logic::Trace& tr) {
  constexpr double left = 150, cell = 18, band = 20, top = 30;
  const auto& syms = tr.symbols();
  const int n = tr.k() + 1;
  const double width = left + cell * n + 20;
  const double height = top + band * static_cast<double>(syms.size()) + 30;
  out << fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" font-family=\"monospace\" "
      "font-size=\"11\">\n",
      width, height);
  for (std::size_t i = 0; i < syms.size(); ++i) {
    const auto& s = syms.at(i);
    const double y = top + band * static_cast<double>(i);
    out << fmt::format("<g class=\"band\" data-symbol=\"{}\">\n", xml_escape(s.name));
    out << fmt::format("<text x=\"8\" y=\"{:.1f}\">{}</text>\n", y + 14, xml_escape(s.name));
    out << fmt::format("<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" fill=\"none\" "
                       "stroke=\"#bbb\"/>\n",
                       left, y + 2, cell * n, band - 4);
    if (s.kind == logic::SymbolKind::Proposition) {
      for (int t = 0; t < n; ++t)
        if (tr.raw(i, t))
          out << fmt::format("<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" fill=\"#2e86c1\"/>\n",
                             left + cell * t, y + 2, cell, band - 4);
    } else {
      int start = 0;
      bool shade = false;
      for (int t = 1; t <= n; ++t) {
        if (t < n && tr.raw(i, t) == tr.raw(i, start)) continue;
        out << fmt::format("<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" fill=\"{}\"/>\n",
                           left + cell * start, y + 2, cell * (t - start), band - 4, shade ? "#d6eaf8" : "#aed6f1");
        out << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\">{}</text>\n", left + cell * start + 2, y + 14,
                           xml_escape(s.domain[tr.raw(i, start)]));
        shade = !shade;
        start = t;
      }
    }
    out << "</g>\n";
  }
  const double axis_y = top + band * static_cast<double>(syms.size()) + 14;
  for (int t = 0; t < n; t += 5)
    out << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n", left + cell * t + cell / 2,
                       axis_y, t);
  out << "</svg>\n";
}

}  // namespace hrcv::io
