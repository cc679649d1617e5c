#include "hrcv/cli/app.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "hrcv/encode/encoder.hpp"
#include "hrcv/io/report.hpp"
#include "hrcv/io/trace_file.hpp"
#include "hrcv/oracle/enumerate.hpp"
#include "hrcv/replay/classify.hpp"
#include "hrcv/sat/cnf.hpp"
#include "hrcv/world/loader.hpp"
#include "hrcv/world/model.hpp"

namespace hrcv::cli {

namespace {

struct RunConfig {
  std::string scenario;
  std::string trace;
  std::string export_kind;
  std::optional<int> bound;
  std::optional<double> dt;
  std::uint64_t seed = replay::kDefaultSeed;
  std::uint64_t samples = replay::kDefaultSamples;
  std::string format = "text";
  std::string out;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

world::Scenario load(const RunConfig& cfg) {
  auto s = world::load_scenario_file(cfg.scenario);
  if (cfg.bound) s.bound = *cfg.bound;
  if (cfg.dt) s.dt = *cfg.dt;
  s.validate();
  return s;
}

// Writes to --out when given, otherwise to `out`.
template <class Fn>
void emit(const RunConfig& cfg, std::ostream& out, Fn&& fn) {
  if (cfg.out.empty()) {
    fn(out);
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw InputError("cannot write '" + cfg.out + "'");
  fn(file);
  if (!file) throw InputError("error writing '" + cfg.out + "'");
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  auto s = load(cfg);
  auto r = world::verify(s);
  if (r.safe) {
    out << "SAFE\n";
    return kOk;
  }
  const std::string path = cfg.out.empty() ? s.name + ".trace" : cfg.out;
  io::write_trace_file(path, *r.trace);
  out << fmt::format("COUNTEREXAMPLE: {} instant(s) above risk threshold {}\n", r.violations.size(), s.threshold);
  for (const auto& v : r.violations) out << fmt::format("  {} t={} risk={}\n", v.hazard, v.instant, v.risk);
  out << "trace written to " << path << '\n';
  return kCounterexample;
}

int run_classify(const RunConfig& cfg, std::ostream& out) {
  auto s = load(cfg);
  auto tr = io::read_trace_file(cfg.trace);
  if (!(tr.symbols() == world::compile(s).symbols))
    throw InputError("trace '" + cfg.trace + "' does not match the symbols of scenario '" + s.name + "'");
  io::HazardReport report{s.name, replay::classify(tr, s, {cfg.samples, cfg.seed})};
  emit(cfg, out, [&](std::ostream& o) {
    if (cfg.format == "csv")
      io::write_report_csv(o, report);
    else if (cfg.format == "svg")
      io::write_report_svg(o, report);
    else
      io::write_report_text(o, report);
  });
  return report.all_confirmed() ? kOk : kUnconfirmed;
}

int run_export(const RunConfig& cfg, std::ostream& out) {
  if (cfg.export_kind == "cnf") {
    auto s = load(cfg);
    auto m = world::compile(s);
    auto enc = encode::encode(m.query(), m.symbols, m.bound);
    emit(cfg, out, [&](std::ostream& o) { o << sat::write_dimacs(enc.cnf); });
    return kOk;
  }
  auto tr = io::read_trace_file(cfg.scenario);
  emit(cfg, out, [&](std::ostream& o) {
    if (cfg.export_kind == "timeline")
      io::write_timeline_svg(o, tr);
    else
      io::write_trace_table(o, tr);
  });
  return kOk;
}

int run_oracle(const RunConfig& cfg, std::ostream& out) {
  auto s = load(cfg);
  auto sat = world::verify(s);
  auto m = world::compile(s);
  oracle::Stats stats;
  auto start = std::chrono::steady_clock::now();
  auto witness = oracle::find_witness(m.query_conjuncts(), m.symbols, m.bound, &stats);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool enum_safe = !witness.has_value();
  out << fmt::format("sat:         {} ({} vars, {} clauses)\n", sat.safe ? "SAFE" : "COUNTEREXAMPLE", sat.sat_vars,
                     sat.sat_clauses);
  out << fmt::format("enumeration: {} ({} nodes, {:.2f} s)\n", enum_safe ? "SAFE" : "COUNTEREXAMPLE", stats.nodes,
                     secs);
  const bool agree = enum_safe == sat.safe;
  out << (agree ? "AGREE\n" : "DISAGREE\n");
  return agree ? kOk : kCounterexample;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounded verification and geometric replay of human-robot collaboration scenarios", "hrcv"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto scenario_flags = [&](CLI::App* sub) {
    sub->add_option("--bound", cfg.bound, "Override the scenario time bound")->check(CLI::NonNegativeNumber);
    sub->add_option("--dt", cfg.dt, "Override seconds per instant")->check(CLI::PositiveNumber);
  };

  auto* verify = app.add_subcommand("verify", "Check a scenario; writes a counterexample trace if one exists");
  verify->add_option("scenario", cfg.scenario, "Scenario file (.scn)")->required();
  verify->add_option("--out", cfg.out, "Trace output path (default <scenario>.trace)");
  scenario_flags(verify);

  auto* classify = app.add_subcommand("classify", "Replay a counterexample and classify each hazard");
  classify->add_option("scenario", cfg.scenario, "Scenario file (.scn)")->required();
  classify->add_option("trace", cfg.trace, "Trace file written by verify")->required();
  classify->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"text", "csv", "svg"}));
  classify->add_option("--out", cfg.out, "Report output path (default stdout)");
  classify->add_option("--seed", cfg.seed, "Monte Carlo seed");
  classify->add_option("--samples", cfg.samples, "Monte Carlo samples per cell pair")->check(CLI::PositiveNumber);
  scenario_flags(classify);

  auto* exp = app.add_subcommand("export", "Export a DIMACS CNF, a trace table, or a timeline SVG");
  exp->add_option("kind", cfg.export_kind, "cnf | trace-table | timeline")
      ->required()
      ->check(CLI::IsMember({"cnf", "trace-table", "timeline"}));
  exp->add_option("input", cfg.scenario, "Scenario (cnf) or trace file")->required();
  exp->add_option("--out", cfg.out, "Output path (default stdout)");
  scenario_flags(exp);

  auto* orc = app.add_subcommand("oracle", "Cross-check verify against exhaustive trace enumeration");
  orc->add_option("scenario", cfg.scenario, "Scenario file (.scn); keep it small")->required();
  scenario_flags(orc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (verify->parsed()) return run_verify(cfg, out);
    if (classify->parsed()) return run_classify(cfg, out);
    if (exp->parsed()) return run_export(cfg, out);
    return run_oracle(cfg, out);
  } catch (const std::exception& e) {
    err << "hrcv: error: " << e.what() << '\n';
    return kError;
  }
}

}  // namespace hrcv::cli
