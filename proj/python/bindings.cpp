#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <array>
#include <sstream>

#include "hrcv/encode/encoder.hpp"
#include "hrcv/io/trace_file.hpp"
#include "hrcv/logic/evaluator.hpp"
#include "hrcv/logic/parser.hpp"
#include "hrcv/replay/classify.hpp"
#include "hrcv/replay/distance.hpp"
#include "hrcv/replay/motion.hpp"
#include "hrcv/sat/cnf.hpp"
#include "hrcv/world/loader.hpp"
#include "hrcv/world/model.hpp"

namespace py = pybind11;
using namespace hrcv;

namespace {

using PyBox = std::array<std::array<double, 3>, 2>;

Box to_box(const PyBox& b) { return {{b[0][0], b[0][1], b[0][2]}, {b[1][0], b[1][1], b[1][2]}}; }

logic::SymbolTable make_symbols(const std::vector<std::string>& props, const py::dict& variables) {
  logic::SymbolTable s;
  for (const auto& p : props) s.add_proposition(p);
  for (auto [name, domain] : variables) s.add_variable(name.cast<std::string>(), domain.cast<std::vector<std::string>>());
  return s;
}

py::object cell(const logic::Trace& tr, const std::string& name, int t) {
  const auto& sym = tr.symbols()[name];
  if (sym.kind == logic::SymbolKind::Proposition) return py::bool_(tr.prop(name, t));
  return py::str(tr.value(name, t));
}

world::MitigationKind mitigation_kind(const std::string& kind) {
  if (kind == "slowdown") return world::MitigationKind::SlowDown;
  if (kind == "retract") return world::MitigationKind::Retract;
  if (kind == "stop") return world::MitigationKind::Stop;
  throw world::ScenarioError("mitigation must be slowdown, retract or stop");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bounded verification and geometric replay of human-robot collaboration scenarios";
  py::register_exception<std::runtime_error>(m, "HrcvError", PyExc_ValueError);

  py::class_<logic::Trace>(m, "Trace")
      .def(py::init([](const std::vector<std::string>& props, const py::dict& variables, int k) {
             return logic::Trace(make_symbols(props, variables), logic::Bound(k));
           }),
           py::arg("propositions"), py::arg("variables") = py::dict(), py::arg("k") = 0)
      .def_property_readonly("k", &logic::Trace::k)
      .def_property_readonly("symbols",
                             [](const logic::Trace& tr) {
                               std::vector<std::string> out;
                               for (const auto& s : tr.symbols()) out.push_back(s.name);
                               return out;
                             })
      .def("value", &cell, py::arg("name"), py::arg("t"))
      .def("set",
           [](logic::Trace& tr, const std::string& name, int t, const py::object& v) {
             if (py::isinstance<py::bool_>(v))
               tr.set(name, t, v.cast<bool>());
             else
               tr.set(name, t, std::string_view(v.cast<std::string>()));
           })
      .def("rows",
           [](const logic::Trace& tr) {
             py::list rows;
             for (int t = 0; t <= tr.k(); ++t) {
               py::dict row;
               for (const auto& s : tr.symbols()) row[py::str(s.name)] = cell(tr, s.name, t);
               rows.append(row);
             }
             return rows;
           })
      .def("to_text",
           [](const logic::Trace& tr) {
             std::ostringstream out;
             io::write_trace(out, tr);
             return out.str();
           })
      .def_static("from_text",
                  [](const std::string& text) {
                    std::istringstream in(text);
                    return io::read_trace(in);
                  })
      .def("__eq__", [](const logic::Trace& a, const logic::Trace& b) { return a == b; })
      .def("__repr__", [](const logic::Trace& tr) {
        return "<Trace k=" + std::to_string(tr.k()) + " symbols=" + std::to_string(tr.symbols().size()) + ">";
      });

  m.def("read_trace", [](const std::filesystem::path& p) { return io::read_trace_file(p); }, py::arg("path"));

  m.def(
      "check",
      [](const std::string& formula, const std::vector<std::string>& props, const py::dict& variables,
         int bound) -> std::optional<logic::Trace> {
        auto s = make_symbols(props, variables);
        return encode::check(logic::parse_formula(formula, s), s, logic::Bound(bound)).trace;
      },
      py::arg("formula"), py::arg("propositions"), py::arg("variables") = py::dict(),
      py::arg("bound") = encode::kDefaultBound,
      "A trace over [0, bound] satisfying the formula at instant 0, or None.");

  m.def(
      "evaluate",
      [](const std::string& formula, const logic::Trace& tr, int t) {
        return logic::evaluate(logic::parse_formula(formula, tr.symbols()), tr, t);
      },
      py::arg("formula"), py::arg("trace"), py::arg("t") = 0);

  m.def(
      "solve",
      [](int num_vars, const std::vector<std::vector<int>>& clauses) -> std::optional<std::vector<bool>> {
        sat::Cnf cnf;
        cnf.num_vars = num_vars;
        for (const auto& c : clauses) {
          sat::Clause cl;
          for (int x : c) {
            if (x == 0) throw sat::Error("literal 0 is not a variable");
            cl.push_back(sat::Lit::from_dimacs(x));
          }
          cnf.add_clause(cl);
        }
        auto r = sat::solve(cnf);
        if (!r.is_sat()) return std::nullopt;
        std::vector<bool> model;
        for (int v = 1; v <= num_vars; ++v) model.push_back(r.model().value(v));
        return model;
      },
      py::arg("num_vars"), py::arg("clauses"), "Model for variables 1..num_vars (list index v-1), or None.");

  py::class_<world::Scenario>(m, "Scenario")
      .def_static("from_text", &world::load_scenario, py::arg("text"), py::arg("name") = "scenario")
      .def_readonly("name", &world::Scenario::name)
      .def_readwrite("bound", &world::Scenario::bound)
      .def_readwrite("threshold", &world::Scenario::threshold)
      .def_readwrite("dt", &world::Scenario::dt)
      .def_property_readonly("locations", [](const world::Scenario& s) { return s.layout.ids(); })
      .def_property_readonly("hazards",
                             [](const world::Scenario& s) {
                               std::vector<std::string> out;
                               for (const auto& h : s.hazards) out.push_back(h.id);
                               return out;
                             })
      .def_property_readonly("mitigations",
                             [](const world::Scenario& s) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const auto& mi : s.mitigations) out.emplace_back(world::to_string(mi.kind), mi.trigger);
                               return out;
                             })
      .def(
          "with_mitigation",
          [](const world::Scenario& s, const std::string& kind, const std::string& hazard) {
            return world::apply_mitigation(s, {mitigation_kind(kind), hazard});
          },
          py::arg("kind"), py::arg("hazard"), "Copy of the scenario with one more mitigation.");

  m.def("load_scenario", [](const std::filesystem::path& p) { return world::load_scenario_file(p); }, py::arg("path"));

  py::class_<world::Violation>(m, "Violation")
      .def_readonly("hazard", &world::Violation::hazard)
      .def_readonly("instant", &world::Violation::instant)
      .def_readonly("risk", &world::Violation::risk)
      .def("__repr__", [](const world::Violation& v) {
        return "<Violation " + v.hazard + " t=" + std::to_string(v.instant) + " risk=" + std::to_string(v.risk) + ">";
      });

  py::class_<world::VerifyResult>(m, "VerifyResult")
      .def_readonly("safe", &world::VerifyResult::safe)
      .def_readonly("trace", &world::VerifyResult::trace)
      .def_readonly("violations", &world::VerifyResult::violations)
      .def_readonly("sat_vars", &world::VerifyResult::sat_vars)
      .def_readonly("sat_clauses", &world::VerifyResult::sat_clauses);

  m.def("verify", &world::verify, py::arg("scenario"));
  m.def("verify_exhaustive", &world::verify_exhaustive, py::arg("scenario"));

  py::class_<replay::ClassifiedHazard>(m, "ClassifiedHazard")
      .def_readonly("hazard", &replay::ClassifiedHazard::hazard)
      .def_readonly("instant", &replay::ClassifiedHazard::instant)
      .def_property_readonly("verdict", [](const replay::ClassifiedHazard& c) { return replay::to_string(c.verdict); })
      .def_readonly("d_min", &replay::ClassifiedHazard::d_min)
      .def_readonly("d_max", &replay::ClassifiedHazard::d_max)
      .def_readonly("contact_probability", &replay::ClassifiedHazard::contact_probability)
      .def_readonly("contact_threshold", &replay::ClassifiedHazard::contact_threshold);

  m.def(
      "classify",
      [](const logic::Trace& tr, const world::Scenario& s, std::uint64_t samples, std::uint64_t seed) {
        return replay::classify(tr, s, {samples, seed});
      },
      py::arg("trace"), py::arg("scenario"), py::arg("samples") = replay::kDefaultSamples,
      py::arg("seed") = replay::kDefaultSeed);

  m.def(
      "extract_motions",
      [](const logic::Trace& tr, const world::Scenario& s) {
        py::list out;
        for (const auto& c : replay::extract_motions(tr, s)) {
          py::dict d;
          d["poi"] = c.poi;
          d["source"] = c.source;
          d["destination"] = c.destination;
          d["start"] = c.start;
          d["arrival"] = c.arrival;
          d["duration"] = c.duration;
          out.append(d);
        }
        return out;
      },
      py::arg("trace"), py::arg("scenario"));

  m.def(
      "aabb_min_distance", [](const PyBox& a, const PyBox& b) { return replay::aabb_min_distance(to_box(a), to_box(b)); },
      py::arg("a"), py::arg("b"), "Boxes are ((x0, y0, z0), (x1, y1, z1)).");
  m.def(
      "aabb_max_distance", [](const PyBox& a, const PyBox& b) { return replay::aabb_max_distance(to_box(a), to_box(b)); },
      py::arg("a"), py::arg("b"));
  m.def(
      "contact_probability",
      [](const PyBox& a, const PyBox& b, double theta, std::uint64_t n, std::uint64_t seed) {
        py::gil_scoped_release release;
        return replay::contact_probability(to_box(a), to_box(b), theta, n, seed);
      },
      py::arg("a"), py::arg("b"), py::arg("theta"), py::arg("n") = replay::kDefaultSamples,
      py::arg("seed") = replay::kDefaultSeed);
}
