// Python bindings: scenario runs, corpus generation, tower audits and the numerical criterion,
// exchanged as JSON text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pseudomod/scenario.hpp"

namespace py = pybind11;
using namespace pseudomod;

namespace {

RunMode mode_from(const std::string& m) {
  if (m == "pipeline") return RunMode::Pipeline;
  if (m == "validate") return RunMode::Validate;
  if (m == "audit") return RunMode::Audit;
  if (m == "criterion") return RunMode::Criterion;
  throw InputError("unknown mode: " + m);
}

py::tuple run(const Scenario& s, const std::string& mode, std::optional<std::uint64_t> seed,
              std::optional<std::size_t> budget) {
  RunOptions opt{mode_from(mode), seed, budget};
  Report r = run_scenario(s, opt);
  return py::make_tuple(r.exit_code(), r.doc.dump());
}

}  // namespace

PYBIND11_MODULE(_pseudomod, m) {
  m.doc() = "Exact pseudorepresentation and Eisenstein-tower toolkit";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.attr("SCENARIO_SCHEMA") = kScenarioSchema;
  m.attr("REPORT_SCHEMA") = kReportSchema;
  m.attr("MANIFEST_SCHEMA") = kManifestSchema;

  m.def(
      "run_scenario_text",
      [](const std::string& text, const std::string& mode, std::optional<std::uint64_t> seed,
         std::optional<std::size_t> budget) {
        json j;
        try {
          j = json::parse(text);
        } catch (const json::parse_error& e) {
          throw InputError(std::string("scenario is not valid JSON: ") + e.what());
        }
        return run(parse_scenario(j), mode, seed, budget);
      },
      py::arg("text"), py::arg("mode") = "pipeline", py::arg("seed") = py::none(), py::arg("budget") = py::none());

  m.def(
      "run_scenario_file",
      [](const std::string& path, const std::string& mode, std::optional<std::uint64_t> seed,
         std::optional<std::size_t> budget) { return run(load_scenario(path), mode, seed, budget); },
      py::arg("path"), py::arg("mode") = "pipeline", py::arg("seed") = py::none(), py::arg("budget") = py::none());

  m.def(
      "generate_corpus_text",
      [](std::uint64_t seed, int reps, int towers) {
        Corpus c = generate_corpus(seed, {reps, towers});
        json entries = json::array();
        for (const auto& e : c.entries) entries.push_back({{"name", e.name}, {"scenario", e.scenario}});
        return json{{"manifest", c.manifest}, {"entries", entries}}.dump();
      },
      py::arg("seed"), py::arg("reps") = 12, py::arg("towers") = 8);

  m.def(
      "tower_report_text",
      [](const std::string& kind, int r, int param, Int p, int degree) {
        std::vector<std::string> failures;
        json doc = tower_report(TowerSpec{kind, r, param, p, degree}, failures);
        return py::make_tuple(doc.dump(), failures);
      },
      py::arg("kind"), py::arg("r"), py::arg("param") = 0, py::arg("p") = 5, py::arg("degree") = 1);

  m.def(
      "lenstra_report_text",
      [](const std::string& family, int r, Int p, int truncation) {
        std::vector<std::string> failures;
        json doc = lenstra_report(LenstraSpec{family, r, p, truncation}, failures);
        return py::make_tuple(doc.dump(), failures);
      },
      py::arg("family"), py::arg("r") = 1, py::arg("p") = 5, py::arg("truncation") = 8);

  m.def("fnv1a_hex", &fnv1a_hex, py::arg("data"));
}
