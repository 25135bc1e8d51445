#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "antlab/digest.hpp"
#include "antlab/render.hpp"
#include "antlab/serialize.hpp"
#include "antlab/sim.hpp"

namespace py = pybind11;
using namespace antlab;

namespace {

Heading heading_from(const std::string& s) {
  Heading h;
  if (s.size() != 1 || !parse_heading(s[0], h)) throw py::value_error("heading must be U/R/D/L");
  return h;
}

std::string json_text(const nlohmann::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_antlab, m) {
  m.doc() = "exact sparse-grid simulation of rule-word ants, highway certification, "
            "behavior classification";

  py::class_<AntConfiguration>(m, "Config")
      .def(py::init<>())
      .def("get", [](const AntConfiguration& c, std::int64_t x, std::int64_t y) {
        return c.grid.get({x, y});
      })
      .def("set", [](AntConfiguration& c, std::int64_t x, std::int64_t y, std::uint8_t s) {
        c.grid.set({x, y}, s);
      })
      .def_property("position",
                    [](const AntConfiguration& c) { return std::pair(c.position.x, c.position.y); },
                    [](AntConfiguration& c, std::pair<std::int64_t, std::int64_t> p) {
                      c.position = {p.first, p.second};
                    })
      .def_property("heading",
                    [](const AntConfiguration& c) { return std::string(1, heading_char(c.heading)); },
                    [](AntConfiguration& c, const std::string& h) { c.heading = heading_from(h); })
      .def("nonzero_cells", [](const AntConfiguration& c) {
        std::vector<std::tuple<std::int64_t, std::int64_t, int>> out;
        for (const auto& [coord, s] : c.grid.nonzero_cells())
          out.emplace_back(coord.x, coord.y, s);
        return out;
      })
      .def("digest", [](const AntConfiguration& c) { return configuration_digest(c); })
      .def("__copy__", [](const AntConfiguration& c) { return AntConfiguration(c); });

  m.def("run", [](const AntConfiguration& conf, const std::string& word, std::int64_t steps,
                  bool record_trace, bool record_trajectory, std::int64_t max_cells) {
    const RuleWord w = RuleWord::parse(word);
    validate_states(conf.grid, w);
    RunOptions opts{record_trace, record_trajectory, max_cells};
    RunResult r = run(conf, w, steps, opts);
    std::vector<std::pair<std::int64_t, std::int64_t>> traj;
    for (Coord c : r.trajectory) traj.emplace_back(c.x, c.y);
    return std::tuple(std::move(r.conf), py::bytes(std::string(r.trace.begin(), r.trace.end())),
                      std::move(traj));
  }, py::arg("config"), py::arg("word"), py::arg("steps"), py::arg("record_trace") = false,
     py::arg("record_trajectory") = false, py::arg("max_cells") = 0);

  m.def("detect_highway_json", [](const AntConfiguration& conf, const std::string& word,
                                  std::int64_t max_steps, std::int64_t max_period,
                                  std::int64_t max_cells) -> py::object {
    const RuleWord w = RuleWord::parse(word);
    validate_states(conf.grid, w);
    DetectBudget budget{max_steps, max_period, max_cells};
    const auto cand = detect_highway(conf, w, budget);
    if (!cand) return py::none();
    auto res = certify_highway(conf, w, cand->onset, cand->period, cand->drift, max_cells);
    return py::str(json_text(certificate_to_json(std::get<HighwayCertificate>(res))));
  }, py::arg("config"), py::arg("word"), py::arg("max_steps") = 1'000'000,
     py::arg("max_period") = 10'000, py::arg("max_cells") = 0);

  m.def("certify_highway_json", [](const AntConfiguration& conf, const std::string& word,
                                   std::int64_t t0, std::int64_t period,
                                   std::pair<std::int64_t, std::int64_t> drift,
                                   std::int64_t max_cells) {
    const RuleWord w = RuleWord::parse(word);
    validate_states(conf.grid, w);
    const auto res = certify_highway(conf, w, t0, period, {drift.first, drift.second}, max_cells);
    if (const auto* cert = std::get_if<HighwayCertificate>(&res)) {
      return json_text({{"certified", true}, {"certificate", certificate_to_json(*cert)}});
    }
    const auto& rej = std::get<Rejection>(res);
    return json_text({{"certified", false}, {"reason", reject_reason_name(rej.reason)},
                      {"detail", rej.detail}});
  }, py::arg("config"), py::arg("word"), py::arg("t0"), py::arg("period"), py::arg("drift"),
     py::arg("max_cells") = 0);

  m.def("classify_json", [](const AntConfiguration& conf, const std::string& word,
                            std::int64_t max_steps, std::int64_t recurrence_steps,
                            std::int64_t max_cells) {
    const RuleWord w = RuleWord::parse(word);
    validate_states(conf.grid, w);
    ClassifyBudget budget;
    budget.max_steps = max_steps;
    budget.recurrence_steps = recurrence_steps;
    budget.max_cells = max_cells;
    return json_text(report_to_json(classify_behavior(conf, w, budget)));
  }, py::arg("config"), py::arg("word"), py::arg("max_steps") = 1'000'000,
     py::arg("recurrence_steps") = 300'000, py::arg("max_cells") = 0);

  m.def("load_pattern_config", [](const std::string& path) {
    return apply_pattern(load_pattern(path));
  });

  m.def("visit_histogram", [](const AntConfiguration& conf, const std::string& word,
                              std::int64_t steps) {
    const RuleWord w = RuleWord::parse(word);
    validate_states(conf.grid, w);
    const VisitHistogram h = visit_histogram(conf, w, steps);
    std::map<std::int64_t, std::int64_t> dist(h.distribution.begin(), h.distribution.end());
    return std::tuple(h.total, h.max_count, dist);
  });

  m.def("render_pgm", [](const AntConfiguration& conf) {
    return py::bytes(render_pgm(conf.grid, render_box(conf)));
  });
}
