#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "termpred/oracle.hpp"
#include "termpred/parser.hpp"
#include "termpred/predict.hpp"
#include "termpred/trace.hpp"

namespace py = pybind11;
using namespace termpred;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      return py::none();
  }
}

PredictorConfig make_config(unsigned r, const std::string& pruning,
                            std::size_t max_nodes, double timeout) {
  PredictorConfig cfg;
  cfg.r = r;
  auto p = pruning_from_name(pruning);
  if (!p) throw py::value_error("pruning must be none|variants|loop-goals");
  cfg.pruning = *p;
  cfg.limits.max_nodes = max_nodes;
  cfg.limits.timeout_seconds = timeout;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_termpred, m) {
  m.doc() = "termination prediction for logic programs";

  py::register_exception<ParseError>(m, "ProgramParseError");
  py::register_exception<FlounderError>(m, "FlounderingError");

  py::class_<Program>(m, "Program")
      .def("__str__", [](const Program& p) { return to_string(p); })
      .def_property_readonly("clause_count",
                             [](const Program& p) { return p.clauses.size(); });

  py::class_<Query>(m, "Query")
      .def_property_readonly("moded", &Query::moded)
      .def("__str__", [](const Query& q) { return q.text(); });

  m.def("parse_program", &parse_program, py::arg("text"));
  m.def("parse_query", &parse_query, py::arg("text"));

  m.def(
      "predict",
      [](const Program& p, const Query& q, unsigned r,
         const std::string& pruning, std::size_t max_nodes, double timeout) {
        Report rep = predict(p, q, make_config(r, pruning, max_nodes, timeout));
        return json_to_py(report_to_json(rep));
      },
      py::arg("program"), py::arg("query"), py::arg("r") = 3,
      py::arg("pruning") = "variants", py::arg("max_nodes") = 1'000'000,
      py::arg("timeout") = 240.0);

  m.def(
      "all_modes",
      [](const Program& p, unsigned r, const std::string& pruning,
         std::size_t max_nodes, double timeout) {
        py::list out;
        for (const Report& rep :
             run_all_modes(p, make_config(r, pruning, max_nodes, timeout)))
          out.append(json_to_py(report_to_json(rep)));
        return out;
      },
      py::arg("program"), py::arg("r") = 3, py::arg("pruning") = "variants",
      py::arg("max_nodes") = 1'000'000, py::arg("timeout") = 240.0);

  m.def(
      "bounded_interpret",
      [](const Program& p, const Query& q, std::size_t budget) {
        OracleOutcome o = bounded_interpret(p, q, budget);
        py::dict d;
        d["halted"] = o.halted;
        d["successes"] = o.successes;
        d["steps"] = o.steps;
        return d;
      },
      py::arg("program"), py::arg("goal"), py::arg("budget") = 100'000);

  m.def(
      "herbrand_terms",
      [](const Program& p, unsigned depth) {
        std::vector<std::string> out;
        for (const TermPtr& t : herbrand_terms(p, depth))
          out.push_back(to_string(t));
        return out;
      },
      py::arg("program"), py::arg("depth"));

  m.def("most_general_moded_queries", [](const Program& p) {
    std::vector<std::string> out;
    for (const Query& q : most_general_moded_queries(p)) out.push_back(q.text());
    return out;
  });
}
