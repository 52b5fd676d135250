#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sesstype/sesstype.hpp"

namespace py = pybind11;
using namespace sesstype;

namespace {

py::list label_list(const LabelSet& labels) {
  py::list out;
  for (const Label& l : labels) out.append(to_string(l));
  return out;
}

Label parse_label(const std::string& s) {
  if (s == "✓" || s == "success") return Label::success();
  if (!s.empty() && s[0] == '!') return Label(Action::output(s.substr(1)));
  return Label(Action::input(s));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Session types with intersection and union types";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<SyntaxError>(m, "SyntaxError", error.ptr());
  py::register_exception<RoleError>(m, "RoleError", error.ptr());
  py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<NoTransition>(m, "NoTransition", error.ptr());
  py::register_exception<ExplorationLimit>(m, "ExplorationLimit", error.ptr());
  py::register_exception<LimitError>(m, "LimitError", error.ptr());
  py::register_exception<Untypeable>(m, "Untypeable", error.ptr());
  py::register_exception<ProjectionError>(m, "ProjectionError", error.ptr());

  py::class_<ProcessTerm>(m, "Process")
      .def(py::init([](const std::string& s) { return parse_process(s); }), py::arg("text"))
      .def("__str__", &render_process)
      .def("__repr__", [](const ProcessTerm& p) { return "Process('" + render_process(p) + "')"; })
      .def("__eq__", [](const ProcessTerm& a, const ProcessTerm& b) { return a == b; })
      .def("__hash__", &ProcessTerm::hash)
      .def_property_readonly("size", &ProcessTerm::size)
      .def_property_readonly("height", &ProcessTerm::height);
  py::implicitly_convertible<py::str, ProcessTerm>();

  py::class_<SessionType>(m, "Type")
      .def(py::init([](const std::string& s) { return parse_type(s); }), py::arg("text"))
      .def("__str__", &render_type)
      .def("__repr__", [](const SessionType& t) { return "Type('" + render_type(t) + "')"; })
      .def("__eq__", [](const SessionType& a, const SessionType& b) { return a == b; })
      .def("__hash__", &SessionType::hash);
  py::implicitly_convertible<py::str, SessionType>();

  py::class_<GlobalType>(m, "Global")
      .def(py::init([](const std::string& s) { return parse_global(s); }), py::arg("text"))
      .def("__str__", &render_global)
      .def("__eq__", [](const GlobalType& a, const GlobalType& b) { return a == b; });
  py::implicitly_convertible<py::str, GlobalType>();

  py::class_<NormalForm>(m, "NormalForm")
      .def("__str__", &render_normal_form)
      .def("__eq__", [](const NormalForm& a, const NormalForm& b) { return a == b; })
      .def("__hash__", &NormalForm::hash)
      .def_property_readonly("is_bottom", &NormalForm::is_bottom)
      .def_property_readonly("is_top", &NormalForm::is_top)
      .def_property_readonly("is_viable", &NormalForm::is_viable)
      .def("to_type", &embed);

  m.def("normalize", &normalize, py::arg("t"));
  m.def("meet", &meet, py::arg("t"), py::arg("s"));
  m.def("join", &join, py::arg("t"), py::arg("s"));
  m.def("dual", &dual, py::arg("t"));
  m.def("viable", &viable, py::arg("t"));
  m.def("subtype", &subtype, py::arg("t"), py::arg("s"));
  m.def("equivalent", &equivalent, py::arg("t"), py::arg("s"));
  m.def("member", &member_type, py::arg("p"), py::arg("t"));
  m.def("canonical_type", &canonical_type, py::arg("p"));
  m.def("check", &check, py::arg("t"), py::arg("p"));
  m.def("project", [](const GlobalType& g, const std::string& role) {
    return project(g, RoleName(role));
  }, py::arg("g"), py::arg("role"));

  m.def("orthogonal", [](const ProcessTerm& p, const ProcessTerm& q) { return orthogonal(p, q); },
        py::arg("p"), py::arg("q"));
  m.def("refines_bounded", [](const ProcessTerm& p, const ProcessTerm& q, std::size_t depth) {
    RefinementVerdict v = refines_bounded(p, q, depth);
    return py::make_tuple(v.holds_up_to_bound, v.counterexample ? py::cast(*v.counterexample)
                                                                : py::none());
  }, py::arg("p"), py::arg("q"), py::arg("depth") = 3,
        "Returns (holds_up_to_bound, counterexample or None).");
  m.def("enumerate_processes", [](const std::vector<std::string>& alphabet, std::size_t depth,
                                  std::size_t width) {
    std::set<ActionName> names;
    for (const auto& n : alphabet) names.insert(ActionName(n));
    EnumerationLimits limits;
    limits.width = width;
    return enumerate_processes(names, depth, limits);
  }, py::arg("alphabet"), py::arg("depth"), py::arg("width") = 2);

  m.def("step", [](const ProcessTerm& p) {
    const TransitionSet t = step(p);
    py::list labeled;
    for (const auto& [mu, q] : t.labeled) labeled.append(py::make_tuple(to_string(mu), q));
    return py::make_tuple(t.internal, labeled);
  }, py::arg("p"), "Returns (internal successors, [(label, successor)]).");
  m.def("weak_closure", &weak_closure, py::arg("p"));
  m.def("weak_labels", [](const ProcessTerm& p) { return label_list(weak_labels(p)); },
        py::arg("p"));
  m.def("may", [](const ProcessTerm& p, const std::string& mu) { return may(p, parse_label(mu)); },
        py::arg("p"), py::arg("label"));
  m.def("must", [](const ProcessTerm& p, const std::string& mu) { return must(p, parse_label(mu)); },
        py::arg("p"), py::arg("label"));
  m.def("may_converge", &may_converge, py::arg("p"));
  m.def("must_converge", &must_converge, py::arg("p"));
  m.def("continuation", [](const ProcessTerm& p, const std::string& mu) {
    return continuation(p, parse_label(mu));
  }, py::arg("p"), py::arg("label"));
}
