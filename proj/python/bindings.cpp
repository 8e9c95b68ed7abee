#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tauenum/counting.hpp"
#include "tauenum/enumerator.hpp"
#include "tauenum/grid.hpp"
#include "tauenum/reference_table.hpp"

namespace py = pybind11;
using namespace tauenum;

namespace {

TauFunction to_tau(const std::vector<Level>& values) {
  TauFunction tau(values);
  if (tau.empty()) throw std::invalid_argument("tau must be non-empty");
  return tau;
}

std::vector<Level> to_list(const TauFunction& tau) {
  return {tau.values().begin(), tau.values().end()};
}

py::tuple dyadic(const DyadicRational& d) {
  return py::make_tuple(d.numerator(), d.denominator());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact enumeration of cubic tau-functions, spines and conjugacy "
            "classes";

  static py::exception<IntegrityError> integrity(m, "IntegrityError",
                                                 PyExc_RuntimeError);

  py::class_<LevelSummary>(m, "LevelSummary")
      .def(py::init<>())
      .def(py::init([](std::size_t level, Count t, Count s, Count c) {
             return LevelSummary{level, t, s, c};
           }),
           py::arg("level"), py::arg("tau_count"), py::arg("spine_count"),
           py::arg("class_count"))
      .def_readonly("level", &LevelSummary::level)
      .def_readonly("tau_count", &LevelSummary::tau_count)
      .def_readonly("spine_count", &LevelSummary::spine_count)
      .def_readonly("class_count", &LevelSummary::class_count)
      .def("__eq__", [](const LevelSummary& a, const LevelSummary& b) { return a == b; })
      .def("__repr__", [](const LevelSummary& s) {
        return "LevelSummary(level=" + std::to_string(s.level) +
               ", tau_count=" + std::to_string(s.tau_count) +
               ", spine_count=" + std::to_string(s.spine_count) +
               ", class_count=" + std::to_string(s.class_count) + ")";
      });

  m.def("check_admissible", [](const std::vector<std::int64_t>& candidate) {
    const auto r = check_admissible(candidate);
    return py::make_tuple(r.admissible, property_name(r.violated), r.index);
  }, py::arg("candidate"),
     "(admissible, violated property, index) for an arbitrary sequence.");
  m.def("is_admissible", [](const std::vector<std::int64_t>& candidate) {
    return check_admissible(candidate).admissible;
  }, py::arg("candidate"));

  m.def("ord", [](const std::vector<Level>& tau, Level n) {
    return to_tau(tau).ord(n);
  }, py::arg("tau"), py::arg("n"));
  m.def("markers", [](const std::vector<Level>& tau) {
    return markers(to_tau(tau));
  }, py::arg("tau"));
  m.def("marked_levels", [](const std::vector<Level>& tau) {
    return marked_levels(to_tau(tau));
  }, py::arg("tau"));

  m.def("tail_decomposition", [](const std::vector<Level>& tau) {
    const auto td = tail_decomposition(to_tau(tau));
    py::dict d;
    d["k"] = td.k;
    d["marker_levels"] = td.marker_levels;
    d["images"] = td.images;
    d["steps"] = td.steps;
    return d;
  }, py::arg("tau"));
  m.def("admissible_extensions", [](const std::vector<Level>& tau) {
    py::list out;
    for (const auto& c : extensions_with_spine_factors(to_tau(tau))) {
      py::dict d;
      d["index"] = c.index;
      d["value"] = c.value;
      d["spine_factor"] = c.spine_factor;
      out.append(d);
    }
    return out;
  }, py::arg("tau"), "Admissible next values, descending, with spine factors.");

  m.def("symmetry", [](const std::vector<Level>& tau) {
    return symmetry(to_tau(tau));
  }, py::arg("tau"));
  m.def("spines", [](const std::vector<Level>& tau) {
    return spines(to_tau(tau));
  }, py::arg("tau"));
  m.def("moduli_sum", [](const std::vector<Level>& tau, Level l) {
    return dyadic(moduli_sum(to_tau(tau), l));
  }, py::arg("tau"), py::arg("level"), "(numerator, denominator)");
  m.def("twist_period", [](const std::vector<Level>& tau, Level l) {
    return twist_period(to_tau(tau), l);
  }, py::arg("tau"), py::arg("level"));
  m.def("twist_factor", [](const std::vector<Level>& tau) {
    return dyadic(twist_factor(to_tau(tau)).value);
  }, py::arg("tau"), "(numerator, denominator)");
  m.def("top", [](const std::vector<Level>& tau) { return top(to_tau(tau)); },
        py::arg("tau"));

  m.def("tau_to_grid", [](const std::vector<Level>& tau) {
    return format_grid(tau_to_grid(to_tau(tau)));
  }, py::arg("tau"), "Grid text: one line per row.");
  m.def("grid_to_tau", [](const std::string& text) {
    return to_list(grid_to_tau(parse_grid(text)));
  }, py::arg("grid"));
  m.def("validate_grid", [](const std::string& text) {
    py::list out;
    for (const auto& v : validate_grid(parse_grid(text))) {
      out.append(py::make_tuple(rule_name(v.rule), v.j, v.k,
                                v.aux ? py::cast(*v.aux) : py::none()));
    }
    return out;
  }, py::arg("grid"));

  m.def("enumerate", [](std::size_t max_level, unsigned threads,
                        std::size_t split_depth,
                        std::optional<std::function<void(std::vector<Level>, Count, Count)>> visitor) {
    TauVisitor v;
    if (visitor) {
      v = [&](const TauFunction& tau, Count s, Count t) {
        (*visitor)(to_list(tau), s, t);
      };
      return enumerate(EnumerationOptions{max_level, 1, split_depth}, v);
    }
    py::gil_scoped_release release;
    return enumerate(EnumerationOptions{max_level, threads, split_depth});
  }, py::arg("max_level"), py::arg("threads") = 1, py::arg("split_depth") = 8,
     py::arg("visitor") = py::none(),
     "Per-level summaries; visitor(tau, spines, top) forces a serial walk.");
  m.def("brute_force_enumerate", [](std::size_t max_level) {
    return brute_force_enumerate(max_level);
  }, py::arg("max_level"));
  m.def("ratios", [](const std::vector<LevelSummary>& rows) {
    py::list out;
    for (const auto& r : ratios(rows)) out.append(py::make_tuple(r.level, r.text));
    return out;
  }, py::arg("summaries"));
  m.def("export_prefix_tree", [](std::size_t max_level) {
    return export_prefix_tree(max_level);
  }, py::arg("max_level"), "Graphviz DOT text.");
  m.def("reference_table", [] {
    py::list out;
    for (const auto& r : reference_table()) {
      out.append(LevelSummary{r.level, r.tau_count, r.spine_count, r.class_count});
    }
    return out;
  });
}
