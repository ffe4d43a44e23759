#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "affine_heaps/diagram.hpp"
#include "affine_heaps/error.hpp"
#include "affine_heaps/monodimer.hpp"
#include "affine_heaps/oracle.hpp"
#include "affine_heaps/permutation.hpp"
#include "affine_heaps/ppp.hpp"
#include "affine_heaps/qformulas.hpp"
#include "affine_heaps/verify.hpp"

namespace py = pybind11;
using namespace affheaps;
using nlohmann::json;

namespace {

// Values cross the boundary as JSON text, decoded with the json module on the Python side.
py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }
json from_py(const py::object& o) {
  return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

py::dict series_dict(const TruncatedSeries& s) {
  py::dict out;
  for (const auto& [e, c] : s.terms()) {
    py::tuple key = py::make_tuple(e.x, e.y, e.q);
    if (c.get_den() == 1)
      out[key] = py::int_(py::str(c.get_num().get_str()));
    else
      out[key] = py::module_::import("fractions").attr("Fraction")(c.get_str());
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(affine_heaps, m) {
  m.doc() = "321-avoiding affine permutations, heaps of pieces and q-series";

  static py::exception<Error> exc(m, "AffineHeapsError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    }
  });

  m.def("series", [](const std::string& name, int x, int y, int q) {
    return series_dict(named_series(name, Truncation{x, y, q}));
  }, py::arg("name"), py::arg("x") = 4, py::arg("y") = 0, py::arg("q") = 8);
  m.def("series_names", &series_names);

  m.def("count", [](int n, int max_len, const std::string& cls) {
    return enumerate_fc_elements(n, max_len, parse_perm_class(cls)).rows;
  }, py::arg("n"), py::arg("max_len") = 10, py::arg("cls") = "affine");

  m.def("inversion_number", [](const std::vector<std::int64_t>& w) {
    return inversion_number(AffinePermutation::from_window(static_cast<int>(w.size()), w));
  });
  m.def("is_321_avoiding", [](const std::vector<std::int64_t>& w) {
    return is_321_avoiding(AffinePermutation::from_window(static_cast<int>(w.size()), w));
  });
  m.def("reduced_word", [](const std::vector<std::int64_t>& w) {
    return reduced_word(AffinePermutation::from_window(static_cast<int>(w.size()), w)).letters;
  });

  m.def("delta", [](const std::vector<std::int64_t>& w) {
    return to_py(to_json(delta(AffinePermutation::from_window(static_cast<int>(w.size()), w))));
  });
  m.def("delta_inverse", [](const py::object& d) {
    return delta_inverse(diagram_from_json(from_py(d))).window();
  });
  m.def("phi", [](const py::object& d) { return to_py(to_json(phi(diagram_from_json(from_py(d))))); });
  m.def("phi_inverse", [](const py::object& w) {
    return to_py(to_json(phi_inverse(walk_from_json(from_py(w)))));
  });
  m.def("upsilon", [](const py::object& d) {
    return to_py(to_json(upsilon(diagram_from_json(from_py(d)))));
  });
  m.def("upsilon_inverse", [](const py::object& p) {
    return to_py(to_json(upsilon_inverse(marked_pyramid_from_json(from_py(p)))));
  });
  m.def("f_to_heap", [](const std::vector<std::pair<int, int>>& pairs) {
    return to_py(to_json(f_to_heap(AltSequence::validate(pairs))));
  });
  m.def("f_inverse", [](const py::object& h) {
    return f_inverse(heap_from_json(from_py(h))).pairs();
  });
  m.def("ppp_statistics", [](const std::vector<std::pair<int, int>>& pairs) {
    auto st = statistics(Ppp::validate(AltSequence::validate(pairs)));
    return py::make_tuple(st.width, st.height, st.area);
  });
  m.def("marked_ppp_to_diagram", [](const std::vector<std::pair<int, int>>& pairs, int j) {
    return to_py(to_json(marked_ppp_to_diagram(
        MarkedPpp::validate(Ppp::validate(AltSequence::validate(pairs)), j))));
  });
  m.def("diagram_to_marked_ppp", [](const py::object& d) {
    return to_py(to_json(diagram_to_marked_ppp(diagram_from_json(from_py(d)))));
  });

  m.def("suite_ids", &suite_ids);
  m.def("verify", [](const std::string& suite, int n_max, int len_max, int jobs) {
    VerifyOptions o;
    o.n_max = n_max;
    o.len_max = len_max;
    o.jobs = jobs;
    SuiteReport r;
    {
      py::gil_scoped_release release;
      r = run_suite(suite, o);
    }
    py::list checks;
    for (const auto& c : r.checks)
      checks.append(py::dict(py::arg("name") = c.name, py::arg("passed") = c.passed,
                             py::arg("detail") = c.detail, py::arg("informational") = c.informational));
    return py::dict(py::arg("suite") = r.suite, py::arg("passed") = r.passed(),
                    py::arg("checks") = checks);
  }, py::arg("suite"), py::arg("n_max") = 6, py::arg("len_max") = 12, py::arg("jobs") = 1);
}
