#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "zgu/cli.hpp"
#include "zgu/cyclotomic.hpp"
#include "zgu/error.hpp"
#include "zgu/io.hpp"
#include "zgu/obstructions.hpp"

namespace py = pybind11;

namespace {

zgu::Rational to_rational(const py::object &o) {
  if (py::isinstance<py::int_>(o))
    return zgu::Rational(py::str(o).cast<std::string>());
  // fractions.Fraction or anything with numerator/denominator
  zgu::Rational r(zgu::Integer(py::str(o.attr("numerator")).cast<std::string>()),
                  zgu::Integer(py::str(o.attr("denominator")).cast<std::string>()));
  r.canonicalize();
  return r;
}

py::object to_fraction(const zgu::Rational &r) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(py::int_(py::str(r.get_num().get_str())), py::int_(py::str(r.get_den().get_str())));
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact torsion-unit obstructions for integral group rings";

  m.def(
      "run",
      [](const std::vector<std::string> &args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = zgu::run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the zgu command line; returns (exit_code, stdout, stderr).");

  m.def("set_data_dir", [](const std::string &dir) { zgu::set_data_dir(dir); });
  m.def("data_dir", []() { return zgu::data_dir().string(); });

  py::class_<zgu::Cyclotomic>(m, "Cyclotomic")
      .def(py::init([](const py::object &v) { return zgu::Cyclotomic(to_rational(v)); }),
           py::arg("value") = 0)
      .def_static("zeta", &zgu::Cyclotomic::zeta, py::arg("n"), py::arg("k") = 1)
      .def_property_readonly("conductor", &zgu::Cyclotomic::conductor)
      .def("is_rational", &zgu::Cyclotomic::is_rational)
      .def("as_fraction", [](const zgu::Cyclotomic &c) { return to_fraction(c.as_rational()); })
      .def("galois", &zgu::Cyclotomic::galois)
      .def("conj", &zgu::Cyclotomic::conj)
      .def("trace", [](const zgu::Cyclotomic &c) { return to_fraction(c.trace()); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const zgu::Cyclotomic &c) { return "Cyclotomic(" + c.to_string() + ")"; })
      .def("__str__", &zgu::Cyclotomic::to_string);

  m.def("elementary_abelian_rank", [](const std::vector<py::object> &values, long p) {
    std::vector<zgu::Cyclotomic> v;
    for (const auto &x : values)
      v.emplace_back(to_rational(x));
    return to_fraction(zgu::elementary_abelian_rank(v, p));
  });

  py::register_exception<zgu::Error>(m, "ZguError", PyExc_ValueError);
}
