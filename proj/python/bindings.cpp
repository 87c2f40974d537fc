// Python bindings. Rationals go in as anything whose str() parses (int, str,
// fractions.Fraction) and come back as canonical strings; structured reports
// cross as JSON text and are decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cevia/error.hpp"
#include "cevia/plot.hpp"
#include "cevia/report.hpp"
#include "cevia/weierstrass.hpp"

namespace py = pybind11;
using namespace cevia;

namespace {

Rational to_rational(const py::handle& h) { return Rational::parse(py::str(h).cast<std::string>()); }

BaryPoint to_point(const py::handle& x, const py::handle& y, const py::handle& z) {
  return BaryPoint(to_rational(x), to_rational(y), to_rational(z));
}

std::vector<std::string> strings(const BaryPoint& p) { return {p.x().str(), p.y().str(), p.z().str()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact cevian constructions and the elliptic family E_a";

  static py::exception<Error> error(m, "CeviaError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("normalize", [](py::handle x, py::handle y, py::handle z) { return strings(to_point(x, y, z)); });
  m.def("isotomic", [](py::handle x, py::handle y, py::handle z) { return strings(isotomic(to_point(x, y, z))); });
  m.def("complement", [](py::handle x, py::handle y, py::handle z) { return strings(complement(to_point(x, y, z))); });
  m.def("flags", [](py::handle x, py::handle y, py::handle z) { return classify(to_point(x, y, z)).names(); });
  m.def("a_of_point", [](py::handle x, py::handle y, py::handle z) { return a_of_point(to_point(x, y, z)).str(); });

  m.def("construct_json", [](py::handle x, py::handle y, py::handle z) {
    const BaryPoint p = to_point(x, y, z);
    const DegeneracyFlags f = classify(p);
    if (f.blocks_report()) return degenerate_report(p, f, "degenerate point").dump();
    return construction_report(CevianContext(p)).dump();
  });

  m.def("j_invariant", [](py::handle a) { return j_invariant(to_rational(a)).str(); });
  m.def("disc_d", [](py::handle a) { return disc_d(to_rational(a)).str(); });
  m.def("curve_info_json", [](py::handle a) { return curve_report(Curve(to_rational(a))).dump(); });
  m.def("group_table_json", [](py::handle a) { return torsion_table_report(Curve(to_rational(a))).dump(); });
  m.def(
      "j_invert_json",
      [](py::handle j0, py::handle prec) { return intervals_report(j_invert(to_rational(j0), to_rational(prec))).dump(); },
      py::arg("j0"), py::arg("precision") = "1/10000000000");
  m.def("weierstrass_image", [](py::handle x, py::handle y, py::handle z) -> py::object {
    const WeierstrassPoint w = weierstrass_map_minus3(membership(Curve(Rational(-3)), to_point(x, y, z)));
    if (w.at_infinity) return py::none();
    return py::make_tuple(w.u.str(), w.v.str());
  });
  m.def(
      "plot",
      [](py::handle a, py::handle xmin, py::handle xmax, std::size_t samples, const std::string& format) {
        PlotWindow window;
        window.xmin = to_rational(xmin);
        window.xmax = to_rational(xmax);
        window.samples = samples;
        const PlotData data = sample_curve(to_rational(a), window);
        return format == "csv" ? plot_csv(data) : plot_svg(data, window);
      },
      py::arg("a"), py::arg("xmin") = "-5", py::arg("xmax") = "5", py::arg("samples") = 401,
      py::arg("format") = "svg");
  m.def(
      "verify_json",
      [](std::size_t samples, std::uint64_t seed) {
        VerifyOptions o;
        o.samples = samples;
        o.seed = seed;
        py::gil_scoped_release release;
        return verify_report(run_verification(o)).dump();
      },
      py::arg("samples") = 10, py::arg("seed") = 1);
}
