#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ngon/report.hpp"

namespace py = pybind11;

namespace {

py::object to_fraction(const ngon::Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

py::list exact_coefficients(const ngon::ExactPolynomial& p) {
  py::list out;
  for (const auto& c : p.coefficients()) {
    if (ngon::is_integer(c)) out.append(py::int_(py::str(c.get_num().get_str())));
    else out.append(to_fraction(c));
  }
  return out;
}

py::dict check_to_dict(const ngon::CheckResult& r) {
  py::dict d;
  d["check"] = r.check;
  d["n"] = r.n;
  d["theta"] = r.theta;
  d["R"] = r.radius;
  d["x0"] = r.center_x;
  d["residual"] = r.residual;
  d["tolerance"] = r.tolerance;
  d["pass"] = r.pass;
  d["extra"] = r.extra;
  if (r.failure == ngon::FailureKind::cardinality_mismatch) d["failure"] = "cardinality_mismatch";
  return d;
}

ngon::RegularNgon make_ngon(int n, double theta, double radius, double center_x) {
  return ngon::RegularNgon(n, radius, theta, center_x);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Projection polynomials of rotating regular polygons";

  py::register_exception<ngon::BracketError>(m, "BracketError", PyExc_RuntimeError);

  m.def("from_roots", [](const std::vector<double>& roots) { return ngon::from_roots(roots).coefficients(); },
        py::arg("roots"));
  m.def("derivative",
        [](const std::vector<double>& c, unsigned order) {
          return ngon::derivative(ngon::RealPolynomial(c), order).coefficients();
        },
        py::arg("coefficients"), py::arg("order") = 1);
  m.def("evaluate", [](const std::vector<double>& c, double x) { return ngon::evaluate(ngon::RealPolynomial(c), x); },
        py::arg("coefficients"), py::arg("x"));
  m.def("critical_points", [](const std::vector<double>& roots) { return ngon::critical_points(roots); },
        py::arg("roots"));
  m.def("sup_norm_grid",
        [](const std::vector<double>& c, double a, double b, std::size_t grid) {
          return ngon::sup_norm_grid(ngon::RealPolynomial(c), a, b, grid);
        },
        py::arg("coefficients"), py::arg("a"), py::arg("b"), py::arg("grid_points"));

  m.def("chebyshev_t", [](unsigned n) { return exact_coefficients(ngon::chebyshev_t(n)); }, py::arg("n"));
  m.def("dickson", [](unsigned n) { return exact_coefficients(ngon::dickson(n)); }, py::arg("n"));
  m.def("chebyshev_trig_residual", &ngon::chebyshev_trig_residual, py::arg("n"), py::arg("y"));
  m.def("dickson_identity_residual", &ngon::dickson_identity_residual, py::arg("n"), py::arg("t"));
  m.def("catalan_ratio_coefficients",
        [](unsigned m_, unsigned k) {
          py::list out;
          for (const auto& q : ngon::catalan_ratio_coefficients(m_, k)) out.append(to_fraction(q));
          return out;
        },
        py::arg("m"), py::arg("k"));
  m.def("catalan_numbers",
        [](unsigned k) {
          py::list out;
          for (const auto& c : ngon::catalan_numbers(k)) out.append(py::int_(py::str(c.get_str())));
          return out;
        },
        py::arg("k"));
  m.def("minimax_deviation_report",
        [](unsigned n, std::size_t grid, unsigned trials, std::uint64_t seed) {
          const auto r = ngon::minimax_deviation_report(n, grid, trials, seed);
          py::dict d;
          d["n"] = r.n;
          d["grid_points"] = r.grid_points;
          d["trials"] = r.trials;
          d["seed"] = r.seed;
          d["reference_norm"] = r.reference_norm;
          d["min_perturbed_norm"] = r.min_perturbed_norm;
          d["violations"] = r.violations;
          return d;
        },
        py::arg("n"), py::arg("grid_points") = 10001, py::arg("trials") = 1000, py::arg("seed") = 0);

  m.def("projections",
        [](int n, double theta, double R, double x0) { return ngon::projections(make_ngon(n, theta, R, x0)); },
        py::arg("n"), py::arg("theta") = 0.0, py::arg("R") = 1.0, py::arg("x0") = 0.0);
  m.def("ngon_polynomial",
        [](int n, double theta, double R, double x0) {
          return ngon::ngon_polynomial(make_ngon(n, theta, R, x0)).coefficients();
        },
        py::arg("n"), py::arg("theta") = 0.0, py::arg("R") = 1.0, py::arg("x0") = 0.0);
  m.def("chebyshev_form",
        [](int n, double theta, double R, double x0) {
          return ngon::chebyshev_form(make_ngon(n, theta, R, x0)).coefficients();
        },
        py::arg("n"), py::arg("theta") = 0.0, py::arg("R") = 1.0, py::arg("x0") = 0.0);
  m.def("rotation_monomial_sum", &ngon::rotation_monomial_sum, py::arg("n"), py::arg("k"), py::arg("j"),
        py::arg("theta"));
  m.def("squares_cross_sum", &ngon::squares_cross_sum, py::arg("n"), py::arg("theta"));

  m.def("tangent_circle_radii",
        [](int n, double R) {
          const auto fam = ngon::tangent_circle_radii(ngon::RegularNgon(n, R));
          return py::make_tuple(fam.radii, fam.has_center_line);
        },
        py::arg("n"), py::arg("R") = 1.0);
  m.def("check_extreme_tangency",
        [](int n, double theta, double R, double x0, double tol) {
          return check_to_dict(ngon::check_extreme_tangency(make_ngon(n, theta, R, x0), tol));
        },
        py::arg("n"), py::arg("theta"), py::arg("R") = 1.0, py::arg("x0") = 0.0, py::arg("tol") = 1e-9);
  m.def("check_circle_pairing",
        [](int n, double theta, double R, double x0, double tol) {
          return check_to_dict(ngon::check_circle_pairing(make_ngon(n, theta, R, x0), tol));
        },
        py::arg("n"), py::arg("theta"), py::arg("R") = 1.0, py::arg("x0") = 0.0, py::arg("tol") = 1e-9);
  m.def("check_rotation_invariance",
        [](int n, double t1, double t2, double R, double x0, double tol) {
          return check_to_dict(ngon::check_rotation_invariance(n, t1, t2, R, x0, tol));
        },
        py::arg("n"), py::arg("theta1"), py::arg("theta2"), py::arg("R") = 1.0, py::arg("x0") = 0.0,
        py::arg("tol") = 1e-10);
  m.def("check_vanishing_coefficients",
        [](int n, double theta, double tol) { return check_to_dict(ngon::check_vanishing_coefficients(n, theta, tol)); },
        py::arg("n"), py::arg("theta"), py::arg("tol") = 1e-10);
  m.def("check_center_root",
        [](int n, double theta, double R, double x0, double tol) {
          return check_to_dict(ngon::check_center_root(make_ngon(n, theta, R, x0), tol));
        },
        py::arg("n"), py::arg("theta"), py::arg("R") = 1.0, py::arg("x0") = 0.0, py::arg("tol") = 1e-10);
  m.def("fit_regular_ngon",
        [](const std::vector<double>& lines, double tol) {
          const auto f = ngon::fit_regular_ngon(lines, tol);
          py::dict d;
          d["feasible"] = f.feasible;
          d["x0"] = f.center_x;
          d["R"] = f.radius;
          d["theta"] = f.theta;
          d["residual"] = f.residual;
          d["spread"] = f.spread;
          d["assignment"] = f.assignment;
          return d;
        },
        py::arg("lines"), py::arg("tol") = 1e-8);
  m.def("second_derivative_radii", &ngon::second_derivative_radii, py::arg("n"), py::arg("theta"));

  m.def("run_suite",
        [](int n_min, int n_max, int samples, std::uint64_t seed, double tol) {
          ngon::SuiteConfig c;
          c.n_min = n_min;
          c.n_max = n_max;
          c.samples_per_n = samples;
          c.seed = seed;
          c.tolerance = tol;
          return ngon::serialize_report(ngon::run_suite(c));
        },
        py::arg("n_min") = 3, py::arg("n_max") = 8, py::arg("samples") = 10, py::arg("seed") = 0,
        py::arg("tol") = 1e-9, "Run the verification suite and return the JSON report text");
  m.def("render_figure",
        [](int n, double theta, bool curve, bool circles, bool lines, int width, int height) {
          ngon::FigureSpec s;
          s.n = n;
          s.theta = theta;
          s.show_polynomial_curve = curve;
          s.show_circles = circles;
          s.show_lines = lines;
          s.width_px = width;
          s.height_px = height;
          return ngon::render_figure(s);
        },
        py::arg("n"), py::arg("theta") = 0.0, py::arg("curve") = true, py::arg("circles") = true,
        py::arg("lines") = true, py::arg("width") = 600, py::arg("height") = 600);
}
