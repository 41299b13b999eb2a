// ngonpoly: verification suite, figures, feasibility fit and Chebyshev /
// Catalan inspectors for projections of rotating regular polygons.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ngon/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("cannot parse range '" + text + "', expected A..B");
  }
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("cannot parse '" + item + "' as a number");
    }
    if (used != item.size()) throw UsageError("cannot parse '" + item + "' as a number");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular polygon projection polynomials: verification and figures"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("--verbose", verbose, "Print diagnostics on errors");

  auto* verify = app.add_subcommand("verify", "Run the verification suite and write a JSON report");
  std::string n_range = "3..8";
  ngon::SuiteConfig config;
  verify->add_option("--n", n_range, "Polygon sizes as A..B")->capture_default_str();
  verify->add_option("--samples", config.samples_per_n, "Random parameter draws per n")->capture_default_str();
  verify->add_option("--seed", config.seed, "Random seed")->capture_default_str();
  verify->add_option("--tol", config.tolerance, "Tolerance of the geometric checks")->capture_default_str();
  verify->add_option("--out", config.output_path, "Report path")->capture_default_str();

  auto* figure = app.add_subcommand("figure", "Render the polygon, tangent circles and critical lines as SVG");
  ngon::FigureSpec fig;
  std::string fig_out = "figure.svg";
  bool no_curve = false, no_circles = false, no_lines = false;
  figure->add_option("--n", fig.n, "Number of vertices")->capture_default_str();
  figure->add_option("--theta", fig.theta, "Rotation angle in radians")->capture_default_str();
  figure->add_option("--width", fig.width_px, "Width in pixels")->capture_default_str();
  figure->add_option("--height", fig.height_px, "Height in pixels")->capture_default_str();
  figure->add_flag("--no-curve", no_curve, "Omit the graph of f");
  figure->add_flag("--no-circles", no_circles, "Omit the tangent circles");
  figure->add_flag("--no-lines", no_lines, "Omit the critical lines");
  figure->add_option("--out", fig_out, "SVG path")->capture_default_str();

  auto* fit = app.add_subcommand("fit", "Look for a regular polygon with vertices on given vertical lines");
  std::string lines_text;
  double fit_tol = 1e-8;
  fit->add_option("--lines", lines_text, "Comma-separated abscissas")->required();
  fit->add_option("--tol", fit_tol, "Relative RMS tolerance")->capture_default_str();

  auto* cheb = app.add_subcommand("chebyshev", "Print exact coefficients of T_n and D_n");
  unsigned cheb_n = 5;
  cheb->add_option("--n", cheb_n, "Degree")->capture_default_str();

  auto* catalan = app.add_subcommand("catalan", "Compare T_m(1/2x)/T_(m-1)(1/2x) with Catalan numbers");
  unsigned cat_m = 40, cat_terms = 5;
  catalan->add_option("--m", cat_m, "Index m >= 2")->capture_default_str();
  catalan->add_option("--terms", cat_terms, "Number of coefficients, at most m - 1")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      std::tie(config.n_min, config.n_max) = parse_range(n_range);
      try {
        ngon::validate(config);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (config.n_max > ngon::kSuiteDefaultMaxN)
        std::cerr << "warning: n above " << ngon::kSuiteDefaultMaxN << " makes the suite slow\n";
      const auto results = ngon::run_suite(config);
      ngon::write_text_file(config.output_path, ngon::serialize_report(results));
      std::size_t failed = 0;
      for (const auto& r : results) failed += r.pass ? 0 : 1;
      std::cout << results.size() << " checks, " << failed << " failed; report written to " << config.output_path
                << '\n';
      return failed == 0 ? kExitOk : kExitFailed;
    }

    if (figure->parsed()) {
      fig.show_polynomial_curve = !no_curve;
      fig.show_circles = !no_circles;
      fig.show_lines = !no_lines;
      std::string svg;
      try {
        svg = ngon::render_figure(fig);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      ngon::write_text_file(fig_out, svg);
      return kExitOk;
    }

    if (fit->parsed()) {
      const auto lines = parse_list(lines_text);
      ngon::FitResult result;
      try {
        result = ngon::fit_regular_ngon(lines, fit_tol);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      std::cout << ngon::serialize_fit(result);
      return result.feasible ? kExitOk : kExitFailed;
    }

    if (cheb->parsed()) {
      std::cout << "T_" << cheb_n << ": " << ngon::format_coefficients(ngon::chebyshev_t(cheb_n)) << '\n';
      if (cheb_n >= 1)
        std::cout << "D_" << cheb_n << ": " << ngon::format_coefficients(ngon::dickson(cheb_n)) << '\n';
      return kExitOk;
    }

    if (catalan->parsed()) {
      if (cat_m < 2 || cat_terms < 1 || cat_terms > cat_m - 1)
        throw UsageError("catalan needs m >= 2 and 1 <= terms <= m - 1");
      std::cout << std::left << std::setw(6) << "x^" << std::setw(28) << "coefficient" << std::setw(16) << "decimal"
                << std::setw(10) << "catalan" << "abs error\n";
      for (const auto& row : ngon::catalan_table(cat_m, cat_terms)) {
        std::cout << std::left << std::setw(6) << (2 * row.index - 1) << std::setw(28) << ngon::to_string(row.value)
                  << std::setw(16) << std::setprecision(10) << ngon::to_double(row.value) << std::setw(10)
                  << row.target.get_str() << ngon::to_double(row.error) << '\n';
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ngon::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (verbose) std::cerr << "  (exception type: " << typeid(e).name() << ")\n";
    return kExitFailed;
  }
  return kExitUsage;
}
