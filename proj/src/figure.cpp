#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ngon/report.hpp"

namespace ngon {

namespace {

constexpr int kCurveSamples = 400;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << v;
  return os.str();
}

}  // namespace

std::string render_figure(const FigureSpec& spec) {
  if (spec.n < 3) throw std::invalid_argument("figure: n must be at least 3");
  if (spec.width_px < 100 || spec.height_px < 100) throw std::invalid_argument("figure: dimensions must be >= 100");

  const RegularNgon g(spec.n, 1.0, spec.theta);
  const double w = spec.width_px;
  const double h = spec.height_px;
  // Circumcircle diameter is 40% of the smaller side; polygon in the upper
  // part, graph of f in the lower third.
  const double scale = 0.2 * std::min(w, h);
  const double cx = w / 2;
  const double cy = h / 3;
  auto px = [&](double x) { return cx + scale * x; };
  auto py = [&](double y) { return cy - scale * y; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width_px << "\" height=\""
      << spec.height_px << "\" viewBox=\"0 0 " << spec.width_px << ' ' << spec.height_px << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "  <line id=\"axis\" x1=\"0\" y1=\"" << fmt(py(0)) << "\" x2=\"" << fmt(w) << "\" y2=\"" << fmt(py(0))
      << "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n"
      << "  <circle id=\"circumcircle\" cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(scale)
      << "\" fill=\"none\" stroke=\"#bbb\" stroke-dasharray=\"4 3\"/>\n";

  svg << "  <polygon id=\"polygon\" points=\"";
  const auto vc = vertex_configuration(g.n(), g.theta());
  for (std::size_t k = 0; k < vc.vertices.size(); ++k)
    svg << (k ? " " : "") << fmt(px(vc.vertices[k].real())) << ',' << fmt(py(vc.vertices[k].imag()));
  svg << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  if (spec.show_circles) {
    const auto fam = tangent_circle_radii(g);
    for (std::size_t d = 0; d < fam.radii.size(); ++d)
      svg << "  <circle id=\"circle-d" << d + 1 << "\" cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\""
          << fmt(scale * fam.radii[d]) << "\" fill=\"none\" stroke=\"#1f77b4\"/>\n";
  }

  if (spec.show_lines) {
    const auto crit = critical_points(projections(g));
    for (std::size_t k = 0; k < crit.size(); ++k)
      svg << "  <line id=\"line-l" << k + 1 << "\" x1=\"" << fmt(px(crit[k])) << "\" y1=\"0\" x2=\""
          << fmt(px(crit[k])) << "\" y2=\"" << fmt(h) << "\" stroke=\"#d62728\" stroke-width=\"0.8\"/>\n";
  }

  if (spec.show_polynomial_curve) {
    const auto f = ngon_polynomial(g);
    const double x_lo = -1.1, x_hi = 1.1;
    std::vector<double> xs(kCurveSamples + 1), ys(kCurveSamples + 1);
    for (int i = 0; i <= kCurveSamples; ++i) {
      xs[i] = x_lo + (x_hi - x_lo) * i / kCurveSamples;
      ys[i] = evaluate(f, xs[i]);
    }
    const auto [mn, mx] = std::minmax_element(ys.begin(), ys.end());
    const double span = std::max(*mx - *mn, 1e-12);
    const double top = 2.0 * h / 3 + 10, bottom = h - 10;
    svg << "  <polyline id=\"curve-f\" points=\"";
    for (int i = 0; i <= kCurveSamples; ++i) {
      const double y = bottom - (ys[i] - *mn) / span * (bottom - top);
      svg << (i ? " " : "") << fmt(px(xs[i])) << ',' << fmt(y);
    }
    svg << "\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1.2\"/>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace ngon
