#include "ngon/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

namespace ngon {

using json = nlohmann::ordered_json;

void validate(const SuiteConfig& config) {
  if (config.n_min < 3) throw std::invalid_argument("n_min must be at least 3");
  if (config.n_max < config.n_min) throw std::invalid_argument("n_max must not be below n_min");
  if (config.n_max > kSuiteHardMaxN) throw std::invalid_argument("n_max must be at most 32");
  if (config.samples_per_n < 1) throw std::invalid_argument("samples must be positive");
  if (!(config.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
}

namespace {

struct Draw {
  double theta;
  double theta2;
  double radius;
  double center_x;
  double y;
  std::complex<double> t;
};

Draw draw_parameters(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> radius(0.1, 10.0);
  std::uniform_real_distribution<double> center(-5.0, 5.0);
  std::uniform_real_distribution<double> y(-10.0, 10.0);
  std::uniform_real_distribution<double> modulus(0.5, 2.0);
  Draw d;
  d.theta = angle(rng);
  d.theta2 = angle(rng);
  d.radius = radius(rng);
  d.center_x = center(rng);
  d.y = y(rng);
  const double m = modulus(rng);
  d.t = std::polar(m, angle(rng));
  return d;
}

void run_sample(int n, const Draw& d, double tol, std::vector<CheckResult>& out) {
  const RegularNgon g(n, d.radius, d.theta, d.center_x);
  out.push_back(check_extreme_tangency(g, tol));
  out.push_back(check_circle_pairing(g, tol));

  // Coefficients grow like (|x0| + R)^n; compare at that scale.
  const double scale = std::max(1.0, std::pow(std::abs(d.center_x) + d.radius, n));
  auto rot = check_rotation_invariance(n, d.theta, d.theta2, d.radius, d.center_x, tol * scale);
  rot.extra["coefficient_scale"] = scale;
  out.push_back(std::move(rot));

  out.push_back(check_vanishing_coefficients(n, d.theta, tol));
  out.push_back(check_center_root(g, tol));

  const RegularNgon unit(n, 1.0, d.theta);
  if (n <= kMonomialSumMaxN) {
    double worst = 0.0;
    for (int k = 1; k < n; ++k)
      for (int j = 0; j <= k; ++j)
        if (2 * j != k) worst = std::max(worst, std::abs(rotation_monomial_sum(n, k, j, d.theta)));
    out.push_back(make_result("monomial_sums", unit, worst, kSymmetricSumTol));
  }
  if (n >= 4) out.push_back(make_result("squares_cross_sum", unit, std::abs(squares_cross_sum(n, d.theta)), kSymmetricSumTol));

  auto trig = make_result("chebyshev_identity", unit, chebyshev_trig_residual(n, d.y), kTrigIdentityTol);
  trig.extra["y"] = d.y;
  out.push_back(std::move(trig));

  auto dick = make_result("dickson_identity", unit, dickson_identity_relative_residual(n, d.t), kDicksonRelTol);
  dick.extra["t_re"] = d.t.real();
  dick.extra["t_im"] = d.t.imag();
  out.push_back(std::move(dick));
}

}  // namespace

std::vector<CheckResult> run_suite(const SuiteConfig& config) {
  validate(config);
  std::mt19937_64 rng(config.seed);
  std::vector<CheckResult> results;
  for (int n = config.n_min; n <= config.n_max; ++n)
    for (int s = 0; s < config.samples_per_n; ++s) run_sample(n, draw_parameters(rng), config.tolerance, results);

  std::stable_sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
    if (a.check != b.check) return a.check < b.check;
    if (a.n != b.n) return a.n < b.n;
    return a.theta < b.theta;
  });
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

namespace {

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

std::string serialize_report(const std::vector<CheckResult>& results) {
  json arr = json::array();
  for (const auto& r : results) {
    json extra = json::object();
    for (const auto& [k, v] : r.extra) extra[k] = number_or_null(v);
    if (r.failure == FailureKind::cardinality_mismatch) extra["failure"] = "cardinality_mismatch";
    arr.push_back(json{{"check", r.check},
                       {"n", r.n},
                       {"theta", r.theta},
                       {"R", r.radius},
                       {"x0", r.center_x},
                       {"residual", number_or_null(r.residual)},
                       {"tolerance", r.tolerance},
                       {"pass", r.pass},
                       {"extra", std::move(extra)}});
  }
  return arr.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("failed writing " + path);
}

std::string serialize_fit(const FitResult& fit) {
  json j{{"feasible", fit.feasible},
         {"x0", fit.center_x},
         {"R", fit.radius},
         {"theta", fit.theta},
         {"residual", fit.residual},
         {"spread", fit.spread},
         {"assignment", fit.assignment}};
  return j.dump(2) + "\n";
}

std::vector<CatalanRow> catalan_table(unsigned m, unsigned terms) {
  const auto coeffs = catalan_ratio_coefficients(m, terms);
  const auto catalan = catalan_numbers(terms);
  std::vector<CatalanRow> rows;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    Rational err = coeffs[j] - Rational(catalan[j]);
    rows.push_back({j + 1, coeffs[j], catalan[j], abs(err)});
  }
  return rows;
}

std::string format_coefficients(const ExactPolynomial& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << to_string(p[i]);
  os << ']';
  return os.str();
}

}  // namespace ngon
