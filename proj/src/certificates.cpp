#include "jhull/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jhull/error.hpp"
#include "jhull/hull.hpp"
#include "jhull/numeric.hpp"
#include "jhull/ruelle.hpp"

namespace jhull {

std::vector<double> uniform_grid(double xi, int points) {
  if (points < 2) throw DomainError("grid needs at least two points");
  std::vector<double> xs(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) xs[static_cast<std::size_t>(i)] = -xi + 2.0 * xi * i / (points - 1);
  return xs;
}

double closed_vs_bruteforce(const Model& model, const DyadicInt& kappa, int n, std::span<const double> xs) {
  auto hs = iterate_h(model, kappa, n);
  double worst = 0.0;
  DyadicInt cur = kappa;
  for (int m = 1; m <= n; ++m) {
    const RuelleWeight w = weight(model, cur);
    const auto& prev = hs[static_cast<std::size_t>(m - 1)];
    const auto& next = hs[static_cast<std::size_t>(m)];
    for (double x : xs) {
      Eigen::Matrix2d diff = next(x) - apply_bruteforce(w, prev, x);
      worst = std::max(worst, diff.cwiseAbs().maxCoeff());
    }
    if (m < n) cur = modified_shift(cur);
  }
  return worst;
}

double h0_sigma_integral(const Model& model, const DyadicInt& kappa, int half_width) {
  TruncatedJacobi j = build_truncation(*model.table, kappa, half_width);
  ResolventSample s = resolvent_entry(j, {-model.lambda(), 0.0}, model.xi());
  return s.m.trace().real();
}

SandwichReport trace_sandwich(const Model& model, const DyadicInt& kappa, int n_max, int grid_points, int half_width) {
  const double lam = model.lambda();
  const double xi = model.xi();
  SandwichReport r;
  r.n_max = n_max;
  r.grid_points = grid_points;
  r.half_width = half_width;
  r.integral = h0_sigma_integral(model, kappa, half_width);
  r.lower = (lam - xi) / (lam + xi) * r.integral;
  r.upper = (lam + xi) / (lam - xi) * r.integral;
  r.mass_bound = (lam + xi) * r.integral;
  r.min_trace = std::numeric_limits<double>::infinity();
  r.max_trace = -std::numeric_limits<double>::infinity();
  r.min_coefficient_eigenvalue = std::numeric_limits<double>::infinity();

  const auto xs = uniform_grid(xi, grid_points);
  const auto hs = iterate_h(model, kappa, n_max);
  for (const auto& h : hs) {
    for (double x : xs) {
      double tr = h(x).trace();
      r.min_trace = std::min(r.min_trace, tr);
      r.max_trace = std::max(r.max_trace, tr);
      if (tr < r.lower || tr > r.upper) ++r.violations;
    }
    double mass = h.coefficient_mass();
    r.max_coefficient_mass = std::max(r.max_coefficient_mass, mass);
    if (mass > r.mass_bound) ++r.mass_violations;
    r.min_coefficient_eigenvalue = std::min(r.min_coefficient_eigenvalue, h.min_coefficient_eigenvalue());
  }
  r.pass = r.violations == 0 && r.mass_violations == 0 && r.min_coefficient_eigenvalue >= -1e-12;
  return r;
}

InterpolationReport interpolation_check(const Model& model, const DyadicInt& kappa, int n_max) {
  require_precision(kappa, n_max + 3, "interpolation check");
  InterpolationReport r;
  r.n_max = n_max;
  const auto hs = iterate_h(model, kappa, n_max);
  const FSequence f = f0_recurrence(model, kappa, n_max + 1);
  r.f1 = f.at(1);
  r.f1_exact = r.f1 == 1.0 / model.lambda();

  std::vector<RuelleWeight> ws;
  DyadicInt cur = kappa;
  for (int m = 0; m <= n_max; ++m) {
    ws.push_back(weight(model, cur));
    if (m < n_max) cur = modified_shift(cur);
  }

  for (double v : f.values) {
    if (!(v > 0.0)) r.positive = false;
  }

  for (int n = 0; n <= n_max; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const Eigen::Vector2d& ups = ws[un].upsilon;
    const double via_h = ups.dot(hs[un](0.0) * ups);
    r.max_residual = std::max(r.max_residual, std::abs(f.at(n + 1) - via_h));
    if (n >= 1) {
      const Eigen::Matrix2d p = frakP_critical(model, kappa, n);
      const Eigen::Matrix2d top = hs[un].coeffs()[un] - p * p.transpose();
      r.top_coefficient_residual = std::max(r.top_coefficient_residual, top.cwiseAbs().maxCoeff());
      const Eigen::Vector2d& psi = ws[un - 1].psi;
      const Eigen::Matrix2d zero = hs[un].coeffs()[0] - f.at(n) * psi * psi.transpose();
      r.zero_coefficient_residual = std::max(r.zero_coefficient_residual, zero.cwiseAbs().maxCoeff());
    }
  }

  const double w00 = model.orbit->w_at_zero(0);
  r.min_one_step_ratio = std::numeric_limits<double>::infinity();
  for (int n = 2; n <= n_max + 1; ++n) {
    const auto a = static_cast<std::size_t>(n - 2);
    const double c = ws[a].psi.dot(ws[a + 1].upsilon);
    const double lit = ws[a].psi.dot(ws[a].upsilon);
    const double prev = f.at(n - 1);
    const double bound = w00 * c * c * prev;
    if (f.at(n) < bound * (1.0 - 1e-12)) ++r.one_step_violations;
    if (bound > 0.0) r.min_one_step_ratio = std::min(r.min_one_step_ratio, f.at(n) / bound);
    if (f.at(n) < w00 * lit * lit * prev * (1.0 - 1e-12)) ++r.literal_one_step_violations;
  }

  r.pass = r.f1_exact && r.positive && r.max_residual < 1e-10 && r.top_coefficient_residual < 1e-10 &&
           r.zero_coefficient_residual < 1e-10 && r.one_step_violations == 0;
  return r;
}

PositivityCertificate positivity_certificate(const Model& model, const DyadicInt& kappa, int n, int grid_points) {
  require_precision(kappa, n + 3, "positivity certificate");
  const double lam = model.lambda();
  const double xi = model.xi();
  PositivityCertificate c;
  c.kappa = kappa;
  c.n = n;
  c.grid_points = grid_points;
  c.run_bound = run_profile(kappa, std::min(kappa.precision(), model.table->float_depth())).max_run();

  const auto xs = uniform_grid(xi, grid_points);
  const auto hs = iterate_h(model, kappa, n);
  c.min_eig = std::numeric_limits<double>::infinity();
  for (const auto& h : hs) {
    for (double x : xs) c.min_eig = std::min(c.min_eig, min_eigenvalue(h(x)));
  }
  const FSequence f = f0_recurrence(model, kappa, n + 1);
  c.c2 = *std::min_element(f.values.begin(), f.values.end());
  c.c3 = (lam - 1.0) / std::pow(lam, c.run_bound);
  c.predicted_c1 = c.c2 * c.c3 * c.c3 / (4.0 * (lam + xi) * (lam + 1.0));
  c.pass = c.min_eig > 0.0 && c.min_eig >= c.predicted_c1;
  return c;
}

MassGrowthReport mass_growth_probe(const Model& model, const DyadicInt& kappa, double x0, int n, int half_width,
                                   double delta) {
  if (n < 1) throw DomainError("mass growth probe needs n >= 1");
  if (!(delta > 0.0)) throw DomainError("ball radius must be positive");
  require_precision(kappa, n + 3, "mass growth probe");
  const MapParams& params = model.params;
  const double xi = params.xi;
  if (!params.in_trapping_interval(x0, 1e-12)) throw DomainError("x0 must lie in [-xi, xi]");

  MassGrowthReport r;
  r.x0 = x0;
  r.n = n;
  r.half_width = half_width;
  r.delta = delta;

  const auto hs = iterate_h(model, kappa, n + 1);
  std::vector<SpectralMeasureApprox> sigmas;
  DyadicInt cur = kappa;
  for (int m = 0; m <= n + 1; ++m) {
    sigmas.push_back(spectral_measure(build_truncation(*model.table, cur, half_width)));
    if (m <= n) cur = modified_shift(cur);
  }

  double y = x0;
  for (int m = 0; m <= n; ++m) {
    bool clamped = false;
    if (y > xi) {
      y = xi;
      clamped = true;
    } else if (y < -xi) {
      y = -xi;
      clamped = true;
    }
    r.points.push_back(y);
    r.reprojected.push_back(clamped);
    y = params.T(y);
  }

  auto ball = [&](const SpectralMeasureApprox& s, double c) {
    Eigen::Matrix2d w = Eigen::Matrix2d::Zero();
    for (const auto& a : s.atoms) {
      if (std::abs(a.x - c) <= delta) w += a.weight;
    }
    return w;
  };

  for (int m = 0; m <= n; ++m) {
    const auto um = static_cast<std::size_t>(m);
    const double ym = r.points[um];
    r.t.push_back((hs[um](ym) * ball(sigmas[um], ym)).trace());
    r.evenness_residual = std::max(r.evenness_residual,
                                   std::abs(sigmas[um].trace_mass(-ym - delta, -ym + delta) -
                                            sigmas[um].trace_mass(ym - delta, ym + delta)));
  }
  const auto [tmin, tmax] = std::minmax_element(r.t.begin(), r.t.end());
  r.ratio = *tmin > 0.0 ? *tmax / *tmin : std::numeric_limits<double>::infinity();

  for (int m = 0; m <= n; ++m) {
    const auto um = static_cast<std::size_t>(m);
    double worst = 0.0;
    for (int deg = 0; deg <= 3; ++deg) {
      auto g = [deg](double x) { return std::pow(x, deg); };
      double lhs = sigmas[um].pair([&](double x) -> Eigen::Matrix2d { return g(params.T(x)) * hs[um](x); });
      double rhs = sigmas[um + 1].pair([&](double x) -> Eigen::Matrix2d { return g(x) * hs[um + 1](x); });
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    r.pullback_residuals.push_back(worst);
    r.max_pullback_residual = std::max(r.max_pullback_residual, worst);
  }

  // Sandwich constants over the grid and the orbit points with their mirrors.
  std::vector<double> xs = uniform_grid(xi, 200);
  for (double p : r.points) {
    xs.push_back(p);
    xs.push_back(-p);
  }
  r.c_minus = std::numeric_limits<double>::infinity();
  r.c_plus = 0.0;
  for (int m = 0; m <= n; ++m) {
    for (double x : xs) {
      Eigen::Matrix2d h = hs[static_cast<std::size_t>(m)](x);
      r.c_minus = std::min(r.c_minus, min_eigenvalue(h));
      r.c_plus = std::max(r.c_plus, max_eigenvalue(h));
    }
  }
  r.growth_floor = 1.0 + r.c_minus / r.c_plus;

  // Synthetic control: an atom of weight W_m at y_m is accompanied, by
  // evenness of the trace measure, by a mirrored atom of the same trace at
  // -y_m; both pull back into the mass at y_{m+1}. The mirror is placed
  // adversarially along the smallest eigenvector of h_m(-y_m), and W_{m+1}
  // is the smallest-trace weight carrying the new mass.
  Eigen::Matrix2d w = ball(sigmas[0], r.points[0]);
  if (w.trace() <= 0.0) w = 0.5 * Eigen::Matrix2d::Identity();
  double ts = (hs[0](r.points[0]) * w).trace();
  r.synthetic_t.push_back(ts);
  r.min_synthetic_factor = std::numeric_limits<double>::infinity();
  for (int m = 0; m < n; ++m) {
    const auto um = static_cast<std::size_t>(m);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> mirror(hs[um](-r.points[um]));
    Eigen::Vector2d u = mirror.eigenvectors().col(0);
    const double next = ts + w.trace() * u.dot(hs[um](-r.points[um]) * u);
    r.min_synthetic_factor = std::min(r.min_synthetic_factor, next / ts);
    ts = next;
    r.synthetic_t.push_back(ts);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> here(hs[um + 1](r.points[um + 1]));
    Eigen::Vector2d v = here.eigenvectors().col(1);
    w = (ts / here.eigenvalues()(1)) * v * v.transpose();
  }
  return r;
}

}  // namespace jhull
