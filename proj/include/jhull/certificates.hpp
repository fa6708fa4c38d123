#pragma once

#include <span>
#include <vector>

#include "jhull/dyadic.hpp"
#include "jhull/model.hpp"

namespace jhull {

/// `points` evenly spaced points on [-xi, xi], endpoints included.
std::vector<double> uniform_grid(double xi, int points);

/// max over 1 <= m <= n and x in xs of the entrywise gap between the pole
/// basis evaluation of h_m and the two-term preimage sum applied to h_{m-1}.
double closed_vs_bruteforce(const Model& model, const DyadicInt& kappa, int n, std::span<const double> xs);

/// int tr(h_0 dSigma_kappa) = tr m_kappa(-lambda), computed on the window -N..N.
double h0_sigma_integral(const Model& model, const DyadicInt& kappa, int half_width);

struct SandwichReport {
  int n_max = 0;
  int grid_points = 0;
  int half_width = 0;
  double integral = 0.0;
  double lower = 0.0;  ///< (lambda - xi)/(lambda + xi) * integral
  double upper = 0.0;  ///< (lambda + xi)/(lambda - xi) * integral
  double min_trace = 0.0;
  double max_trace = 0.0;
  int violations = 0;
  double max_coefficient_mass = 0.0;
  double mass_bound = 0.0;  ///< (lambda + xi) * integral
  int mass_violations = 0;
  double min_coefficient_eigenvalue = 0.0;
  bool pass = false;
};

/// Upper and lower trace bounds for h_n on a grid, the coefficient mass
/// bound and PSD-ness of every coefficient, for n <= n_max.
SandwichReport trace_sandwich(const Model& model, const DyadicInt& kappa, int n_max, int grid_points, int half_width);

struct InterpolationReport {
  int n_max = 0;
  double f1 = 0.0;
  bool f1_exact = false;
  /// max_n |f_0^{n+1} - <h_n(0) upsilon, upsilon>|, recurrence against h iteration
  double max_residual = 0.0;
  /// max_n |A_n^n - P^n (P^n)^T| and |A_0^n - f_0^n psi psi^T|
  double top_coefficient_residual = 0.0;
  double zero_coefficient_residual = 0.0;
  bool positive = true;
  /// f_0^n >= w_0^0 <psi_{s^{n-2}}, upsilon_{s^{n-1}}>^2 f_0^{n-1}
  int one_step_violations = 0;
  double min_one_step_ratio = 0.0;
  /// Same with upsilon_{s^{n-2}}; reported, not part of pass.
  int literal_one_step_violations = 0;
  bool pass = false;
};

InterpolationReport interpolation_check(const Model& model, const DyadicInt& kappa, int n_max);

struct PositivityCertificate {
  DyadicInt kappa;
  int run_bound = 0;  ///< N with kappa in F_N on the resolved digits
  int n = 0;
  int grid_points = 0;
  double min_eig = 0.0;
  double c2 = 0.0;  ///< min_m f_0^m
  double c3 = 0.0;  ///< (lambda - 1) / lambda^N
  double predicted_c1 = 0.0;
  bool pass = false;
};

/// min over m <= n and the grid of lambda_min(h_m(x)), with the predicted
/// floor C2 C3^2 / (4 (lambda + xi)(lambda + 1)).
PositivityCertificate positivity_certificate(const Model& model, const DyadicInt& kappa, int n, int grid_points);

struct MassGrowthReport {
  double x0 = 0.0;
  int n = 0;
  int half_width = 0;
  double delta = 0.0;
  std::vector<double> points;        ///< y_m = T^m(x0)
  std::vector<bool> reprojected;     ///< y_m left [-xi, xi] and was clamped
  std::vector<double> t;             ///< tr(h_m(y_m) Sigma_{s^m kappa}(B_delta(y_m)))
  double ratio = 0.0;                ///< max t / min t
  std::vector<double> pullback_residuals;
  double max_pullback_residual = 0.0;
  double evenness_residual = 0.0;    ///< max_m |tr Sigma(B(-y_m)) - tr Sigma(B(y_m))|
  double c_minus = 0.0;
  double c_plus = 0.0;
  double growth_floor = 0.0;         ///< 1 + c_minus / c_plus
  std::vector<double> synthetic_t;
  double min_synthetic_factor = 0.0;
};

/// Mass carried by shrinking balls along the forward orbit of x0 under the
/// h iteration, the pull-back identity
///   int g(T x) tr(h_m dSigma_{s^m kappa}) = int g tr(h_{m+1} dSigma_{s^{m+1} kappa})
/// for g in {1, x, x^2, x^3}, and a synthetic control where an atom and its
/// mirror image are fed through the same h_m and must grow geometrically.
MassGrowthReport mass_growth_probe(const Model& model, const DyadicInt& kappa, double x0, int n, int half_width,
                                   double delta);

}  // namespace jhull
