#pragma once

#include <functional>
#include <span>
#include <vector>

namespace jhull {

/// Parameters of the quadratic map T(z) = z^2 - lambda.
struct MapParams {
  double lambda = 4.0;
  /// Positive fixed point, (1 + sqrt(1 + 4 lambda)) / 2. The Julia set lies in [-xi, xi].
  double xi = 0.0;

  /// Requires lambda > 2 (real Cantor Julia set).
  static MapParams make(double lambda);

  double T(double z) const { return z * z - lambda; }
  double T_prime(double z) const { return 2.0 * z; }
  bool in_trapping_interval(double x, double tol = 0.0) const { return x >= -xi - tol && x <= xi + tol; }

  /// Two-sided bound on w_x^k(T(0)) over [-xi, xi].
  double w_lower() const { return 1.0 / (lambda + xi); }
  double w_upper() const { return 1.0 / (lambda - xi); }
};

/// A real number stored as sign and log|value|, so the doubly exponential
/// critical orbit stays representable.
struct OrbitPoint {
  /// The value itself; +-inf once it leaves double range.
  double value = 0.0;
  int sign = 0;
  double log_abs = 0.0;
  /// 1/value; flushes to zero once |value| exceeds the limit threshold.
  double reciprocal = 0.0;
};

/// Critical orbit T^k(0) together with the derived pole-basis scalars.
///
/// w_x^n(T(0)) = T(0) T^2(0) ... T^n(0) / (x - T^{n+1}(0)) is evaluated as
/// P_n / (1 - x / T^{n+1}(0)) with P_n = w_0^n(T(0)) accumulated through
/// P_n = P_{n-1} / (1 - lambda / T^n(0)^2), which never forms the huge
/// numerator and denominator.
class CriticalOrbit {
 public:
  /// |T^k(0)| beyond which 1/T^k(0) is replaced by its limit 0.
  static constexpr double kLimitThreshold = 1e150;

  CriticalOrbit(const MapParams& params, int max_order);

  const MapParams& params() const { return params_; }
  int max_order() const { return static_cast<int>(points_.size()) - 1; }

  /// T^k(0), 0 <= k <= max_order.
  const OrbitPoint& point(int k) const;
  /// 1 / T^k(0) for k >= 1 (0 in the limit regime).
  double reciprocal(int k) const { return point(k).reciprocal; }
  /// w_0^n(T(0)).
  double w_at_zero(int n) const;
  /// w_x^n(T(0)) via the product formula, n + 1 <= max_order.
  double w(double x, int n) const;

 private:
  MapParams params_;
  std::vector<OrbitPoint> points_;
  std::vector<double> w_zero_;
};

/// T^0(0), ..., T^n(0).
std::vector<OrbitPoint> orbit_of_zero(const MapParams& params, int n);

struct PreimageTree {
  double root = 0.0;
  int depth = 0;
  /// The 2^depth points y with T^depth(y) = root; adjacent pairs are (y, -y)
  /// at the last level.
  std::vector<double> leaves;
  double weight() const;
};

/// Complete inverse-iteration tree; needs root >= -lambda.
PreimageTree preimage_tree(const MapParams& params, double root, int depth);

/// max over leaves of |T^depth(leaf) - root|.
double forward_residual(const MapParams& params, const PreimageTree& tree);

struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;

  double integrate(const std::function<double(double)>& f) const;
};

/// Uniform weights on the depth-d preimages of xi, approximating the
/// balanced (equilibrium) measure of the Julia set.
Quadrature balanced_quadrature(const MapParams& params, int depth);

/// (L_j f)(x) = sum over T(y) = x of f(y) / T'(y)^j, j in {0, 1, 2}.
double scalar_ruelle(const MapParams& params, const std::function<double(double)>& f, int j, double x);

/// |int f dmu - 1/2 int (L_0 f) dmu| for the given quadrature.
double balanced_invariance_residual(const MapParams& params, const Quadrature& mu,
                                    const std::function<double(double)>& f);

struct WValue {
  double x = 0.0;
  int n = 0;
  double value = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  bool within_bounds = false;
  /// False when x lies outside [-xi, xi]; the bounds are then not guaranteed.
  bool x_in_interval = true;
};

WValue w_eval(const CriticalOrbit& orbit, double x, int n);

/// (1/2^n) sum over T^n(y) = x of 1 / (y - T(0)), the partial-fraction form.
double w_preimage_sum(const MapParams& params, double x, int n);

/// Finite positive measure given by point masses.
struct ScalarMeasure {
  std::vector<double> nodes;
  std::vector<double> weights;

  double total_mass() const;
  double integrate(const std::function<double(double)>& f) const;
};

/// |int L_2 f dnu - rho_2 int f dnu| with rho_2 = 1 / (2 a_{-1}^2), the
/// eigenmeasure relation of the half-line block left of the origin.
double nu_invariance_residual(const MapParams& params, const ScalarMeasure& nu, double a_minus1_sq,
                              const std::function<double(double)>& f);

}  // namespace jhull
