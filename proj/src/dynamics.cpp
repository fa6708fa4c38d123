#include "jhull/dynamics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "jhull/error.hpp"
#include "jhull/numeric.hpp"

namespace jhull {

MapParams MapParams::make(double lambda) {
  if (!(lambda > 2.0)) {
    throw RegimeError("quadratic map needs lambda > 2, got " + std::to_string(lambda));
  }
  MapParams p;
  p.lambda = lambda;
  p.xi = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * lambda));
  return p;
}

CriticalOrbit::CriticalOrbit(const MapParams& params, int max_order) : params_(params) {
  if (max_order < 1) throw DomainError("critical orbit needs max_order >= 1");
  const double lambda = params.lambda;
  const double log_threshold = std::log(kLimitThreshold);
  points_.resize(static_cast<std::size_t>(max_order) + 1);
  points_[0] = OrbitPoint{0.0, 0, -std::numeric_limits<double>::infinity(),
                          std::numeric_limits<double>::infinity()};

  // Direct iteration while squaring is safe, then the log / reciprocal recursion
  //   log|t_{k+1}| = 2 log|t_k| + log1p(-lambda / t_k^2),
  //   1/t_{k+1}   = r_k^2 / (1 - lambda r_k^2).
  double v = -lambda;
  double r = -1.0 / lambda;
  double log_abs = std::log(lambda);
  bool direct = true;
  for (int k = 1; k <= max_order; ++k) {
    OrbitPoint& p = points_[static_cast<std::size_t>(k)];
    p.sign = (k == 1) ? -1 : 1;
    p.log_abs = log_abs;
    p.value = direct ? v : std::numeric_limits<double>::infinity();
    p.reciprocal = (log_abs > log_threshold) ? 0.0 : r;

    double lr2 = lambda * r * r;
    if (direct && std::abs(v) < 1e100) {
      v = v * v - lambda;
      r = 1.0 / v;
      log_abs = std::log(std::abs(v));
    } else {
      direct = false;
      log_abs = 2.0 * log_abs + std::log1p(-lr2);
      r = r * r / (1.0 - lr2);
    }
  }

  w_zero_.resize(static_cast<std::size_t>(max_order));
  w_zero_[0] = 1.0 / lambda;
  for (int n = 1; n < max_order; ++n) {
    double rn = points_[static_cast<std::size_t>(n)].reciprocal;
    w_zero_[static_cast<std::size_t>(n)] = w_zero_[static_cast<std::size_t>(n) - 1] / (1.0 - lambda * rn * rn);
  }
}

const OrbitPoint& CriticalOrbit::point(int k) const {
  if (k < 0 || k > max_order()) {
    throw PrecisionError("critical orbit index " + std::to_string(k) + " beyond computed order " +
                         std::to_string(max_order()));
  }
  return points_[static_cast<std::size_t>(k)];
}

double CriticalOrbit::w_at_zero(int n) const {
  if (n < 0 || n + 1 > max_order()) {
    throw PrecisionError("w_0^" + std::to_string(n) + " needs critical orbit order " + std::to_string(n + 1));
  }
  return w_zero_[static_cast<std::size_t>(n)];
}

double CriticalOrbit::w(double x, int n) const {
  return w_at_zero(n) / (1.0 - x * reciprocal(n + 1));
}

std::vector<OrbitPoint> orbit_of_zero(const MapParams& params, int n) {
  if (n < 0) throw DomainError("orbit length must be >= 0");
  CriticalOrbit orbit(params, n < 1 ? 1 : n);
  std::vector<OrbitPoint> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out.push_back(orbit.point(k));
  return out;
}

double PreimageTree::weight() const { return std::ldexp(1.0, -depth); }

PreimageTree preimage_tree(const MapParams& params, double root, int depth) {
  if (depth < 0) throw DomainError("preimage depth must be >= 0");
  if (root < -params.lambda) {
    throw DomainError("no real preimages below -lambda (root " + std::to_string(root) + ")");
  }
  PreimageTree tree;
  tree.root = root;
  tree.depth = depth;
  std::vector<double> level{root};
  for (int d = 0; d < depth; ++d) {
    std::vector<double> next;
    next.reserve(level.size() * 2);
    for (double u : level) {
      double y = std::sqrt(std::max(0.0, u + params.lambda));
      next.push_back(y);
      next.push_back(-y);
    }
    level = std::move(next);
  }
  tree.leaves = std::move(level);
  return tree;
}

double forward_residual(const MapParams& params, const PreimageTree& tree) {
  double worst = 0.0;
  // Forward iteration in extended precision so the residual reflects the
  // leaves rather than the rounding of the check itself.
  const long double lambda = params.lambda;
  for (double y : tree.leaves) {
    long double v = y;
    for (int d = 0; d < tree.depth; ++d) v = v * v - lambda;
    worst = std::max(worst, static_cast<double>(std::abs(v - static_cast<long double>(tree.root))));
  }
  return worst;
}

double Quadrature::integrate(const std::function<double(double)>& f) const {
  std::vector<double> terms(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) terms[i] = weights[i] * f(nodes[i]);
  return pairwise_sum(terms);
}

Quadrature balanced_quadrature(const MapParams& params, int depth) {
  if (depth < 1) throw DomainError("balanced quadrature needs depth >= 1");
  auto tree = preimage_tree(params, params.xi, depth);
  Quadrature q;
  q.weights.assign(tree.leaves.size(), tree.weight());
  q.nodes = std::move(tree.leaves);
  return q;
}

double scalar_ruelle(const MapParams& params, const std::function<double(double)>& f, int j, double x) {
  if (j < 0 || j > 2) throw DomainError("scalar Ruelle weight index must be 0, 1 or 2");
  if (x < -params.lambda) throw DomainError("no real preimages below -lambda");
  double y = std::sqrt(x + params.lambda);
  if (j >= 1 && y == 0.0) {
    throw DomainError("singular weight: preimage at the critical point");
  }
  double dp = std::pow(params.T_prime(y), j);
  double dm = std::pow(params.T_prime(-y), j);
  return f(y) / dp + f(-y) / dm;
}

double balanced_invariance_residual(const MapParams& params, const Quadrature& mu,
                                    const std::function<double(double)>& f) {
  double lhs = mu.integrate(f);
  double rhs = 0.5 * mu.integrate([&](double x) { return scalar_ruelle(params, f, 0, x); });
  return std::abs(lhs - rhs);
}

WValue w_eval(const CriticalOrbit& orbit, double x, int n) {
  const MapParams& p = orbit.params();
  WValue out;
  out.x = x;
  out.n = n;
  out.value = orbit.w(x, n);
  out.lower_bound = p.w_lower();
  out.upper_bound = p.w_upper();
  out.x_in_interval = p.in_trapping_interval(x);
  out.within_bounds = out.value >= out.lower_bound && out.value <= out.upper_bound;
  return out;
}

double w_preimage_sum(const MapParams& params, double x, int n) {
  auto tree = preimage_tree(params, x, n);
  std::vector<double> terms(tree.leaves.size());
  for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = 1.0 / (tree.leaves[i] + params.lambda);
  return pairwise_sum(terms) * tree.weight();
}

double ScalarMeasure::total_mass() const { return pairwise_sum(weights); }

double ScalarMeasure::integrate(const std::function<double(double)>& f) const {
  std::vector<double> terms(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) terms[i] = weights[i] * f(nodes[i]);
  return pairwise_sum(terms);
}

double nu_invariance_residual(const MapParams& params, const ScalarMeasure& nu, double a_minus1_sq,
                              const std::function<double(double)>& f) {
  if (std::abs(nu.total_mass() - 1.0) > 1e-8) {
    throw DomainError("measure is not normalized (mass " + std::to_string(nu.total_mass()) + ")");
  }
  double rho2 = 1.0 / (2.0 * a_minus1_sq);
  double lhs = nu.integrate([&](double x) { return scalar_ruelle(params, f, 2, x); });
  double rhs = rho2 * nu.integrate(f);
  return std::abs(lhs - rhs);
}

}  // namespace jhull
