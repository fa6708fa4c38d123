#include "jhull/numeric.hpp"

#include <cmath>

namespace jhull {

double pairwise_sum(std::span<const double> values) {
  if (values.empty()) return 0.0;
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace {

// Eigenvalues of [[a, b], [b, d]] as mean -/+ radius.
void symmetric_eig(const Eigen::Matrix2d& m, double& lo, double& hi) {
  double a = m(0, 0);
  double d = m(1, 1);
  double b = 0.5 * (m(0, 1) + m(1, 0));
  double mean = 0.5 * (a + d);
  double radius = std::hypot(0.5 * (a - d), b);
  lo = mean - radius;
  hi = mean + radius;
}

}  // namespace

double min_eigenvalue(const Eigen::Matrix2d& m) {
  double lo = 0.0;
  double hi = 0.0;
  symmetric_eig(m, lo, hi);
  // For nearly singular PSD matrices mean - radius cancels; det / hi is exact-ish.
  if (hi > 0.0 && lo < 1e-3 * hi) {
    double a = m(0, 0);
    double d = m(1, 1);
    double b = 0.5 * (m(0, 1) + m(1, 0));
    return (a * d - b * b) / hi;
  }
  return lo;
}

double max_eigenvalue(const Eigen::Matrix2d& m) {
  double lo = 0.0;
  double hi = 0.0;
  symmetric_eig(m, lo, hi);
  return hi;
}

}  // namespace jhull
