#pragma once

#include <cstddef>
#include <span>

#include <Eigen/Dense>

namespace jhull {

/// Sum with a fixed pairwise tree, so the rounding pattern depends only on
/// the length of the input.
double pairwise_sum(std::span<const double> values);

/// Smallest eigenvalue of a symmetric 2x2 matrix (closed form).
double min_eigenvalue(const Eigen::Matrix2d& m);
double max_eigenvalue(const Eigen::Matrix2d& m);

}  // namespace jhull
