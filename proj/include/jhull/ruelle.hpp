#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "jhull/dyadic.hpp"
#include "jhull/model.hpp"

namespace jhull {

enum class Parity { even, odd };

/// Matrix weight p_kappa of the renormalization Ruelle operator:
///   even kappa: [[a_{k-1}, 0], [a_k, 1]] diag(2/T'(x), 1)
///   odd kappa:  [[1, a_k], [0, a_{k+1}]] diag(1, 2/T'(x))
/// with 2/T'(x) = 1/x. Phi = (x p(x))|_{x=0} = psi upsilon^T.
struct RuelleWeight {
  Parity parity = Parity::even;
  double a_minus = 0.0;   ///< a_{kappa-1}
  double a_center = 0.0;  ///< a_kappa
  double a_plus = 0.0;    ///< a_{kappa+1}
  double lambda = 0.0;
  Eigen::Vector2d psi = Eigen::Vector2d::Zero();
  Eigen::Vector2d upsilon = Eigen::Vector2d::Zero();

  Eigen::Matrix2d phi() const { return psi * upsilon.transpose(); }
  /// p(x) given u = 1/x; u = 0 is the limit x -> infinity.
  Eigen::Matrix2d at_inverse(double u) const;
  /// Throws DomainError at x = 0.
  Eigen::Matrix2d at(double x) const;
};

RuelleWeight weight(const Model& model, const DyadicInt& kappa);

/// h(x) = sum_k w_x^k(T(0)) A_k with 2x2 symmetric coefficients; the poles
/// sit on the critical orbit.
class MatrixPoleFunction {
 public:
  MatrixPoleFunction(std::shared_ptr<const CriticalOrbit> orbit, std::vector<Eigen::Matrix2d> coeffs);

  /// h_0(x) = w_x^0(T(0)) I = I / (x + lambda).
  static MatrixPoleFunction h_zero(std::shared_ptr<const CriticalOrbit> orbit);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Eigen::Matrix2d>& coeffs() const { return coeffs_; }
  const CriticalOrbit& orbit() const { return *orbit_; }
  const std::shared_ptr<const CriticalOrbit>& orbit_ptr() const { return orbit_; }

  Eigen::Matrix2d operator()(double x) const;
  /// sum_k tr A_k
  double coefficient_mass() const;
  double min_coefficient_eigenvalue() const;

 private:
  std::shared_ptr<const CriticalOrbit> orbit_;
  std::vector<Eigen::Matrix2d> coeffs_;
};

/// Exact action on the pole basis:
///   A'_0 = Phi (sum_k w_0^k A_k) Phi^T,  A'_{k+1} = p(t_{k+1}) A_k p(t_{k+1})^T
/// where t_k is the k-th point of the critical orbit.
MatrixPoleFunction apply_closed_form(const RuelleWeight& w, const MatrixPoleFunction& h);

/// (M g)(x) = 1/2 sum over T(y) = x of p(y) g(y) p(y)^T.
Eigen::Matrix2d apply_bruteforce(const RuelleWeight& w, const std::function<Eigen::Matrix2d(double)>& g, double x);

/// h_0, ..., h_n with h_m = M_{s^{m-1} kappa} h_{m-1}. Needs precision >= n + 2.
std::vector<MatrixPoleFunction> iterate_h(const Model& model, const DyadicInt& kappa, int n);

/// P^n_kappa(z) = p_{s^{n-1} kappa}(T^{n-1} z) ... p_kappa(z), real z.
Eigen::Matrix2d frakP(const Model& model, const DyadicInt& kappa, int n, double z);
/// The same product at z = T(0), using the reciprocals of the critical
/// orbit so that escaping orbit points never overflow.
Eigen::Matrix2d frakP_critical(const Model& model, const DyadicInt& kappa, int n);

/// f_0^1, ..., f_0^n from the scalar recurrence built on P-products only.
struct FSequence {
  DyadicInt kappa;
  std::vector<double> values;  ///< values[m - 1] = f_0^m

  double at(int m) const { return values.at(static_cast<std::size_t>(m - 1)); }
};

FSequence f0_recurrence(const Model& model, const DyadicInt& kappa, int n);

/// Requires precision >= needed; throws PrecisionError otherwise.
void require_precision(const DyadicInt& kappa, int needed, const char* what);

}  // namespace jhull
