#include "jhull/ruelle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jhull/error.hpp"
#include "jhull/numeric.hpp"

namespace jhull {

void require_precision(const DyadicInt& kappa, int needed, const char* what) {
  if (kappa.precision() < needed) {
    throw PrecisionError(std::string(what) + " needs dyadic precision >= " + std::to_string(needed) + ", have " +
                         std::to_string(kappa.precision()));
  }
}

Eigen::Matrix2d RuelleWeight::at_inverse(double u) const {
  Eigen::Matrix2d p;
  if (parity == Parity::even) {
    p << a_minus * u, 0.0, a_center * u, 1.0;
  } else {
    p << 1.0, a_center * u, 0.0, a_plus * u;
  }
  return p;
}

Eigen::Matrix2d RuelleWeight::at(double x) const {
  if (x == 0.0) throw DomainError("Ruelle weight is singular at the critical point");
  return at_inverse(1.0 / x);
}

RuelleWeight weight(const Model& model, const DyadicInt& kappa) {
  require_precision(kappa, 2, "Ruelle weight");
  const CoeffTable& t = *model.table;
  RuelleWeight w;
  w.lambda = model.lambda();
  w.parity = kappa.is_even() ? Parity::even : Parity::odd;
  w.a_minus = t.a_shifted(kappa, -1);
  w.a_center = t.a_shifted(kappa, 0);
  w.a_plus = t.a_shifted(kappa, 1);
  if (w.parity == Parity::even) {
    w.psi << w.a_minus, w.a_center;
    w.upsilon << 1.0, 0.0;
  } else {
    w.psi << w.a_center, w.a_plus;
    w.upsilon << 0.0, 1.0;
  }
  return w;
}

MatrixPoleFunction::MatrixPoleFunction(std::shared_ptr<const CriticalOrbit> orbit, std::vector<Eigen::Matrix2d> coeffs)
    : orbit_(std::move(orbit)), coeffs_(std::move(coeffs)) {
  if (!orbit_) throw DomainError("pole function needs a critical orbit");
  if (coeffs_.empty()) throw DomainError("pole function needs at least one coefficient");
}

MatrixPoleFunction MatrixPoleFunction::h_zero(std::shared_ptr<const CriticalOrbit> orbit) {
  return MatrixPoleFunction(std::move(orbit), {Eigen::Matrix2d::Identity()});
}

Eigen::Matrix2d MatrixPoleFunction::operator()(double x) const {
  Eigen::Matrix2d out = Eigen::Matrix2d::Zero();
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out += orbit_->w(x, static_cast<int>(k)) * coeffs_[k];
  return out;
}

double MatrixPoleFunction::coefficient_mass() const {
  double s = 0.0;
  for (const auto& a : coeffs_) s += a.trace();
  return s;
}

double MatrixPoleFunction::min_coefficient_eigenvalue() const {
  double worst = min_eigenvalue(coeffs_[0]);
  for (const auto& a : coeffs_) worst = std::min(worst, min_eigenvalue(a));
  return worst;
}

MatrixPoleFunction apply_closed_form(const RuelleWeight& w, const MatrixPoleFunction& h) {
  const CriticalOrbit& orbit = h.orbit();
  const auto& in = h.coeffs();
  std::vector<Eigen::Matrix2d> out(in.size() + 1);

  Eigen::Matrix2d at_zero = Eigen::Matrix2d::Zero();
  for (std::size_t k = 0; k < in.size(); ++k) at_zero += orbit.w_at_zero(static_cast<int>(k)) * in[k];
  const Eigen::Matrix2d phi = w.phi();
  out[0] = phi * at_zero * phi.transpose();

  for (std::size_t k = 0; k < in.size(); ++k) {
    Eigen::Matrix2d p = w.at_inverse(orbit.reciprocal(static_cast<int>(k) + 1));
    out[k + 1] = p * in[k] * p.transpose();
  }
  return MatrixPoleFunction(h.orbit_ptr(), std::move(out));
}

Eigen::Matrix2d apply_bruteforce(const RuelleWeight& w, const std::function<Eigen::Matrix2d(double)>& g, double x) {
  if (x < -w.lambda) throw DomainError("no real preimages below -lambda");
  const double y = std::sqrt(x + w.lambda);
  if (y == 0.0) throw DomainError("singular weight: preimage at the critical point");
  Eigen::Matrix2d pp = w.at(y);
  Eigen::Matrix2d pm = w.at(-y);
  return 0.5 * (pp * g(y) * pp.transpose() + pm * g(-y) * pm.transpose());
}

std::vector<MatrixPoleFunction> iterate_h(const Model& model, const DyadicInt& kappa, int n) {
  if (n < 0) throw DomainError("iteration count must be >= 0");
  require_precision(kappa, n + 2, "h iteration");
  std::vector<MatrixPoleFunction> hs;
  hs.reserve(static_cast<std::size_t>(n) + 1);
  hs.push_back(MatrixPoleFunction::h_zero(model.orbit));
  DyadicInt cur = kappa;
  for (int m = 1; m <= n; ++m) {
    hs.push_back(apply_closed_form(weight(model, cur), hs.back()));
    if (m < n) cur = modified_shift(cur);
  }
  return hs;
}

Eigen::Matrix2d frakP(const Model& model, const DyadicInt& kappa, int n, double z) {
  if (n < 0) throw DomainError("product order must be >= 0");
  require_precision(kappa, n + 2, "P-product");
  const double lambda = model.lambda();
  Eigen::Matrix2d prod = Eigen::Matrix2d::Identity();
  DyadicInt cur = kappa;
  double v = z;
  double u = 0.0;
  bool escaped = false;
  for (int k = 0; k < n; ++k) {
    if (!escaped) {
      if (v == 0.0) throw DomainError("P-product hits the critical point at step " + std::to_string(k));
      u = 1.0 / v;
    }
    prod = weight(model, cur).at_inverse(u) * prod;
    if (k + 1 < n) cur = modified_shift(cur);
    if (!escaped && std::abs(v) < 1e100) {
      v = v * v - lambda;
    } else {
      // Beyond double range the reciprocal obeys u' = u^2 / (1 - lambda u^2).
      escaped = true;
      u = u * u / (1.0 - lambda * u * u);
    }
  }
  return prod;
}

Eigen::Matrix2d frakP_critical(const Model& model, const DyadicInt& kappa, int n) {
  if (n < 0) throw DomainError("product order must be >= 0");
  require_precision(kappa, n + 2, "P-product");
  Eigen::Matrix2d prod = Eigen::Matrix2d::Identity();
  DyadicInt cur = kappa;
  for (int k = 0; k < n; ++k) {
    prod = weight(model, cur).at_inverse(model.orbit->reciprocal(k + 1)) * prod;
    if (k + 1 < n) cur = modified_shift(cur);
  }
  return prod;
}

FSequence f0_recurrence(const Model& model, const DyadicInt& kappa, int n) {
  if (n < 1) throw DomainError("f_0 sequence needs n >= 1");
  require_precision(kappa, n + 2, "f_0 recurrence");
  const CriticalOrbit& orbit = *model.orbit;

  // Weights of s^j kappa for j < n.
  std::vector<RuelleWeight> ws;
  ws.reserve(static_cast<std::size_t>(n));
  DyadicInt cur = kappa;
  for (int j = 0; j < n; ++j) {
    ws.push_back(weight(model, cur));
    if (j + 1 < n) cur = modified_shift(cur);
  }

  // prods[i][k] = P^k_{s^i kappa}(T(0)) for i + k <= n - 1.
  std::vector<std::vector<Eigen::Matrix2d>> prods(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& row = prods[static_cast<std::size_t>(i)];
    row.push_back(Eigen::Matrix2d::Identity());
    for (int k = 0; i + k < n - 1; ++k) {
      const RuelleWeight& w = ws[static_cast<std::size_t>(i + k)];
      row.push_back(w.at_inverse(orbit.reciprocal(k + 1)) * row.back());
    }
  }

  FSequence out;
  out.kappa = kappa;
  out.values.reserve(static_cast<std::size_t>(n));
  // f_0^{m+1} = w_0^m |P^m_kappa^T upsilon_m|^2
  //           + sum_{i=1}^{m} f_0^i w_0^{m-i} <P^{m-i}_{s^i kappa} psi_{i-1}, upsilon_m>^2
  for (int m = 0; m < n; ++m) {
    const Eigen::Vector2d& ups = ws[static_cast<std::size_t>(m)].upsilon;
    const Eigen::Matrix2d& top = prods[0][static_cast<std::size_t>(m)];
    double value = orbit.w_at_zero(m) * (top.transpose() * ups).squaredNorm();
    for (int i = 1; i <= m; ++i) {
      const Eigen::Matrix2d& p = prods[static_cast<std::size_t>(i)][static_cast<std::size_t>(m - i)];
      double c = ups.dot(p * ws[static_cast<std::size_t>(i - 1)].psi);
      value += out.values[static_cast<std::size_t>(i - 1)] * orbit.w_at_zero(m - i) * c * c;
    }
    out.values.push_back(value);
  }
  return out;
}

}  // namespace jhull
