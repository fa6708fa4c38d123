#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "jhull/dyadic.hpp"
#include "jhull/dynamics.hpp"
#include "jhull/model.hpp"
#include "jhull/tridiagonal.hpp"

namespace jhull {

/// Finite window of J_kappa on the sites first_site..last_site with open
/// boundary. The coupling across the bond (n - 1, n) is a_{kappa + n}; the
/// diagonal is zero.
struct TruncatedJacobi {
  DyadicInt kappa;
  int first_site = 0;
  int last_site = 0;
  /// offdiag[i] couples first_site + i and first_site + i + 1.
  std::vector<double> offdiag;

  std::size_t size() const { return static_cast<std::size_t>(last_site - first_site + 1); }
  bool contains(int site) const { return site >= first_site && site <= last_site; }
  std::size_t index_of(int site) const;
  /// Coupling across the bond (n - 1, n); both sites must lie in the window.
  double coupling(int n) const;
  SymTridiagonal matrix() const;
};

/// Sites -N..N.
TruncatedJacobi build_truncation(const CoeffTable& table, const DyadicInt& kappa, int half_width);
TruncatedJacobi build_window(const CoeffTable& table, const DyadicInt& kappa, int first_site, int last_site);

/// Window of tau J tau, tau e_n = e_{-1-n}, built directly from the
/// coefficients: the bond (n - 1, n) carries a_{kappa - n}. Sites -N..N-1,
/// which tau maps onto itself.
TruncatedJacobi build_reflected(const CoeffTable& table, const DyadicInt& kappa, int half_width);

struct SpectralAtom {
  double x = 0.0;
  Eigen::Matrix2d weight;
};

/// Point-mass approximation of the 2x2 spectral measure at the sites
/// (-1, 0). Matrix index 0 is site -1, index 1 is site 0.
struct SpectralMeasureApprox {
  std::vector<SpectralAtom> atoms;

  Eigen::Matrix2d total() const;
  Eigen::Matrix2d moment(int m) const;
  Eigen::Matrix2d integrate(const std::function<double(double)>& f) const;
  /// int tr(g(x) Sigma(dx)).
  double pair(const std::function<Eigen::Matrix2d(double)>& g) const;
  /// tr Sigma([lo, hi]).
  double trace_mass(double lo, double hi) const;
  Eigen::Matrix2cd stieltjes(std::complex<double> z) const;
  /// max over odd m <= max_degree of |int x^m tr Sigma(dx)|, i.e. the
  /// deviation of the trace measure from evenness on monomials.
  double evenness_residual(int max_degree) const;
  double min_x() const;
  double max_x() const;
};

SpectralMeasureApprox spectral_measure(const TruncatedJacobi& j);

/// Scalar spectral measure of the half-line block on the sites -1, -2, ...
/// (kappa = 0 splits the window there because a_0 = 0).
ScalarMeasure jminus_measure(const CoeffTable& table, int half_width);

struct ResolventSample {
  std::complex<double> z;
  Eigen::Matrix2cd m;

  /// Smallest eigenvalue of (m - m^*) / (2i); >= 0 for Im z > 0.
  double herglotz_margin() const;
};

/// 2x2 block of (J - z)^{-1} at the sites (-1, 0).
ResolventSample resolvent_entry(const TruncatedJacobi& j, std::complex<double> z, double xi, double eta_min = 1e-8);

/// Resolvent of a window with site-indexed access.
class WindowResolvent {
 public:
  WindowResolvent(const TruncatedJacobi& j, std::complex<double> z);
  std::complex<double> entry(int site_i, int site_j) const;
  /// Entries (site_lo..site_hi, site_j).
  std::vector<std::complex<double>> column(int site_j, int site_lo, int site_hi) const;

 private:
  int first_site_;
  TridiagonalResolvent resolvent_;
};

struct VIdentityResult {
  std::complex<double> z;
  int half_width = 0;
  int probe_radius = 0;
  double residual = 0.0;
};

/// max over |i|, |j| <= N/4 of
///   |<e_{2i}, (J_{2 kappa} - z)^{-1} e_{2j}> - (T'(z)/2) <e_i, (J_kappa - T(z))^{-1} e_j>|
/// with J_{2 kappa} on -2N..2N and J_kappa on -N..N.
VIdentityResult check_V_identity(const Model& model, const DyadicInt& kappa, std::complex<double> z, int half_width);

struct RenormRow {
  int m = 0;
  int p = 0;
  int q = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};

struct RenormResult {
  int half_width = 0;
  int degree = 0;
  std::vector<RenormRow> rows;
  double max_residual = 0.0;
};

/// int tr(g Sigma_kappa) against int tr((M_kappa g) Sigma_{s kappa}) for
/// g = x^m E_pq, m <= degree, with the Ruelle operator evaluated by the
/// two-term preimage sum on the atoms of Sigma_{s kappa}.
RenormResult check_renormalization(const Model& model, const DyadicInt& kappa, int degree, int half_width);

struct ReflectionResult {
  int half_width = 0;
  int degree = 0;
  double residual = 0.0;
};

/// Moments (degree <= 8 by default) of the spectral measure of the reflected
/// window against sigma_1 Sigma sigma_1.
ReflectionResult reflection_check(const CoeffTable& table, const DyadicInt& kappa, int half_width, int degree = 8);

/// 10 x the median gap between consecutive eigenvalues of the window.
double eta_floor(const TruncatedJacobi& j);

struct AtomProbeResult {
  double x = 0.0;
  double eta_min = 0.0;
  std::vector<double> etas;
  std::vector<double> values;      ///< eta Im tr m(x + i eta)
  std::vector<bool> reliable;      ///< eta >= eta_min
  bool decreasing = false;         ///< strictly decreasing along the given etas
};

AtomProbeResult atom_probe(const TruncatedJacobi& j, double x, std::span<const double> etas, double eta_min);

struct ImplantedAtomResult {
  double alpha = 0.0;
  double atom_x = 0.0;
  double atom_mass = 0.0;          ///< tr W of the split-off eigenvalue
  std::vector<double> etas;
  std::vector<double> values;
  double worst_relative_deviation = 0.0;
};

/// Self-test of the probe: J + alpha e_0 e_0^* has an eigenvalue outside
/// [-xi, xi] with a computable mass, and the probe must plateau there.
ImplantedAtomResult implanted_atom_probe(const TruncatedJacobi& j, double alpha, std::span<const double> etas);

struct JminusRenormResult {
  int depth = 0;
  int n_max = 0;
  int grid_points = 0;
  double a_minus1 = 0.0;
  double residual = 0.0;           ///< absolute
  double relative_residual = 0.0;  ///< scaled by max(1, |p_{2n+1}(x)|)
};

/// Orthonormal polynomials of the half-line block on -1, -2, ... with
/// coefficients a_{-k} read at dyadic depth `depth`, checked against
/// p_{2n+1}(x) = (x / a_{-1}) p_n(T(x)) on a grid in [-xi, xi], n <= n_max.
JminusRenormResult jminus_renorm_check(const Model& model, int depth, int n_max, int grid_points);

}  // namespace jhull
