#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace jhull {

/// Real symmetric tridiagonal matrix. off[i] couples rows i and i + 1.
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const { return diag.size(); }
  /// Max absolute row sum.
  double norm_inf() const;
  Eigen::MatrixXd dense() const;
};

/// Eigenvalues (ascending) and the entries of the eigenvectors on a few
/// selected rows: rows(r, j) is component `selected[r]` of eigenvector j.
struct SelectedEigen {
  std::vector<double> values;
  Eigen::MatrixXd rows;
};

/// Implicit QL with Wilkinson shifts. Rotations are applied only to the
/// selected rows of the eigenvector matrix, so the cost is O(n^2) and the
/// storage O(n * selected.size()). This is the Golub-Welsch trick
/// generalised to several rows.
SelectedEigen eigen_selected_rows(const SymTridiagonal& t, std::span<const int> selected);

std::vector<double> eigenvalues(const SymTridiagonal& t);

/// Entries of (T - z)^{-1} from the two pivot sequences of the tridiagonal
/// LU factorisations (top-down and bottom-up). Stable whenever every leading
/// and trailing principal submatrix of T - z is invertible, which holds for
/// Im z != 0 and for real z outside the numerical range of T.
class TridiagonalResolvent {
 public:
  TridiagonalResolvent(const SymTridiagonal& t, std::complex<double> z);

  std::complex<double> z() const { return z_; }
  std::size_t size() const { return top_.size(); }

  std::complex<double> diagonal(std::size_t k) const;
  std::complex<double> entry(std::size_t i, std::size_t j) const;
  /// Entries (lo..hi, j) of column j.
  std::vector<std::complex<double>> column(std::size_t j, std::size_t lo, std::size_t hi) const;

 private:
  std::vector<double> off_;
  std::vector<std::complex<double>> shifted_diag_;
  std::vector<std::complex<double>> top_;
  std::vector<std::complex<double>> bottom_;
  std::complex<double> z_;
};

}  // namespace jhull
