#include "jhull/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "jhull/error.hpp"

namespace jhull {

double SymTridiagonal::norm_inf() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    double s = std::abs(diag[i]);
    if (i > 0) s += std::abs(off[i - 1]);
    if (i < off.size()) s += std::abs(off[i]);
    worst = std::max(worst, s);
  }
  return worst;
}

Eigen::MatrixXd SymTridiagonal::dense() const {
  const auto n = static_cast<Eigen::Index>(diag.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = diag[static_cast<std::size_t>(i)];
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    m(i, i + 1) = off[static_cast<std::size_t>(i)];
    m(i + 1, i) = off[static_cast<std::size_t>(i)];
  }
  return m;
}

namespace {

void check_shape(const SymTridiagonal& t) {
  if (t.diag.empty()) throw DomainError("empty tridiagonal matrix");
  if (t.off.size() + 1 != t.diag.size()) throw DomainError("tridiagonal off-diagonal has wrong length");
}

// d: diagonal (overwritten by eigenvalues), e: e[i] couples i and i+1 with
// e[n-1] = 0 on entry (destroyed). z: selected rows of the eigenvector matrix.
void implicit_ql(std::vector<double>& d, std::vector<double>& e, Eigen::MatrixXd* z, double anorm) {
  const int n = static_cast<int>(d.size());
  const double eps = std::numeric_limits<double>::epsilon();
  const Eigen::Index nrows = z ? z->rows() : 0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * std::max(dd, 1e-3 * anorm)) break;
      }
      if (m != l) {
        if (++iter > 60) throw NumericalError("tridiagonal QL did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i = m - 1;
        bool underflow = false;
        for (; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z) {
            double* zi = z->col(i).data();
            double* zi1 = z->col(i + 1).data();
            for (Eigen::Index k = 0; k < nrows; ++k) {
              double t = zi1[k];
              zi1[k] = s * zi[k] + c * t;
              zi[k] = c * zi[k] - s * t;
            }
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

SelectedEigen eigen_selected_rows(const SymTridiagonal& t, std::span<const int> selected) {
  check_shape(t);
  const auto n = static_cast<Eigen::Index>(t.size());
  std::vector<double> d = t.diag;
  std::vector<double> e = t.off;
  e.push_back(0.0);

  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(selected.size()), n);
  for (std::size_t r = 0; r < selected.size(); ++r) {
    if (selected[r] < 0 || selected[r] >= n) throw DomainError("selected row outside matrix");
    z(static_cast<Eigen::Index>(r), selected[r]) = 1.0;
  }
  implicit_ql(d, e, &z, t.norm_inf());

  std::vector<std::size_t> order(d.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  SelectedEigen out;
  out.values.resize(d.size());
  out.rows.resize(z.rows(), n);
  for (std::size_t j = 0; j < order.size(); ++j) {
    out.values[j] = d[order[j]];
    out.rows.col(static_cast<Eigen::Index>(j)) = z.col(static_cast<Eigen::Index>(order[j]));
  }
  return out;
}

std::vector<double> eigenvalues(const SymTridiagonal& t) {
  check_shape(t);
  std::vector<double> d = t.diag;
  std::vector<double> e = t.off;
  e.push_back(0.0);
  implicit_ql(d, e, nullptr, t.norm_inf());
  std::sort(d.begin(), d.end());
  return d;
}

TridiagonalResolvent::TridiagonalResolvent(const SymTridiagonal& t, std::complex<double> z)
    : off_(t.off), z_(z) {
  check_shape(t);
  const std::size_t n = t.size();
  shifted_diag_.resize(n);
  for (std::size_t k = 0; k < n; ++k) shifted_diag_[k] = t.diag[k] - z;

  top_.resize(n);
  top_[0] = shifted_diag_[0];
  for (std::size_t k = 1; k < n; ++k) top_[k] = shifted_diag_[k] - off_[k - 1] * off_[k - 1] / top_[k - 1];

  bottom_.resize(n);
  bottom_[n - 1] = shifted_diag_[n - 1];
  for (std::size_t k = n - 1; k-- > 0;) bottom_[k] = shifted_diag_[k] - off_[k] * off_[k] / bottom_[k + 1];

  for (std::size_t k = 0; k < n; ++k) {
    if (top_[k] == 0.0 || bottom_[k] == 0.0) throw NumericalError("singular pivot in tridiagonal resolvent");
  }
}

std::complex<double> TridiagonalResolvent::diagonal(std::size_t k) const {
  return 1.0 / (top_[k] + bottom_[k] - shifted_diag_[k]);
}

std::complex<double> TridiagonalResolvent::entry(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  auto col = column(j, i, i);
  return col[0];
}

std::vector<std::complex<double>> TridiagonalResolvent::column(std::size_t j, std::size_t lo, std::size_t hi) const {
  const std::size_t n = size();
  if (j >= n || lo > hi || hi >= n) throw DomainError("resolvent column range outside matrix");
  std::vector<std::complex<double>> out(hi - lo + 1);
  const std::complex<double> gjj = diagonal(j);
  // Above the diagonal: G(k, j) = -off[k] / top[k] * G(k + 1, j).
  std::complex<double> g = gjj;
  for (std::size_t k = j; k-- > lo;) {
    g *= -off_[k] / top_[k];
    if (k <= hi) out[k - lo] = g;
  }
  // Below the diagonal: G(k, j) = -off[k - 1] / bottom[k] * G(k - 1, j).
  g = gjj;
  for (std::size_t k = j + 1; k <= hi; ++k) {
    g *= -off_[k - 1] / bottom_[k];
    if (k >= lo) out[k - lo] = g;
  }
  if (j >= lo && j <= hi) out[j - lo] = gjj;
  return out;
}

}  // namespace jhull
