#include "jhull/hull.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "jhull/error.hpp"
#include "jhull/numeric.hpp"
#include "jhull/ruelle.hpp"

namespace jhull {

std::size_t TruncatedJacobi::index_of(int site) const {
  if (!contains(site)) {
    throw DomainError("site " + std::to_string(site) + " outside window [" + std::to_string(first_site) + ", " +
                      std::to_string(last_site) + "]");
  }
  return static_cast<std::size_t>(site - first_site);
}

double TruncatedJacobi::coupling(int n) const {
  if (!contains(n - 1) || !contains(n)) throw DomainError("bond outside window");
  return offdiag[index_of(n - 1)];
}

SymTridiagonal TruncatedJacobi::matrix() const {
  SymTridiagonal t;
  t.diag.assign(size(), 0.0);
  t.off = offdiag;
  return t;
}

namespace {

void check_window(const CoeffTable& table, const DyadicInt& kappa, int first_site, int last_site) {
  if (first_site > last_site) throw DomainError("empty truncation window");
  const int m = std::min(kappa.precision(), table.float_depth());
  const std::int64_t span = static_cast<std::int64_t>(last_site) - first_site + 2;
  if (m < 63 && span > (std::int64_t{1} << m)) {
    throw PrecisionError("window of " + std::to_string(span - 1) + " sites exceeds the " + std::to_string(m) +
                         " resolved dyadic digits");
  }
}

template <class Coupling>
TruncatedJacobi make_window(const DyadicInt& kappa, int first_site, int last_site, Coupling coupling) {
  TruncatedJacobi j;
  j.kappa = kappa;
  j.first_site = first_site;
  j.last_site = last_site;
  j.offdiag.resize(static_cast<std::size_t>(last_site - first_site));
  for (std::size_t i = 0; i < j.offdiag.size(); ++i) j.offdiag[i] = coupling(first_site + static_cast<int>(i) + 1);
  return j;
}

double trace_at(const SpectralAtom& a) { return a.weight.trace(); }

}  // namespace

TruncatedJacobi build_window(const CoeffTable& table, const DyadicInt& kappa, int first_site, int last_site) {
  check_window(table, kappa, first_site, last_site);
  return make_window(kappa, first_site, last_site, [&](int n) { return table.a_shifted(kappa, n); });
}

TruncatedJacobi build_truncation(const CoeffTable& table, const DyadicInt& kappa, int half_width) {
  if (half_width < 1) throw DomainError("truncation half-width must be >= 1");
  return build_window(table, kappa, -half_width, half_width);
}

TruncatedJacobi build_reflected(const CoeffTable& table, const DyadicInt& kappa, int half_width) {
  if (half_width < 1) throw DomainError("truncation half-width must be >= 1");
  check_window(table, kappa, -half_width, half_width - 1);
  return make_window(kappa, -half_width, half_width - 1, [&](int n) { return table.a_shifted(kappa, -n); });
}

Eigen::Matrix2d SpectralMeasureApprox::total() const { return moment(0); }

Eigen::Matrix2d SpectralMeasureApprox::moment(int m) const {
  return integrate([m](double x) { return std::pow(x, m); });
}

Eigen::Matrix2d SpectralMeasureApprox::integrate(const std::function<double(double)>& f) const {
  std::array<std::vector<double>, 3> terms;
  for (auto& t : terms) t.resize(atoms.size());
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    double fx = f(atoms[j].x);
    terms[0][j] = fx * atoms[j].weight(0, 0);
    terms[1][j] = fx * atoms[j].weight(0, 1);
    terms[2][j] = fx * atoms[j].weight(1, 1);
  }
  Eigen::Matrix2d out;
  out(0, 0) = pairwise_sum(terms[0]);
  out(0, 1) = out(1, 0) = pairwise_sum(terms[1]);
  out(1, 1) = pairwise_sum(terms[2]);
  return out;
}

double SpectralMeasureApprox::pair(const std::function<Eigen::Matrix2d(double)>& g) const {
  std::vector<double> terms(atoms.size());
  for (std::size_t j = 0; j < atoms.size(); ++j) terms[j] = (g(atoms[j].x) * atoms[j].weight).trace();
  return pairwise_sum(terms);
}

double SpectralMeasureApprox::trace_mass(double lo, double hi) const {
  std::vector<double> terms;
  for (const auto& a : atoms) {
    if (a.x >= lo && a.x <= hi) terms.push_back(trace_at(a));
  }
  return pairwise_sum(terms);
}

Eigen::Matrix2cd SpectralMeasureApprox::stieltjes(std::complex<double> z) const {
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  for (const auto& a : atoms) out += a.weight.cast<std::complex<double>>() / (a.x - z);
  return out;
}

double SpectralMeasureApprox::evenness_residual(int max_degree) const {
  double worst = 0.0;
  for (int m = 1; m <= max_degree; m += 2) worst = std::max(worst, std::abs(moment(m).trace()));
  return worst;
}

double SpectralMeasureApprox::min_x() const {
  double v = atoms.front().x;
  for (const auto& a : atoms) v = std::min(v, a.x);
  return v;
}

double SpectralMeasureApprox::max_x() const {
  double v = atoms.front().x;
  for (const auto& a : atoms) v = std::max(v, a.x);
  return v;
}

SpectralMeasureApprox spectral_measure(const TruncatedJacobi& j) {
  const std::array<int, 2> rows{static_cast<int>(j.index_of(-1)), static_cast<int>(j.index_of(0))};
  SelectedEigen eig = eigen_selected_rows(j.matrix(), rows);
  SpectralMeasureApprox out;
  out.atoms.resize(eig.values.size());
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    const auto c = static_cast<Eigen::Index>(k);
    Eigen::Vector2d v(eig.rows(0, c), eig.rows(1, c));
    out.atoms[k].x = eig.values[k];
    out.atoms[k].weight = v * v.transpose();
  }
  return out;
}

ScalarMeasure jminus_measure(const CoeffTable& table, int half_width) {
  if (half_width < 2) throw DomainError("half-line block needs at least two sites");
  const DyadicInt zero = DyadicInt::from_integer(0);
  check_window(table, zero, -half_width, -1);
  SymTridiagonal t;
  t.diag.assign(static_cast<std::size_t>(half_width), 0.0);
  t.off.resize(static_cast<std::size_t>(half_width) - 1);
  for (std::size_t k = 0; k < t.off.size(); ++k) t.off[k] = table.a_shifted(zero, -1 - static_cast<int>(k));
  const std::array<int, 1> rows{0};
  SelectedEigen eig = eigen_selected_rows(t, rows);
  ScalarMeasure nu;
  nu.nodes = eig.values;
  nu.weights.resize(eig.values.size());
  for (std::size_t k = 0; k < nu.weights.size(); ++k) {
    double c = eig.rows(0, static_cast<Eigen::Index>(k));
    nu.weights[k] = c * c;
  }
  return nu;
}

double ResolventSample::herglotz_margin() const {
  const std::complex<double> two_i(0.0, 2.0);
  Eigen::Matrix2cd im = (m - m.adjoint()) / two_i;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(im, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

WindowResolvent::WindowResolvent(const TruncatedJacobi& j, std::complex<double> z)
    : first_site_(j.first_site), resolvent_(j.matrix(), z) {}

std::complex<double> WindowResolvent::entry(int site_i, int site_j) const {
  return resolvent_.entry(static_cast<std::size_t>(site_i - first_site_), static_cast<std::size_t>(site_j - first_site_));
}

std::vector<std::complex<double>> WindowResolvent::column(int site_j, int site_lo, int site_hi) const {
  return resolvent_.column(static_cast<std::size_t>(site_j - first_site_),
                           static_cast<std::size_t>(site_lo - first_site_),
                           static_cast<std::size_t>(site_hi - first_site_));
}

ResolventSample resolvent_entry(const TruncatedJacobi& j, std::complex<double> z, double xi, double eta_min) {
  const bool off_axis = std::abs(z.imag()) >= eta_min;
  const bool real_outside = z.imag() == 0.0 && std::abs(z.real()) > xi;
  if (!off_axis && !real_outside) {
    throw DomainError("resolvent point too close to [-xi, xi] (Im z = " + std::to_string(z.imag()) + ")");
  }
  j.index_of(-1);
  j.index_of(0);
  WindowResolvent r(j, z);
  ResolventSample s;
  s.z = z;
  s.m(0, 0) = r.entry(-1, -1);
  s.m(0, 1) = s.m(1, 0) = r.entry(-1, 0);
  s.m(1, 1) = r.entry(0, 0);
  return s;
}

VIdentityResult check_V_identity(const Model& model, const DyadicInt& kappa, std::complex<double> z, int half_width) {
  if (half_width < 4) throw DomainError("V identity needs half-width >= 4");
  if (z.imag() == 0.0 && std::abs(z.real()) <= model.xi()) throw DomainError("V identity needs z off [-xi, xi]");
  const CoeffTable& table = *model.table;
  TruncatedJacobi wide = build_truncation(table, kappa.doubled(), 2 * half_width);
  TruncatedJacobi narrow = build_truncation(table, kappa, half_width);
  const std::complex<double> tz = z * z - model.lambda();
  WindowResolvent r_wide(wide, z);
  WindowResolvent r_narrow(narrow, tz);

  VIdentityResult out;
  out.z = z;
  out.half_width = half_width;
  out.probe_radius = half_width / 4;
  const int r = out.probe_radius;
  const std::complex<double> half_tprime = z;
  for (int jj = -r; jj <= r; ++jj) {
    auto col_narrow = r_narrow.column(jj, -r, r);
    auto col_wide = r_wide.column(2 * jj, -2 * r, 2 * r);
    for (int ii = -r; ii <= r; ++ii) {
      std::complex<double> lhs = col_wide[static_cast<std::size_t>(2 * (ii + r))];
      std::complex<double> rhs = half_tprime * col_narrow[static_cast<std::size_t>(ii + r)];
      out.residual = std::max(out.residual, std::abs(lhs - rhs));
    }
  }
  return out;
}

RenormResult check_renormalization(const Model& model, const DyadicInt& kappa, int degree, int half_width) {
  if (degree < 0) throw DomainError("degree must be >= 0");
  const CoeffTable& table = *model.table;
  SpectralMeasureApprox sigma = spectral_measure(build_truncation(table, kappa, half_width));
  SpectralMeasureApprox sigma_s = spectral_measure(build_truncation(table, modified_shift(kappa), half_width));
  const RuelleWeight w = weight(model, kappa);

  RenormResult out;
  out.half_width = half_width;
  out.degree = degree;
  for (int m = 0; m <= degree; ++m) {
    for (int p = 0; p < 2; ++p) {
      for (int q = 0; q < 2; ++q) {
        auto g = [m, p, q](double x) {
          Eigen::Matrix2d e = Eigen::Matrix2d::Zero();
          e(p, q) = std::pow(x, m);
          return e;
        };
        RenormRow row;
        row.m = m;
        row.p = p;
        row.q = q;
        row.lhs = sigma.pair(g);
        row.rhs = sigma_s.pair([&](double x) { return apply_bruteforce(w, g, x); });
        row.residual = std::abs(row.lhs - row.rhs);
        out.max_residual = std::max(out.max_residual, row.residual);
        out.rows.push_back(row);
      }
    }
  }
  return out;
}

ReflectionResult reflection_check(const CoeffTable& table, const DyadicInt& kappa, int half_width, int degree) {
  SpectralMeasureApprox sigma = spectral_measure(build_window(table, kappa, -half_width, half_width - 1));
  SpectralMeasureApprox sharp = spectral_measure(build_reflected(table, kappa, half_width));
  Eigen::Matrix2d s1;
  s1 << 0.0, 1.0, 1.0, 0.0;
  ReflectionResult out;
  out.half_width = half_width;
  out.degree = degree;
  for (int m = 0; m <= degree; ++m) {
    Eigen::Matrix2d diff = sharp.moment(m) - s1 * sigma.moment(m) * s1;
    out.residual = std::max(out.residual, diff.cwiseAbs().maxCoeff());
  }
  return out;
}

double eta_floor(const TruncatedJacobi& j) {
  std::vector<double> ev = eigenvalues(j.matrix());
  if (ev.size() < 2) throw DomainError("level spacing needs at least two sites");
  std::vector<double> gaps(ev.size() - 1);
  for (std::size_t k = 0; k + 1 < ev.size(); ++k) gaps[k] = ev[k + 1] - ev[k];
  auto mid = gaps.begin() + static_cast<std::ptrdiff_t>(gaps.size() / 2);
  std::nth_element(gaps.begin(), mid, gaps.end());
  return 10.0 * *mid;
}

namespace {

double probe_value(const TridiagonalResolvent& r, std::size_t a, std::size_t b, double eta) {
  return eta * (r.diagonal(a).imag() + r.diagonal(b).imag());
}

}  // namespace

AtomProbeResult atom_probe(const TruncatedJacobi& j, double x, std::span<const double> etas, double eta_min) {
  AtomProbeResult out;
  out.x = x;
  out.eta_min = eta_min;
  const SymTridiagonal t = j.matrix();
  const std::size_t a = j.index_of(-1);
  const std::size_t b = j.index_of(0);
  for (double eta : etas) {
    if (!(eta > 0.0)) throw DomainError("probe widths must be positive");
    TridiagonalResolvent r(t, {x, eta});
    out.etas.push_back(eta);
    out.values.push_back(probe_value(r, a, b, eta));
    out.reliable.push_back(eta >= eta_min);
  }
  out.decreasing = true;
  for (std::size_t k = 1; k < out.values.size(); ++k) {
    if (!(out.values[k] < out.values[k - 1])) out.decreasing = false;
  }
  return out;
}

ImplantedAtomResult implanted_atom_probe(const TruncatedJacobi& j, double alpha, std::span<const double> etas) {
  if (!(alpha > 0.0)) throw DomainError("implanted potential must be positive");
  SymTridiagonal t = j.matrix();
  const std::size_t a = j.index_of(-1);
  const std::size_t b = j.index_of(0);
  t.diag[b] += alpha;
  const std::array<int, 2> rows{static_cast<int>(a), static_cast<int>(b)};
  SelectedEigen eig = eigen_selected_rows(t, rows);
  const auto top = static_cast<Eigen::Index>(eig.values.size() - 1);

  ImplantedAtomResult out;
  out.alpha = alpha;
  out.atom_x = eig.values.back();
  out.atom_mass = eig.rows(0, top) * eig.rows(0, top) + eig.rows(1, top) * eig.rows(1, top);
  for (double eta : etas) {
    TridiagonalResolvent r(t, {out.atom_x, eta});
    double v = probe_value(r, a, b, eta);
    out.etas.push_back(eta);
    out.values.push_back(v);
    out.worst_relative_deviation = std::max(out.worst_relative_deviation, std::abs(v / out.atom_mass - 1.0));
  }
  return out;
}

JminusRenormResult jminus_renorm_check(const Model& model, int depth, int n_max, int grid_points) {
  const CoeffTable& table = *model.table;
  if (depth < 1 || depth > table.float_depth()) throw PrecisionError("dyadic depth outside the float table");
  if (n_max < 0 || grid_points < 2) throw DomainError("bad half-line renormalization parameters");
  const int top = 2 * n_max + 1;
  const std::uint64_t period = std::uint64_t{1} << depth;
  if (static_cast<std::uint64_t>(top) + 1 >= period) throw PrecisionError("depth too small for the polynomial degree");
  // c[k] = a_{-k}, read at the representative 2^depth - k.
  std::vector<double> c(static_cast<std::size_t>(top) + 1, 0.0);
  for (int k = 1; k <= top; ++k) c[static_cast<std::size_t>(k)] = table.a_float(period - static_cast<std::uint64_t>(k));

  auto polys = [&](double x) {
    std::vector<double> p(static_cast<std::size_t>(top) + 1);
    p[0] = 1.0;
    p[1] = x / c[1];
    for (int k = 1; k < top; ++k) {
      auto ku = static_cast<std::size_t>(k);
      p[ku + 1] = (x * p[ku] - c[ku] * p[ku - 1]) / c[ku + 1];
    }
    return p;
  };

  JminusRenormResult out;
  out.depth = depth;
  out.n_max = n_max;
  out.grid_points = grid_points;
  out.a_minus1 = c[1];
  const double xi = model.xi();
  for (int g = 0; g < grid_points; ++g) {
    double x = -xi + 2.0 * xi * g / (grid_points - 1);
    auto px = polys(x);
    auto ptx = polys(model.params.T(x));
    for (int n = 0; n <= n_max; ++n) {
      double lhs = px[static_cast<std::size_t>(2 * n + 1)];
      double rhs = x / c[1] * ptx[static_cast<std::size_t>(n)];
      double diff = std::abs(lhs - rhs);
      out.residual = std::max(out.residual, diff);
      out.relative_residual = std::max(out.relative_residual, diff / std::max(1.0, std::abs(lhs)));
    }
  }
  return out;
}

}  // namespace jhull
