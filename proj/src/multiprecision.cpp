#include "jhull/multiprecision.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "jhull/error.hpp"

namespace jhull {

namespace {

double log10_of(const mpf_class& x) {
  if (sgn(x) == 0) return -std::numeric_limits<double>::infinity();
  long e = 0;
  const double d = mpf_get_d_2exp(&e, x.get_mpf_t());
  return std::log10(std::abs(d)) + static_cast<double>(e) * std::log10(2.0);
}

/// Complex number in fixed-precision mpf; every result is written into a
/// variable of the working precision so gmpxx temporaries inherit it.
struct Cmpf {
  mpf_class re;
  mpf_class im;
  explicit Cmpf(int bits) : re(0, bits), im(0, bits) {}
  Cmpf(std::complex<double> z, int bits) : re(z.real(), bits), im(z.imag(), bits) {}
};

void cmul(Cmpf& out, const Cmpf& a, const Cmpf& b, int bits) {
  mpf_class re(0, bits), im(0, bits);
  re = a.re * b.re - a.im * b.im;
  im = a.re * b.im + a.im * b.re;
  out.re = re;
  out.im = im;
}

void cdiv(Cmpf& out, const Cmpf& a, const Cmpf& b, int bits) {
  mpf_class den(0, bits), re(0, bits), im(0, bits);
  den = b.re * b.re + b.im * b.im;
  re = (a.re * b.re + a.im * b.im) / den;
  im = (a.im * b.re - a.re * b.im) / den;
  out.re = re;
  out.im = im;
}

/// Resolvent entries of a zero-diagonal Jacobi window at the sites
/// first..first + n - 1; off[i] couples positions i and i + 1.
class MpResolvent {
 public:
  MpResolvent(const std::vector<mpf_class>& off, const Cmpf& z, int bits) : off_(off), bits_(bits), z_(z) {
    const std::size_t n = off.size() + 1;
    left_.assign(n, Cmpf(bits));
    right_.assign(n, Cmpf(bits));
    Cmpf minus_z(bits);
    minus_z.re = -z_.re;
    minus_z.im = -z_.im;
    Cmpf q(bits), num(bits);
    left_[0] = minus_z;
    for (std::size_t i = 1; i < n; ++i) {
      num.re = off[i - 1] * off[i - 1];
      num.im = 0;
      cdiv(q, num, left_[i - 1], bits);
      left_[i].re = minus_z.re - q.re;
      left_[i].im = minus_z.im - q.im;
    }
    right_[n - 1] = minus_z;
    for (std::size_t i = n - 1; i-- > 0;) {
      num.re = off[i] * off[i];
      num.im = 0;
      cdiv(q, num, right_[i + 1], bits);
      right_[i].re = minus_z.re - q.re;
      right_[i].im = minus_z.im - q.im;
    }
  }

  /// Entries (lo..hi, j) by position.
  std::vector<Cmpf> column(std::size_t j, std::size_t lo, std::size_t hi) const {
    std::vector<Cmpf> out(hi - lo + 1, Cmpf(bits_));
    Cmpf d(bits_), one(bits_), v(bits_), t(bits_);
    d.re = left_[j].re + right_[j].re + z_.re;
    d.im = left_[j].im + right_[j].im + z_.im;
    one.re = 1;
    cdiv(v, one, d, bits_);
    out[j - lo] = v;
    Cmpf g = v;
    for (std::size_t i = j; i-- > lo;) {
      t.re = -off_[i] * g.re;
      t.im = -off_[i] * g.im;
      cdiv(g, t, left_[i], bits_);
      out[i - lo] = g;
    }
    g = v;
    for (std::size_t i = j + 1; i <= hi; ++i) {
      t.re = -off_[i - 1] * g.re;
      t.im = -off_[i - 1] * g.im;
      cdiv(g, t, right_[i], bits_);
      out[i - lo] = g;
    }
    return out;
  }

 private:
  const std::vector<mpf_class>& off_;
  int bits_;
  Cmpf z_;
  std::vector<Cmpf> left_;
  std::vector<Cmpf> right_;
};

}  // namespace

LimitCoefficients::LimitCoefficients(const CoeffTable& table, int count, int bits)
    : count_(count), bits_(bits) {
  if (count < 1) throw DomainError("limit coefficients need count >= 1");
  if (bits < 64) throw DomainError("limit coefficients need at least 64 bits");
  const std::uint64_t float_rows = table.float_rows();
  const int margin = bits / 2 + 64;
  const std::size_t k_max = static_cast<std::size_t>(count + margin);
  if (k_max + 2 >= float_rows) throw PrecisionError("float table too shallow for the requested negative block");

  positive_.reserve(table.exact_rows());
  for (std::size_t n = 0; n < table.exact_rows(); ++n) positive_.emplace_back(table.a_sq(n), bits);

  // c[j] ~ a_{-j}^2, seeded with the double table at 2^depth - j. c[k_max + 1]
  // stays at its seed; its error dies out within the margin.
  std::vector<mpf_class> c;
  c.reserve(k_max + 2);
  for (std::size_t j = 0; j <= k_max + 1; ++j) c.emplace_back(j == 0 ? 0.0 : table.a_sq_float(float_rows - j), bits);

  const mpf_class lambda(table.lambda_exact(), bits);
  mpf_class threshold(1, bits);
  mpf_div_2exp(threshold.get_mpf_t(), threshold.get_mpf_t(), static_cast<mp_bitcnt_t>(bits - 16));
  mpf_class next(0, bits), diff(0, bits), worst(0, bits);
  const int max_sweeps = 2 * bits;
  for (sweeps_ = 1; sweeps_ <= max_sweeps; ++sweeps_) {
    worst = 0;
    for (std::size_t j = k_max; j >= 1; --j) {
      // Going downwards, c[j + 1] is already this level's value and c[j / 2]
      // still the previous level's.
      if (j % 2 == 1) {
        next = lambda - c[j + 1];
      } else {
        next = c[j / 2] / c[j + 1];
      }
      diff = abs(next - c[j]);
      if (diff > worst) worst = diff;
      c[j] = next;
    }
    if (worst < threshold) break;
  }
  if (sweeps_ > max_sweeps) throw NumericalError("negative-index coefficients did not converge");
  last_change_ = worst.get_d();

  negative_.assign(c.begin(), c.begin() + count + 1);
  for (std::size_t j = 1; j < negative_.size(); ++j) {
    if (negative_[j] <= 0) throw NumericalError("negative-index coefficient lost positivity");
  }
}

const mpf_class& LimitCoefficients::a_sq(std::int64_t k) const {
  if (k >= 0) {
    if (static_cast<std::uint64_t>(k) >= positive_.size()) {
      throw PrecisionError("index " + std::to_string(k) + " beyond the exact table");
    }
    return positive_[static_cast<std::size_t>(k)];
  }
  if (-k > count_) throw PrecisionError("index " + std::to_string(k) + " beyond the computed negative block");
  return negative_[static_cast<std::size_t>(-k)];
}

mpf_class LimitCoefficients::a(std::int64_t k) const {
  mpf_class out(0, bits_);
  out = sqrt(a_sq(k));
  return out;
}

MpVIdentityResult check_V_identity_mp(const LimitCoefficients& coeffs, std::int64_t kappa, std::complex<double> z,
                                      int half_width) {
  if (half_width < 4) throw DomainError("V identity needs half-width >= 4");
  const int bits = coeffs.bits();
  const int N = half_width;
  const int r = N / 4;

  // Window of kappa' on sites -h..h; off[i] couples -h + i and -h + i + 1,
  // across the bond with coupling a_{kappa' + (-h + i + 1)}.
  auto offdiag = [&](std::int64_t k, int h) {
    std::vector<mpf_class> off;
    off.reserve(static_cast<std::size_t>(2 * h));
    for (int s = -h + 1; s <= h; ++s) off.push_back(coeffs.a(k + s));
    return off;
  };
  const auto off_wide = offdiag(2 * kappa, 2 * N);
  const auto off_narrow = offdiag(kappa, N);
  const Cmpf zz(z, bits);
  Cmpf tz(bits);
  cmul(tz, zz, zz, bits);
  tz.re -= coeffs.a_sq(1);  // a_1^2 = lambda
  MpResolvent wide(off_wide, zz, bits);
  MpResolvent narrow(off_narrow, tz, bits);

  Cmpf rhs(bits);
  mpf_class dr(0, bits), di(0, bits), mag(0, bits), worst(0, bits);
  for (int jj = -r; jj <= r; ++jj) {
    const auto cn = narrow.column(static_cast<std::size_t>(jj + N), static_cast<std::size_t>(N - r),
                                  static_cast<std::size_t>(N + r));
    const auto cw = wide.column(static_cast<std::size_t>(2 * jj + 2 * N), static_cast<std::size_t>(2 * N - 2 * r),
                                static_cast<std::size_t>(2 * N + 2 * r));
    for (int ii = -r; ii <= r; ++ii) {
      const Cmpf& lhs = cw[static_cast<std::size_t>(2 * (ii + r))];
      cmul(rhs, zz, cn[static_cast<std::size_t>(ii + r)], bits);
      dr = lhs.re - rhs.re;
      di = lhs.im - rhs.im;
      mag = dr * dr + di * di;
      if (mag > worst) worst = mag;
    }
  }
  MpVIdentityResult out;
  out.kappa = kappa;
  out.half_width = N;
  out.probe_radius = r;
  out.bits = bits;
  out.log10_residual = 0.5 * log10_of(worst);
  return out;
}

}  // namespace jhull
