#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "jhull/coeffs.hpp"

namespace jhull {

/// Squared coefficients a_k^2 at integer indices -count <= k < exact_rows, in
/// `bits`-bit floating point.
///
/// Non-negative indices come from the exact table. A negative index -n is
/// the dyadic limit of 2^M - n as M grows. Those values form the fixed point
/// of the level map
///   c_{2i}^2 = c_i^2 / c_{2i+1}^2,   c_{2i+1}^2 = lambda - c_{2i+2}^2,
/// swept from large n down to n = 1, which takes the tail block at level M
/// to level M + 1 and contracts by about 1/5 per sweep. The recursion read
/// in the other direction, from a_{-1} outwards, amplifies errors by roughly
/// ten per index and is not used.
class LimitCoefficients {
 public:
  LimitCoefficients(const CoeffTable& table, int count, int bits);

  int bits() const { return bits_; }
  int count() const { return count_; }
  int sweeps() const { return sweeps_; }
  /// Largest change in the last sweep.
  double last_change() const { return last_change_; }

  const mpf_class& a_sq(std::int64_t k) const;
  mpf_class a(std::int64_t k) const;

 private:
  int count_;
  int bits_;
  int sweeps_ = 0;
  double last_change_ = 0.0;
  std::vector<mpf_class> positive_;
  std::vector<mpf_class> negative_;  ///< negative_[n] = a_{-n}^2, n >= 1
};

struct MpVIdentityResult {
  std::int64_t kappa = 0;
  int half_width = 0;
  int probe_radius = 0;
  int bits = 0;
  /// log10 of the residual; the value itself may sit below double range.
  double log10_residual = 0.0;
};

/// The V-conjugation identity G_{2 kappa}(2i, 2j) = z G_kappa(i, j)|_{T(z)}
/// for an integer kappa, on the probes |i|, |j| <= N/4, with coefficients
/// and resolvents carried in `bits`-bit arithmetic. At this precision the
/// residual resolves the truncation error of the finite windows instead of
/// double rounding.
MpVIdentityResult check_V_identity_mp(const LimitCoefficients& coeffs, std::int64_t kappa, std::complex<double> z,
                                      int half_width);

}  // namespace jhull
