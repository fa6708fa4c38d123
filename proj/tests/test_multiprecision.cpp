#include <doctest.h>

#include <cmath>

#include "jhull/error.hpp"
#include "jhull/hull.hpp"
#include "jhull/multiprecision.hpp"

using namespace jhull;

namespace {

const CoeffTable& table4() {
  static const auto t = CoeffTable::build_shared(mpq_class(4), CoeffTable::Options{});
  return *t;
}

/// Index of the first violation of the parity bounds (odd squares >= 3,
/// even squares <= 1, all squares in (0, 4)) along the outward recursion
/// b_{2m} = sqrt(4 - b_{2m-1}^2), b_{2m-1} = b_{m-1} / b_{2m-2} started from
/// b_1; 0 if none up to `length`.
int first_violation(const mpf_class& b1, int length, int bits) {
  std::vector<mpf_class> b{mpf_class(0, bits), b1};
  for (int n = 2; n <= length; ++n) {
    mpf_class v(0, bits);
    if (n % 2 == 0) {
      v = 4 - b[static_cast<std::size_t>(n - 1)] * b[static_cast<std::size_t>(n - 1)];
      if (v <= 0) return n;
      v = sqrt(v);
    } else {
      v = b[static_cast<std::size_t>((n + 1) / 2 - 1)] / b[static_cast<std::size_t>(n - 1)];
    }
    mpf_class sq(0, bits);
    sq = v * v;
    if ((n % 2 == 1 && sq < 3) || (n % 2 == 0 && sq > 1)) return n;
    b.push_back(v);
  }
  return 0;
}

}  // namespace

TEST_CASE("a_{-1} agrees with bisection on admissibility of the outward recursion") {
  const int bits = 512;
  mpf_class lo(1.76, bits), hi(1.79, bits), mid(0, bits);
  const int low_signature = first_violation(lo, 140, bits) % 2;
  REQUIRE(first_violation(lo, 140, bits) != 0);
  REQUIRE(first_violation(hi, 140, bits) % 2 != low_signature);
  for (int it = 0; it < 300; ++it) {
    mid = (lo + hi) / 2;
    const int v = first_violation(mid, 140, bits);
    if (v == 0) break;
    if (v % 2 == low_signature) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  LimitCoefficients lc(table4(), 64, bits);
  mpf_class diff(0, bits);
  diff = abs(lc.a(-1) - mid);
  CHECK(diff.get_d() < 1e-60);
}

TEST_CASE("negative block obeys the coefficient relations at full precision") {
  const int bits = 384;
  LimitCoefficients lc(table4(), 1000, bits);
  CHECK(lc.last_change() < std::ldexp(1.0, -(bits - 16)));
  mpf_class r(0, bits);
  double worst_sum = 0.0, worst_prod = 0.0;
  for (int m = 1; m <= 500; ++m) {
    r = lc.a_sq(-2 * m) + lc.a_sq(-(2 * m - 1)) - 4;
    worst_sum = std::max(worst_sum, std::abs(r.get_d()));
    if (m >= 2) {
      r = lc.a_sq(-(2 * m - 1)) * lc.a_sq(-(2 * m - 2)) - lc.a_sq(-(m - 1));
      worst_prod = std::max(worst_prod, std::abs(r.get_d()));
    }
  }
  CHECK(worst_sum < 1e-100);
  CHECK(worst_prod < 1e-100);
  // Parity bounds carry over to the limit values.
  for (int n = 1; n <= 1000; ++n) {
    const double v = lc.a_sq(-n).get_d();
    if (n % 2 == 1) {
      REQUIRE(v >= 3.0);
    } else {
      REQUIRE(v <= 1.0);
    }
  }
}

TEST_CASE("negative block matches the double table near 2^24") {
  LimitCoefficients lc(table4(), 2000, 128);
  const std::uint64_t top = table4().float_rows();
  for (int n = 1; n <= 2000; ++n) {
    REQUIRE(std::abs(lc.a_sq(-n).get_d() - table4().a_sq_float(top - n)) < 1e-13);
  }
  CHECK(lc.a_sq(7) == mpf_class(mpq_class(35, 11), 128));
  CHECK_THROWS_AS(lc.a_sq(-2001), PrecisionError);
  CHECK_THROWS_AS(lc.a_sq(1 << 12), PrecisionError);
  CHECK_THROWS_AS(LimitCoefficients(table4(), 0, 128), DomainError);
}

TEST_CASE("multiprecision V identity: truncation error decays with the window") {
  LimitCoefficients lc(table4(), 300, 320);
  for (int k : {0, 1}) {
    const double r16 = check_V_identity_mp(lc, k, {1.0, 1.0}, 16).log10_residual;
    const double r32 = check_V_identity_mp(lc, k, {1.0, 1.0}, 32).log10_residual;
    const double r64 = check_V_identity_mp(lc, k, {1.0, 1.0}, 64).log10_residual;
    CHECK(r16 < -14.0);
    CHECK(r32 < r16 - 12.0);
    CHECK(r64 < r32 - 25.0);
  }
  // Agrees with the double-precision path where both are meaningful.
  auto model = Model::make(CoeffTable::build_shared(mpq_class(4), CoeffTable::Options{}));
  const double d16 = check_V_identity(model, DyadicInt::from_integer(0), {1.0, 1.0}, 16).residual;
  const double m16 = std::pow(10.0, check_V_identity_mp(lc, 0, {1.0, 1.0}, 16).log10_residual);
  CHECK(std::abs(d16 - m16) < 1e-15);
  CHECK_THROWS_AS(check_V_identity_mp(lc, 0, {1.0, 1.0}, 256), PrecisionError);
}
