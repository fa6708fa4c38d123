#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jhull {

inline constexpr int kDefaultDyadicDigits = 64;

/// A dyadic integer known to a finite number of binary digits.
///
/// Digits are stored little-endian: digit(k) is the coefficient of 2^k.
/// Only the first precision() digits are trusted; operations that consume
/// digits (the shifts) reduce the precision and refuse to run once it is
/// exhausted.
class DyadicInt {
 public:
  DyadicInt() = default;

  /// Two's-complement digits of n modulo 2^precision.
  static DyadicInt from_integer(std::int64_t n, int precision = kDefaultDyadicDigits);
  static DyadicInt from_digits(std::vector<std::uint8_t> digits);

  /// Eventually periodic digits: `prefix` followed by `period` repeated,
  /// truncated to `precision` digits. An empty period repeats zeros.
  static DyadicInt from_pattern(std::string_view prefix, std::string_view period, int precision);

  /// Accepts a decimal integer ("6", "-5"), a digit string ("digits:0110"
  /// or the printed form "0110(M=4)"), or a pattern such as "1(10)*".
  static DyadicInt parse(std::string_view text, int precision = kDefaultDyadicDigits);

  int precision() const { return static_cast<int>(digits_.size()); }
  int digit(int k) const;
  std::span<const std::uint8_t> digits() const { return digits_; }

  bool is_odd() const { return digit(0) == 1; }
  bool is_even() const { return digit(0) == 0; }

  /// Keeps the first m digits.
  DyadicInt truncated(int m) const;

  /// Integer representative in [0, 2^m) of the value modulo 2^m (m <= 63).
  std::uint64_t representative(int m) const;
  std::uint64_t representative() const { return representative(precision()); }

  /// 2·d: prepends a zero digit, so the precision grows by one.
  DyadicInt doubled() const;

  /// d + n modulo 2^precision.
  DyadicInt plus(std::int64_t n) const;

  /// Little-endian digit string followed by the precision, e.g. "0110(M=4)".
  std::string to_string() const;

  friend bool operator==(const DyadicInt&, const DyadicInt&) = default;

 private:
  explicit DyadicInt(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {}

  std::vector<std::uint8_t> digits_;
};

/// Plain shift: drops digit 0.
DyadicInt shift(const DyadicInt& d);

/// Shift that carries the low one back in: s(d) for even d, 1 + s(d) for odd d.
DyadicInt modified_shift(const DyadicInt& d);

/// Applies modified_shift n times.
DyadicInt modified_shift(const DyadicInt& d, int n);

/// -d modulo 2^precision (two's complement).
DyadicInt negate(const DyadicInt& d);

/// Digit n of the result is digit 0 of modified_shift^n(d), for n < n_terms.
DyadicInt kappa_map(const DyadicInt& d, int n_terms);

struct RunProfile {
  int max_zero_run = 0;
  int max_one_run = 0;
  int window = 0;

  int max_run() const { return max_zero_run > max_one_run ? max_zero_run : max_one_run; }

  /// Runs of equal digits no longer than n inside the examined window.
  bool within(int n) const { return max_run() <= n; }
};

/// Longest runs of equal digits among the first `window` digits.
RunProfile run_profile(const DyadicInt& d, int window);

/// Random digit string whose runs of equal digits have length in [1, max_run].
/// Digits are drawn from the raw engine output so the sequence is identical
/// on every platform.
DyadicInt sample_bounded_runs(std::mt19937_64& rng, int max_run, int precision);

}  // namespace jhull
