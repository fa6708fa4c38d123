#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "jhull/dyadic.hpp"

namespace jhull {

inline constexpr int kDefaultExactDepth = 12;
inline constexpr int kMaxExactDepth = 16;
inline constexpr int kDefaultFloatDepth = 24;
inline constexpr int kMaxFloatDepth = 28;

/// Parses "4", "7/2", "3.5" into an exact rational.
mpq_class parse_rational(const std::string& text);

/// Squared Jacobi coefficients a_n^2 of the equilibrium measure of the
/// Julia set of z^2 - lambda.
///
/// Rows 0 <= n < 2^exact_depth are exact rationals produced by the forward
/// recursion a_0 = 0, a_1^2 = lambda,
///   a_{2k+2}^2 = a_{k+1}^2 / a_{2k+1}^2,   a_{2k+3}^2 = lambda - a_{2k+2}^2.
/// The float cache repeats the same recursion in double precision out to
/// 2^float_depth rows; a dyadic argument is evaluated at its representative
/// modulo 2^float_depth.
class CoeffTable {
 public:
  struct Options {
    int exact_depth = kDefaultExactDepth;
    int float_depth = kDefaultFloatDepth;
    /// Permits 2 < lambda <= 3, where limit-periodicity is not asserted.
    bool allow_small_lambda = false;
  };

  static CoeffTable build(const mpq_class& lambda, const Options& options);
  static CoeffTable build(const mpq_class& lambda, int exact_depth);
  static std::shared_ptr<const CoeffTable> build_shared(const mpq_class& lambda, const Options& options);

  const mpq_class& lambda_exact() const { return lambda_; }
  double lambda() const { return lambda_d_; }
  int exact_depth() const { return exact_depth_; }
  int float_depth() const { return float_depth_; }
  std::size_t exact_rows() const { return a_sq_.size(); }
  std::uint64_t float_rows() const { return static_cast<std::uint64_t>(float_cache_.size()); }

  const mpq_class& a_sq(std::size_t n) const;
  double a_sq_float(std::uint64_t n) const;
  double a_float(std::uint64_t n) const;

  /// a at (d + offset), using the representative of d modulo
  /// 2^min(precision, float_depth).
  double a_shifted(const DyadicInt& d, std::int64_t offset) const;

  /// Copy with row n replaced by a perturbed value (fault injection for
  /// negative tests of the verification suite).
  CoeffTable with_corrupted_row(std::size_t n) const;

 private:
  CoeffTable() = default;

  mpq_class lambda_;
  double lambda_d_ = 0.0;
  int exact_depth_ = 0;
  int float_depth_ = 0;
  std::vector<mpq_class> a_sq_;
  std::vector<double> float_cache_;
};

/// Value of a at a dyadic argument with an empirical truncation error.
struct DyadicCoeff {
  double value = 0.0;
  /// max over m in {M-3, ..., M-1} of |a_{k mod 2^m} - a_{k mod 2^M}|;
  /// empirical, the limit has no known effective modulus of continuity.
  double error_bound = 0.0;
  std::uint64_t representative = 0;
  bool exact_row = false;
};

/// Requires the precision M of d to be at most the table's float depth.
DyadicCoeff a_at(const CoeffTable& table, const DyadicInt& d);

/// Result of checking both recursion relations on every exact row.
struct RelationReport {
  bool ok = true;
  std::size_t rows_checked = 0;
  /// First offending row (valid when !ok) and which relation failed.
  std::size_t first_bad_row = 0;
  std::string failed_relation;
  /// Largest relative residual of the same relations in the float cache.
  double float_residual = 0.0;
};

RelationReport verify_relations(const CoeffTable& table);

struct ParityReport {
  bool ok = true;
  std::size_t rows_checked = 0;
  std::size_t max_even_index = 0;
  mpq_class max_even_value;
  std::size_t min_odd_index = 0;
  mpq_class min_odd_value;
  bool upper_bound_ok = true;  ///< a_n^2 <= lambda for every row
};

/// Checks a_{2k}^2 <= 1 (k >= 1) and a_{2k+1}^2 >= lambda - 1 exactly.
/// Throws CorruptionError on a violation.
ParityReport verify_parity_bounds(const CoeffTable& table);

struct FNBoundReport {
  int n_bound = 0;
  double c3 = 0.0;            ///< (lambda - 1) / lambda^N
  int samples = 0;
  int violations = 0;
  double min_a_sq = 0.0;
  double min_margin = 0.0;    ///< min over samples of a^2 - (C3 - error_bound)
  int induction_checks = 0;
  int induction_violations = 0;
};

/// Samples dyadic integers with runs of equal digits at most N and checks
/// a^2 >= C3 - error_bound, plus a_{2^{n+1} k'}^2 >= (lambda - 1)/lambda^{n+1}
/// for sampled odd k' and 0 <= n < N.
FNBoundReport fN_lower_bound(const CoeffTable& table, int n_bound, int samples, std::mt19937_64& rng);

/// For each base index k < base_count, the sequence over n of
/// max_s |a_{k + s 2^n} - a_k| across the float cache truncated to 2^depth
/// rows; returns one row per k (indexed by n starting at n_first(k)).
struct LimitPeriodicityRow {
  std::uint64_t k = 0;
  int n_first = 0;
  std::vector<double> sup_diff;
};
std::vector<LimitPeriodicityRow> limit_periodicity_profile(const CoeffTable& table, std::uint64_t base_count,
                                                           int depth);

}  // namespace jhull
