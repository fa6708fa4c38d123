#include "jhull/coeffs.hpp"

#include <algorithm>
#include <cmath>

#include "jhull/error.hpp"

namespace jhull {

mpq_class parse_rational(const std::string& text) {
  if (text.empty()) throw DomainError("empty rational literal");
  try {
    auto dot = text.find('.');
    if (dot == std::string::npos) {
      mpq_class q(text, 10);
      q.canonicalize();
      if (q.get_den() == 0) throw DomainError("zero denominator in " + text);
      return q;
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw DomainError("cannot parse rational: " + text);
  }
}

CoeffTable CoeffTable::build(const mpq_class& lambda, int exact_depth) {
  Options options;
  options.exact_depth = exact_depth;
  options.float_depth = std::max(exact_depth, kDefaultFloatDepth);
  return build(lambda, options);
}

CoeffTable CoeffTable::build(const mpq_class& lambda, const Options& options) {
  if (lambda <= 2) throw RegimeError("coefficient table needs lambda > 2");
  if (lambda <= 3 && !options.allow_small_lambda) {
    throw RegimeError("lambda <= 3 is outside the limit-periodic regime (lambda = " + lambda.get_str() + ")");
  }
  if (options.exact_depth < 1 || options.exact_depth > kMaxExactDepth) {
    throw DomainError("exact table depth must lie in [1, " + std::to_string(kMaxExactDepth) + "]");
  }
  if (options.float_depth < options.exact_depth || options.float_depth > kMaxFloatDepth) {
    throw DomainError("float depth must lie in [exact_depth, " + std::to_string(kMaxFloatDepth) + "]");
  }

  CoeffTable t;
  t.lambda_ = lambda;
  t.lambda_d_ = lambda.get_d();
  t.exact_depth_ = options.exact_depth;
  t.float_depth_ = options.float_depth;

  const std::size_t rows = std::size_t{1} << options.exact_depth;
  t.a_sq_.resize(rows);
  t.a_sq_[0] = 0;
  if (rows > 1) t.a_sq_[1] = lambda;
  for (std::size_t n = 2; n < rows; ++n) {
    if (n % 2 == 0) {
      t.a_sq_[n] = t.a_sq_[n / 2] / t.a_sq_[n - 1];
    } else {
      t.a_sq_[n] = lambda - t.a_sq_[n - 1];
    }
  }

  const std::size_t frows = std::size_t{1} << options.float_depth;
  t.float_cache_.resize(frows);
  for (std::size_t n = 0; n < rows; ++n) t.float_cache_[n] = t.a_sq_[n].get_d();
  for (std::size_t n = rows; n < frows; ++n) {
    if (n % 2 == 0) {
      t.float_cache_[n] = t.float_cache_[n / 2] / t.float_cache_[n - 1];
    } else {
      t.float_cache_[n] = t.lambda_d_ - t.float_cache_[n - 1];
    }
  }
  return t;
}

std::shared_ptr<const CoeffTable> CoeffTable::build_shared(const mpq_class& lambda, const Options& options) {
  return std::make_shared<const CoeffTable>(build(lambda, options));
}

const mpq_class& CoeffTable::a_sq(std::size_t n) const {
  if (n >= a_sq_.size()) {
    throw PrecisionError("exact row " + std::to_string(n) + " beyond table of " + std::to_string(a_sq_.size()));
  }
  return a_sq_[n];
}

double CoeffTable::a_sq_float(std::uint64_t n) const {
  if (n >= float_cache_.size()) {
    throw PrecisionError("float row " + std::to_string(n) + " beyond table of " +
                         std::to_string(float_cache_.size()));
  }
  return float_cache_[n];
}

double CoeffTable::a_float(std::uint64_t n) const { return std::sqrt(a_sq_float(n)); }

double CoeffTable::a_shifted(const DyadicInt& d, std::int64_t offset) const {
  const int m = std::min(d.precision(), float_depth_);
  const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
  const std::uint64_t index = (d.representative(m) + static_cast<std::uint64_t>(offset)) & mask;
  return a_float(index);
}

CoeffTable CoeffTable::with_corrupted_row(std::size_t n) const {
  CoeffTable t = *this;
  if (n >= t.a_sq_.size()) throw DomainError("corrupted row outside exact table");
  t.a_sq_[n] += mpq_class(1, 1000);
  t.float_cache_[n] = t.a_sq_[n].get_d();
  return t;
}

DyadicCoeff a_at(const CoeffTable& table, const DyadicInt& d) {
  const int m_full = d.precision();
  if (m_full > table.float_depth()) {
    throw PrecisionError("dyadic precision " + std::to_string(m_full) + " exceeds table depth " +
                         std::to_string(table.float_depth()));
  }
  DyadicCoeff out;
  out.representative = d.representative(m_full);
  out.exact_row = m_full <= table.exact_depth();
  out.value = table.a_float(out.representative);
  for (int m = std::max(0, m_full - 3); m < m_full; ++m) {
    std::uint64_t k = out.representative & ((std::uint64_t{1} << m) - 1);
    out.error_bound = std::max(out.error_bound, std::abs(table.a_float(k) - out.value));
  }
  return out;
}

RelationReport verify_relations(const CoeffTable& table) {
  RelationReport r;
  const std::size_t rows = table.exact_rows();
  const mpq_class& lambda = table.lambda_exact();
  for (std::size_t k = 0; 2 * k + 1 < rows; ++k) {
    if (table.a_sq(2 * k) + table.a_sq(2 * k + 1) != lambda) {
      r.ok = false;
      r.first_bad_row = 2 * k;
      r.failed_relation = "a2[2k] + a2[2k+1] = lambda";
      return r;
    }
    if (2 * k + 2 < rows && table.a_sq(2 * k + 1) * table.a_sq(2 * k + 2) != table.a_sq(k + 1)) {
      r.ok = false;
      r.first_bad_row = 2 * k + 1;
      r.failed_relation = "a2[2k+1] * a2[2k+2] = a2[k+1]";
      return r;
    }
    r.rows_checked = 2 * k + 2;
  }
  r.rows_checked = rows;

  const double lam = table.lambda();
  const std::uint64_t frows = table.float_rows();
  for (std::uint64_t k = rows / 2; 2 * k + 2 < frows; ++k) {
    double s = table.a_sq_float(2 * k) + table.a_sq_float(2 * k + 1);
    double p = table.a_sq_float(2 * k + 1) * table.a_sq_float(2 * k + 2);
    double target = table.a_sq_float(k + 1);
    r.float_residual = std::max({r.float_residual, std::abs(s - lam) / lam, std::abs(p - target) / target});
  }
  return r;
}

ParityReport verify_parity_bounds(const CoeffTable& table) {
  ParityReport r;
  const std::size_t rows = table.exact_rows();
  const mpq_class& lambda = table.lambda_exact();
  const mpq_class odd_floor = lambda - 1;
  r.max_even_value = 0;
  r.min_odd_value = lambda;
  for (std::size_t n = 1; n < rows; ++n) {
    const mpq_class& v = table.a_sq(n);
    if (v > lambda) r.upper_bound_ok = false;
    if (n % 2 == 0) {
      if (v > r.max_even_value) {
        r.max_even_value = v;
        r.max_even_index = n;
      }
    } else if (v < r.min_odd_value) {
      r.min_odd_value = v;
      r.min_odd_index = n;
    }
  }
  r.rows_checked = rows;
  r.ok = r.max_even_value <= 1 && r.min_odd_value >= odd_floor && r.upper_bound_ok;
  if (!r.ok) {
    throw CorruptionError("parity bounds violated: max even a^2 = " + r.max_even_value.get_str() + " at row " +
                          std::to_string(r.max_even_index) + ", min odd a^2 = " + r.min_odd_value.get_str() +
                          " at row " + std::to_string(r.min_odd_index));
  }
  return r;
}

FNBoundReport fN_lower_bound(const CoeffTable& table, int n_bound, int samples, std::mt19937_64& rng) {
  if (n_bound < 1) throw DomainError("F_N bound needs N >= 1");
  FNBoundReport r;
  r.n_bound = n_bound;
  const double lam = table.lambda();
  r.c3 = (lam - 1.0) / std::pow(lam, n_bound);
  r.samples = samples;
  r.min_a_sq = lam;
  r.min_margin = lam;
  const int depth = table.float_depth();
  for (int s = 0; s < samples; ++s) {
    DyadicInt d = sample_bounded_runs(rng, n_bound, depth);
    DyadicCoeff c = a_at(table, d);
    double a_sq = c.value * c.value;
    double margin = a_sq - (r.c3 - c.error_bound);
    r.min_a_sq = std::min(r.min_a_sq, a_sq);
    r.min_margin = std::min(r.min_margin, margin);
    if (margin < 0.0) ++r.violations;

    // Induction step on an odd core: a^2_{2^{n+1} k'} >= (lambda - 1) / lambda^{n+1}.
    std::uint64_t odd = d.representative(depth - n_bound - 1) | 1;
    for (int n = 0; n < n_bound; ++n) {
      std::uint64_t index = odd << (n + 1);
      double bound = (lam - 1.0) / std::pow(lam, n + 1);
      ++r.induction_checks;
      if (table.a_sq_float(index) < bound * (1.0 - 1e-14)) ++r.induction_violations;
    }
  }
  return r;
}

std::vector<LimitPeriodicityRow> limit_periodicity_profile(const CoeffTable& table, std::uint64_t base_count,
                                                           int depth) {
  if (depth > table.float_depth()) throw PrecisionError("profile depth exceeds the float table");
  const std::uint64_t rows = std::uint64_t{1} << depth;
  std::vector<LimitPeriodicityRow> out;
  for (std::uint64_t k = 0; k < base_count; ++k) {
    LimitPeriodicityRow row;
    row.k = k;
    int n = 0;
    while ((std::uint64_t{1} << n) <= k) ++n;
    row.n_first = n;
    const double ak = table.a_float(k);
    for (; n < depth; ++n) {
      double worst = 0.0;
      for (std::uint64_t idx = k; idx < rows; idx += (std::uint64_t{1} << n)) {
        worst = std::max(worst, std::abs(table.a_float(idx) - ak));
      }
      row.sup_diff.push_back(worst);
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace jhull
