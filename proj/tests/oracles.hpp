#pragma once

#include <vector>

#include <gmpxx.h>

namespace jhull::oracle {

/// Moments of the equilibrium measure of the Julia set of z^2 - lambda, from
/// invariance alone: int x^{2k} = int (x + lambda)^k, odd moments vanish.
inline std::vector<mpq_class> equilibrium_moments(const mpq_class& lambda, int max_degree) {
  std::vector<mpq_class> m(static_cast<std::size_t>(max_degree) + 1, mpq_class(0));
  m[0] = 1;
  for (int d = 2; d <= max_degree; d += 2) {
    const int k = d / 2;
    mpq_class s = 0;
    mpz_class binom = 1;
    for (int j = 0; j <= k; ++j) {
      mpq_class lp = 1;
      for (int e = 0; e < k - j; ++e) lp *= lambda;
      s += mpq_class(binom) * lp * m[static_cast<std::size_t>(j)];
      binom = binom * (k - j) / (j + 1);
    }
    m[static_cast<std::size_t>(d)] = s;
  }
  return m;
}

/// a_n^2 for 1 <= n <= n_max by the Stieltjes procedure on monic orthogonal
/// polynomials, with inner products taken from the exact moments.
inline std::vector<mpq_class> recurrence_from_moments(const mpq_class& lambda, int n_max) {
  const auto m = equilibrium_moments(lambda, 2 * n_max + 2);
  using Poly = std::vector<mpq_class>;
  auto inner = [&](const Poly& p, const Poly& q) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < q.size(); ++j) s += p[i] * q[j] * m[i + j];
    }
    return s;
  };
  std::vector<mpq_class> out(static_cast<std::size_t>(n_max) + 1, mpq_class(0));
  Poly prev;          // pi_{n-1}
  Poly cur{mpq_class(1)};  // pi_n
  mpq_class norm_prev = 0;
  mpq_class norm_cur = inner(cur, cur);
  for (int n = 0; n < n_max; ++n) {
    Poly next(cur.size() + 1, mpq_class(0));
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    if (n > 0) {
      const mpq_class beta = norm_cur / norm_prev;
      for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= beta * prev[i];
    }
    prev = cur;
    cur = next;
    norm_prev = norm_cur;
    norm_cur = inner(cur, cur);
    out[static_cast<std::size_t>(n) + 1] = norm_cur / norm_prev;
  }
  return out;
}

}  // namespace jhull::oracle
