#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "jhull/error.hpp"
#include "jhull/hull.hpp"

using namespace jhull;

namespace {

const Model& model4() {
  static const Model m = Model::make(CoeffTable::build_shared(mpq_class(4), CoeffTable::Options{}));
  return m;
}

// <e_i, J^m e_j> from the dense matrix.
Eigen::Matrix2d dense_moment(const TruncatedJacobi& j, int m) {
  Eigen::MatrixXd a = j.matrix().dense();
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(a.rows(), a.cols());
  for (int k = 0; k < m; ++k) p = p * a;
  const auto s = static_cast<Eigen::Index>(j.index_of(-1));
  const auto t = static_cast<Eigen::Index>(j.index_of(0));
  Eigen::Matrix2d out;
  out << p(s, s), p(s, t), p(t, s), p(t, t);
  return out;
}

}  // namespace

TEST_CASE("truncation layout") {
  const auto& table = *model4().table;
  auto j = build_truncation(table, DyadicInt::from_integer(0), 3);
  REQUIRE(j.offdiag.size() == 6);
  CHECK(j.offdiag[0] == doctest::Approx(std::sqrt(0.8470723450236882)).epsilon(1e-12));
  CHECK(j.offdiag[1] == doctest::Approx(std::sqrt(3.152927654976312)).epsilon(1e-12));
  CHECK(j.offdiag[2] == 0.0);
  CHECK(j.offdiag[3] == 2.0);
  CHECK(j.offdiag[4] == 1.0);
  CHECK(j.offdiag[5] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  for (double d : j.matrix().diag) CHECK(d == 0.0);
  CHECK(j.coupling(1) == 2.0);

  auto kappa = DyadicInt::parse("1(10)*");
  auto w = build_truncation(table, kappa, 40);
  for (int n = -39; n <= 40; ++n) {
    REQUIRE(w.coupling(n) >= 0.0);
    auto c = a_at(table, kappa.plus(n).truncated(24));
    REQUIRE(std::abs(w.coupling(n) - c.value) <= c.error_bound + 1e-15);
  }
  CHECK_THROWS_AS(build_truncation(table, DyadicInt::from_integer(0, 6), 40), PrecisionError);
}

TEST_CASE("spectrum of a large truncation stays near [-xi, xi]") {
  const auto& m = model4();
  auto j = build_truncation(*m.table, DyadicInt::parse("1(10)*"), 1 << 10);
  auto ev = eigenvalues(j.matrix());
  CHECK(ev.front() > -m.xi() - 0.1);
  CHECK(ev.back() < m.xi() + 0.1);
}

TEST_CASE("spectral measure moments") {
  const auto& m = model4();
  for (const char* k : {"0", "1", "6", "1(10)*"}) {
    auto kappa = DyadicInt::parse(k);
    auto j = build_truncation(*m.table, kappa, 200);
    auto sigma = spectral_measure(j);
    CHECK((sigma.total() - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-10);
    Eigen::Matrix2d first = sigma.moment(1);
    CHECK(std::abs(first(0, 0)) < 1e-10);
    CHECK(std::abs(first(1, 1)) < 1e-10);
    CHECK(first(0, 1) == doctest::Approx(m.table->a_shifted(kappa, 0)).epsilon(1e-10));
    for (int p = 0; p <= 8; ++p) REQUIRE((sigma.moment(p) - dense_moment(j, p)).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(sigma.evenness_residual(8) < 1e-8);
    CHECK(sigma.min_x() >= -m.xi() - 0.1);
    CHECK(sigma.max_x() <= m.xi() + 0.1);
  }
}

TEST_CASE("resolvent samples") {
  const auto& m = model4();
  auto j = build_truncation(*m.table, DyadicInt::parse("1(10)*"), 300);
  auto far = resolvent_entry(j, {10.0, 0.0}, m.xi());
  // Neumann series: m(z) = -1/z - M_1/z^2 - M_2/z^3 - ..., M_k the moments.
  Eigen::Matrix2cd lead = -0.1 * Eigen::Matrix2cd::Identity();
  CHECK((far.m - lead).cwiseAbs().maxCoeff() < 4.0 / 100.0);
  Eigen::Matrix2cd two_terms = lead - spectral_measure(j).moment(1).cast<std::complex<double>>() / 100.0;
  CHECK((far.m - two_terms).cwiseAbs().maxCoeff() < 2.0 * m.xi() * m.xi() / 1000.0);

  auto s = resolvent_entry(j, {0.3, 0.1}, m.xi());
  CHECK(s.herglotz_margin() >= 0.0);
  auto sigma = spectral_measure(j);
  CHECK((sigma.stieltjes({0.3, 0.1}) - s.m).cwiseAbs().maxCoeff() < 1e-9);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    std::complex<double> z(u(rng), std::abs(u(rng)) / 3.0 + 1e-3);
    REQUIRE(resolvent_entry(j, z, m.xi()).herglotz_margin() >= -1e-12);
  }
  CHECK_THROWS_AS(resolvent_entry(j, {0.5, 1e-10}, m.xi()), DomainError);
  CHECK_THROWS_AS(resolvent_entry(j, {2.0, 0.0}, m.xi()), DomainError);
}

TEST_CASE("V conjugation identity") {
  const auto& m = model4();
  for (const char* k : {"0", "1", "1(10)*"}) {
    auto kappa = DyadicInt::parse(k);
    CHECK(check_V_identity(m, kappa, {1.0, 1.0}, 64).residual < 1e-12);
    CHECK(check_V_identity(m, kappa, {10.0, 0.0}, 64).residual < 1e-8);
  }
  CHECK_THROWS_AS(check_V_identity(m, DyadicInt::from_integer(0), {1.0, 0.0}, 64), DomainError);
}

TEST_CASE("renormalization pairing") {
  const auto& m = model4();
  for (const char* k : {"0", "1", "-1"}) {
    auto r = check_renormalization(m, DyadicInt::parse(k), 8, 256);
    CHECK(r.rows.size() == 9 * 4);
    CHECK(r.max_residual < 1e-8);
    for (const auto& row : r.rows) {
      if (row.m % 2 == 1 && row.p == row.q) {
        REQUIRE(std::abs(row.lhs) < 1e-10);
        REQUIRE(std::abs(row.rhs) < 1e-10);
      }
    }
  }
}

TEST_CASE("reflection") {
  const auto& m = model4();
  std::mt19937_64 rng(4);
  auto r0 = reflection_check(*m.table, DyadicInt::from_integer(0), 128);
  CHECK(r0.residual < 1e-10);
  auto rr = reflection_check(*m.table, sample_bounded_runs(rng, 3, 64), 1 << 10);
  CHECK(rr.residual < 1e-8);
  auto z = reflection_check(*m.table, DyadicInt::from_integer(5), 64, 0);
  CHECK(z.residual < 1e-14);
}

TEST_CASE("atom probes") {
  const auto& m = model4();
  auto j = build_truncation(*m.table, DyadicInt::parse("1(10)*"), 1 << 10);
  const double etas[] = {1e-1, 1e-2, 1e-3};
  const double floor = eta_floor(j);
  CHECK(floor > 0.0);
  CHECK(floor < 1e-3);

  auto at_edge = atom_probe(j, m.xi(), etas, floor);
  CHECK(at_edge.decreasing);
  for (bool r : at_edge.reliable) CHECK(r);

  // x = 2 lies in a second-level gap of E.
  auto in_gap = atom_probe(j, 2.0, etas, floor);
  CHECK(in_gap.values[1] < 1e-3);
  CHECK(in_gap.values[2] < 1e-4);

  auto implanted = implanted_atom_probe(j, 6.0, etas);
  CHECK(implanted.atom_x > m.xi());
  CHECK(implanted.atom_mass > 0.1);
  CHECK(implanted.worst_relative_deviation < 0.1);

  const double tiny[] = {floor / 100.0};
  CHECK_FALSE(atom_probe(j, m.xi(), tiny, floor).reliable[0]);
}

TEST_CASE("half-line block renormalization") {
  const auto& m = model4();
  auto r0 = jminus_renorm_check(m, 24, 0, 101);
  CHECK(r0.residual == 0.0);
  auto r5 = jminus_renorm_check(m, 24, 5, 201);
  CHECK(r5.residual < 1e-8);
  double prev = 1e300;
  for (int depth : {8, 12, 16, 20, 24}) {
    auto r = jminus_renorm_check(m, depth, 10, 201);
    CHECK(r.residual < prev);
    prev = r.residual;
  }
}

TEST_CASE("half-line measure is an eigenmeasure of the adjoint weighted Ruelle operator") {
  const auto& m = model4();
  const double a_sq = m.table->a_sq_float((std::uint64_t{1} << 24) - 1);
  auto nu = jminus_measure(*m.table, 1 << 12);
  CHECK(nu.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(nu_invariance_residual(m.params, nu, a_sq, [](double x) { return x * x; }) < 1e-12);
  CHECK(nu_invariance_residual(m.params, nu, a_sq, [](double x) { return x; }) < 1e-12);
  double prev = 1e300;
  for (int n : {8, 32, 128}) {
    double r = nu_invariance_residual(m.params, jminus_measure(*m.table, n), a_sq, [](double) { return 1.0; });
    CHECK(r <= prev);
    prev = r;
  }
  CHECK(prev < 1e-10);
}
