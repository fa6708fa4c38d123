#include <doctest.h>

#include <array>
#include <random>

#include <Eigen/Dense>

#include "jhull/error.hpp"
#include "jhull/tridiagonal.hpp"

using namespace jhull;

namespace {

SymTridiagonal random_tridiagonal(std::mt19937_64& rng, std::size_t n, bool zero_diag) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SymTridiagonal t;
  t.diag.resize(n);
  t.off.resize(n - 1);
  for (auto& d : t.diag) d = zero_diag ? 0.0 : u(rng);
  for (auto& e : t.off) e = 0.2 + std::abs(u(rng));
  return t;
}

}  // namespace

TEST_CASE("selected-row QL agrees with a dense eigensolver") {
  std::mt19937_64 rng(5);
  for (bool zero_diag : {false, true}) {
    for (std::size_t n : {1u, 2u, 7u, 60u, 201u}) {
      auto t = random_tridiagonal(rng, n, zero_diag);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> dense(t.dense());
      std::array<int, 2> rows{0, static_cast<int>(n / 2)};
      auto sel = eigen_selected_rows(t, rows);
      REQUIRE(sel.values.size() == n);
      for (std::size_t j = 0; j < n; ++j) {
        const auto c = static_cast<Eigen::Index>(j);
        REQUIRE(std::abs(sel.values[j] - dense.eigenvalues()(c)) < 1e-12);
        // Sign-free comparison through products of the selected components.
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            double mine = sel.rows(a, c) * sel.rows(b, c);
            double ref = dense.eigenvectors()(rows[static_cast<std::size_t>(a)], c) *
                         dense.eigenvectors()(rows[static_cast<std::size_t>(b)], c);
            REQUIRE(std::abs(mine - ref) < 1e-10);
          }
        }
      }
      auto plain = eigenvalues(t);
      for (std::size_t j = 0; j < n; ++j) REQUIRE(plain[j] == sel.values[j]);
    }
  }
}

TEST_CASE("decoupled blocks and completeness") {
  SymTridiagonal t;
  t.diag = {0.0, 0.0, 0.0, 0.0};
  t.off = {1.0, 0.0, 2.0};
  std::array<int, 2> rows{1, 2};
  auto sel = eigen_selected_rows(t, rows);
  CHECK(sel.values[0] == doctest::Approx(-2.0));
  CHECK(sel.values[3] == doctest::Approx(2.0));
  Eigen::Matrix2d total = sel.rows * sel.rows.transpose();
  CHECK((total - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(std::abs(total(0, 1)) < 1e-15);
}

TEST_CASE("resolvent entries match a dense inverse") {
  std::mt19937_64 rng(9);
  for (std::complex<double> z : {std::complex<double>(0.3, 0.1), std::complex<double>(-1.2, 1e-3),
                                 std::complex<double>(10.0, 0.0)}) {
    auto t = random_tridiagonal(rng, 80, true);
    Eigen::MatrixXcd a = t.dense().cast<std::complex<double>>();
    a.diagonal().array() -= z;
    Eigen::MatrixXcd inv = a.inverse();
    TridiagonalResolvent r(t, z);
    double worst = 0.0;
    for (std::size_t i = 0; i < 80; ++i) {
      for (std::size_t j = 0; j < 80; ++j) {
        worst = std::max(worst, std::abs(r.entry(i, j) - inv(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
      }
    }
    CHECK(worst < 1e-9);
    auto col = r.column(40, 30, 50);
    for (std::size_t i = 30; i <= 50; ++i) REQUIRE(std::abs(col[i - 30] - r.entry(i, 40)) < 1e-12 * std::max(1.0, std::abs(col[i - 30])));
  }
}

TEST_CASE("shape errors") {
  SymTridiagonal t;
  CHECK_THROWS_AS(eigenvalues(t), DomainError);
  t.diag = {1.0, 2.0};
  t.off = {};
  CHECK_THROWS_AS(eigenvalues(t), DomainError);
  t.off = {0.5};
  std::array<int, 1> bad{2};
  CHECK_THROWS_AS(eigen_selected_rows(t, bad), DomainError);
}
