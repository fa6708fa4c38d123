#include <doctest.h>

#include <random>

#include "jhull/dyadic.hpp"
#include "jhull/error.hpp"

using namespace jhull;

namespace {

// s-hat on representatives: k/2 for even k, (k + 1)/2 for odd k, modulo 2^(M-1).
std::uint64_t shat_oracle(std::uint64_t k, int m) {
  std::uint64_t out = (k % 2 == 0) ? k / 2 : (k + 1) / 2;
  return out & ((std::uint64_t{1} << (m - 1)) - 1);
}

std::string digits_of(const DyadicInt& d) {
  std::string s;
  for (auto e : d.digits()) s.push_back(static_cast<char>('0' + e));
  return s;
}

}  // namespace

TEST_CASE("from_integer expands into little-endian digits") {
  CHECK(digits_of(DyadicInt::from_integer(6, 4)) == "0110");
  CHECK(digits_of(DyadicInt::from_integer(-1, 4)) == "1111");
  CHECK(digits_of(DyadicInt::from_integer(-5, 4)) == "1101");
  for (std::int64_t n = -40; n <= 40; ++n) {
    CHECK(DyadicInt::from_integer(n, 10).representative() == static_cast<std::uint64_t>(n) % 1024);
  }
  CHECK_THROWS_AS(DyadicInt::from_integer(3, 0), PrecisionError);
}

TEST_CASE("shift drops the lowest digit") {
  CHECK(shift(DyadicInt::from_integer(6, 4)).representative() == 3);
  CHECK(shift(DyadicInt::from_integer(6, 4)).precision() == 3);
  CHECK(digits_of(shift(DyadicInt::from_integer(-1, 4))) == "111");
  CHECK(shift(DyadicInt::from_integer(1, 4)).representative() == 0);
  CHECK_THROWS_AS(shift(DyadicInt::from_integer(1, 1)), PrecisionError);
}

TEST_CASE("modified shift matches the integer oracle") {
  CHECK(modified_shift(DyadicInt::from_integer(0, 8)).representative() == 0);
  CHECK(modified_shift(DyadicInt::from_integer(1, 8)).representative() == 1);
  CHECK(modified_shift(DyadicInt::from_integer(5, 8)).representative() == 3);
  const int m = 12;
  for (std::uint64_t k = 0; k < (1u << m); ++k) {
    auto d = DyadicInt::from_integer(static_cast<std::int64_t>(k), m);
    REQUIRE(modified_shift(d).representative() == shat_oracle(k, m));
  }
}

TEST_CASE("negation is two's complement") {
  CHECK(negate(DyadicInt::from_integer(0, 8)).representative() == 0);
  CHECK(negate(DyadicInt::from_integer(1, 8)) == DyadicInt::from_integer(-1, 8));
  CHECK(negate(DyadicInt::from_integer(5, 4)).representative() == 11);
}

TEST_CASE("modified shift is conjugate to the shift by negation") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    auto d = sample_bounded_runs(rng, 1 + static_cast<int>(rng() % 5), 40);
    REQUIRE(modified_shift(d) == negate(shift(negate(d))));
  }
}

TEST_CASE("kappa map") {
  auto zero = kappa_map(DyadicInt::from_integer(0, 20), 16);
  CHECK(zero.representative() == 0);
  auto minus_one = kappa_map(DyadicInt::from_integer(-1, 20), 16);
  CHECK(minus_one.representative() == 1);
  CHECK_THROWS_AS(kappa_map(DyadicInt::from_integer(3, 8), 8), PrecisionError);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto d = sample_bounded_runs(rng, 3, 40);
    const int n = 30;
    REQUIRE(kappa_map(modified_shift(d), n) == shift(kappa_map(d, n + 1)));
  }
}

TEST_CASE("kappa digits flip after the first one digit") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    auto d = sample_bounded_runs(rng, 4, 48);
    const int n_terms = 40;
    auto k = kappa_map(d, n_terms);
    int n0 = 0;
    while (d.digit(n0) == 0) ++n0;
    for (int n = 1; n + n0 < n_terms; ++n) {
      REQUIRE(k.digit(n + n0) == (d.digit(n + n0) + 1) % 2);
    }
  }
}

TEST_CASE("run profiles") {
  auto ones = run_profile(DyadicInt::from_integer(-1, 8), 8);
  CHECK(ones.max_one_run == 8);
  CHECK(ones.max_zero_run == 0);
  auto alt = run_profile(DyadicInt::from_pattern("", "10", 16), 8);
  CHECK(alt.max_one_run == 1);
  CHECK(alt.max_zero_run == 1);
  auto six = run_profile(DyadicInt::from_integer(6, 8), 8);
  CHECK(six.max_zero_run == 5);
  CHECK(six.max_one_run == 2);
  CHECK_THROWS_AS(run_profile(DyadicInt::from_integer(6, 8), 9), PrecisionError);
}

TEST_CASE("kappa of an F_N element lies in F_{N+1}") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n_bound = 1 + static_cast<int>(trial % 4);
    auto d = sample_bounded_runs(rng, n_bound, 64);
    REQUIRE(run_profile(d, 64).within(n_bound));
    REQUIRE(run_profile(kappa_map(d, 60), 60).within(n_bound + 1));
  }
}

TEST_CASE("parsing accepts integers, digit strings and patterns") {
  CHECK(DyadicInt::parse("6", 8) == DyadicInt::from_integer(6, 8));
  CHECK(DyadicInt::parse("-5", 4).representative() == 11);
  CHECK(DyadicInt::parse("digits:0110") == DyadicInt::from_integer(6, 4));
  auto d = DyadicInt::from_integer(37, 9);
  CHECK(DyadicInt::parse(d.to_string()) == d);
  auto p = DyadicInt::parse("1(10)*", 9);
  CHECK(digits_of(p) == "110101010");
  CHECK_THROWS_AS(DyadicInt::parse("12x"), DomainError);
  CHECK_THROWS_AS(DyadicInt::parse("1()*"), DomainError);
}

TEST_CASE("digit access outside the precision fails loudly") {
  auto d = DyadicInt::from_integer(5, 4);
  CHECK_THROWS_AS(d.digit(4), PrecisionError);
  CHECK_THROWS_AS(d.representative(5), PrecisionError);
  CHECK(d.plus(11).representative() == 0);
  CHECK(d.doubled().representative() == 10);
  CHECK(d.doubled().precision() == 5);
}
