#include <doctest.h>

#include <cmath>
#include <numeric>

#include "symlval/errors.hpp"
#include "symlval/primes.hpp"

using namespace symlval;

namespace {

bool prime_by_trial_division(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_SUITE("primes") {

TEST_CASE("small tables") {
  const auto t10 = primes_up_to(10);
  CHECK(std::vector<std::uint32_t>(t10.begin(), t10.end()) ==
        std::vector<std::uint32_t>{2, 3, 5, 7});
  const auto t2 = primes_up_to(2);
  REQUIRE(t2.size() == 1);
  CHECK(t2[0] == 2);
  const auto t100 = primes_up_to(100);
  CHECK(t100.size() == 25);
  CHECK(t100[24] == 97);
}

TEST_CASE("sieve agrees with trial division") {
  const auto table = primes_up_to(5000);
  std::size_t count = 0;
  for (std::uint64_t n = 0; n <= 5000; ++n) {
    CHECK(table.contains(n) == prime_by_trial_division(n));
    count += prime_by_trial_division(n);
  }
  CHECK(table.size() == count);
  CHECK(table.up_to(1000).size() == 168);
  CHECK(table.up_to(1).empty());
}

TEST_CASE("segmented range") {
  // Limits above 10^7 go through the segmented sieve.
  const auto big = primes_up_to(10'200'000);
  CHECK(big.up_to(10'000'000).size() == 664579);
  CHECK(big.contains(10'000'019));
  CHECK_FALSE(big.contains(10'000'017));
  for (std::size_t i = 1; i < big.size(); ++i) REQUIRE(big[i - 1] < big[i]);
}

TEST_CASE("limit out of range") {
  CHECK_THROWS_AS(primes_up_to(1), DomainError);
  CHECK_THROWS_AS(primes_up_to(0), DomainError);
  CHECK_THROWS_AS(primes_up_to(std::uint64_t{1} << 32), DomainError);
}

TEST_CASE("level profiles") {
  const auto one = level_profile(1);
  CHECK(one.phi == 1);
  CHECK(one.prime_factors.empty());
  CHECK(one.least_prime == LevelProfile::kNoPrimeFactor);

  const auto six = level_profile(6);
  CHECK(six.prime_factors == std::vector<std::uint64_t>{2, 3});
  CHECK(six.phi == 2);
  CHECK(six.least_prime == 2);

  CHECK_THROWS_AS(level_profile(4), SquarefreeError);
  try {
    level_profile(90);
    FAIL("90 is not squarefree");
  } catch (const SquarefreeError& e) {
    CHECK(e.value() == 90);
  }
}

TEST_CASE("phi identity on squarefree levels") {
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    if (!is_squarefree(n)) {
      CHECK_THROWS_AS(level_profile(n), SquarefreeError);
      continue;
    }
    const auto prof = level_profile(n);
    std::uint64_t product = 1, numerator = prof.phi, denominator = 1;
    for (const auto p : prof.prime_factors) {
      product *= p;
      numerator *= p;
      denominator *= p - 1;
    }
    REQUIRE(product == n);
    REQUIRE(numerator == n * denominator);
  }
  // Against a direct count of units.
  for (std::uint64_t n : {30u, 77u, 210u, 2310u}) {
    std::uint64_t units = 0;
    for (std::uint64_t a = 1; a <= n; ++a) units += std::gcd(a, n) == 1;
    CHECK(level_profile(n).phi == units);
  }
}

TEST_CASE("level set membership") {
  CHECK(level_set_member(1, 2, 1.0));
  CHECK(level_set_member(1, 12, 1e9));
  CHECK_FALSE(level_set_member(4, 2, 1.0));
  CHECK(level_set_member(1'000'003, 2, 1.0));
  // P^-(6) = 2 is far below log(12) log log(12) * 5.
  CHECK_FALSE(level_set_member(6, 2, 5.0));
  CHECK_THROWS_AS(level_set_member(7, 3, 1.0), DomainError);
}

TEST_CASE("iterated logarithms") {
  CHECK(iterated_log(std::exp(1.0), 1) == doctest::Approx(1.0));
  CHECK(iterated_log(std::exp(std::exp(2.0)), 2) == doctest::Approx(2.0));
  CHECK_THROWS_AS(iterated_log(1.0, 2), DomainError);
}

TEST_CASE("analytic constants") {
  CHECK(euler_gamma() == doctest::Approx(0.57721566490153286).epsilon(1e-15));
  CHECK_THROWS_AS(euler_gamma(1e-25), PrecisionError);
  const double pi = 3.14159265358979323846;
  CHECK(zeta(2) == doctest::Approx(pi * pi / 6).epsilon(1e-14));
  CHECK(zeta(4) == doctest::Approx(pi * pi * pi * pi / 90).epsilon(1e-14));
  CHECK(static_cast<double>(zeta_minus_one(40)) == doctest::Approx(std::ldexp(1.0, -40)).epsilon(1e-9));
  // P(2) = 0.4522474200410654985...
  CHECK(static_cast<double>(prime_zeta(2)) == doctest::Approx(0.45224742004106550).epsilon(1e-14));
}

TEST_CASE("prime zeta tail matches the explicit head") {
  const auto table = primes_up_to(1000);
  for (double s : {2.0, 3.0, 4.5}) {
    long double head = 0;
    for (const auto p : table) head += std::pow(static_cast<long double>(p), -s);
    CHECK(static_cast<double>(head + prime_zeta_tail(s, table)) ==
          doctest::Approx(static_cast<double>(prime_zeta(s))).epsilon(1e-14));
  }
}

TEST_CASE("Mertens constant") {
  const double w0 = mertens_constant(1e-9);
  CHECK(w0 == doctest::Approx(0.261497213).epsilon(2e-9));
  const double loose = mertens_constant(1e-2);
  CHECK(loose >= 0.25);
  CHECK(loose <= 0.27);
  CHECK_THROWS_AS(mertens_constant(1e-14), PrecisionError);

  const auto table = primes_up_to(1'000'000);
  for (std::uint64_t t : {1000u, 10'000u, 100'000u, 1'000'000u}) {
    double sum = 0;
    for (const auto p : table.up_to(t)) sum += 1.0 / p;
    const double gap = sum - std::log(std::log(double(t))) - w0;
    CHECK(std::abs(gap) <= 1 / std::log(double(t)));
    if (t == 1'000'000) CHECK(std::abs(gap) <= 0.01);
  }
}

}  // TEST_SUITE
