#include <doctest.h>

#include <cmath>
#include <numbers>

#include "symlval/constants.hpp"
#include "symlval/errors.hpp"
#include "symlval/moments.hpp"
#include "symlval/symrep.hpp"

using namespace symlval;

namespace {

constexpr double kPi = std::numbers::pi;

// sum_v d_z(p^v) [m v even] p^{-v(1 + m/2)}, summed term by term.
double ramified_series_brute(int m, double z, std::uint64_t p) {
  const double y = std::pow(double(p), -(1.0 + 0.5 * m));
  double sum = 0, yv = 1;
  for (int v = 0; v < 200; ++v, yv *= y)
    if ((m * v) % 2 == 0) sum += dz(z, v).real() * yv;
  return std::log(sum);
}

}  // namespace

TEST_SUITE("moments") {

TEST_CASE("local moments") {
  for (int m = 1; m <= 4; ++m) CHECK(local_moment_log(m, 0.0, 7) == 0.0);
  for (std::uint64_t p : {2u, 3u, 97u, 10007u}) {
    CHECK(std::abs(local_moment_log(1, 1.0, p)) <= 1e-13);
    const double x = 1.0 / p;
    CHECK(local_moment_log(1, -1.0, p) == doctest::Approx(std::log1p(x * x)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(local_moment_log(1, 1.0, 1), DomainError);
  CHECK_THROWS_AS(local_moment_log(6, 1.0, 3), DomainError);
}

TEST_CASE("large exponents stay finite") {
  // D(1/2, .)^400 overflows a double; the shifted integral does not.
  const double v = local_moment_log(4, 400.0, 2);
  CHECK(std::isfinite(v));
  CHECK(v <= 400 * -5 * std::log(0.5));
  CHECK(v > 400 * -5 * std::log(0.5) - 50);
}

TEST_CASE("closed-form moments") {
  const auto minus = moment(1, -1.0);
  CHECK(minus.log_value.real() == doctest::Approx(std::log(15 / (kPi * kPi))).epsilon(1e-9));
  CHECK(minus.log_value.imag() == 0.0);
  CHECK_FALSE(minus.precision_warning);
  CHECK(minus.tail_bound >= 0);
  CHECK(std::abs(moment(1, 1.0).log_value) <= 1e-8);
  const auto zero = moment(3, 0.0);
  CHECK(zero.log_value == Complex(0));
}

TEST_CASE("moment preconditions") {
  CHECK_THROWS_AS(moment(1, 1.0, 999), DomainError);
  CHECK_THROWS_AS(moment(1, Complex(1, 11), 1000), DomainError);
}

TEST_CASE("conjugate z gives the conjugate log moment") {
  for (int m = 1; m <= 4; ++m) {
    const Complex z(0.7, 1.3);
    const auto a = moment(m, z, 2000);
    const auto b = moment(m, std::conj(z), 2000);
    CHECK(std::abs(a.log_value - std::conj(b.log_value)) <= 1e-10);
    // Real z through the complex entry point.
    const auto real = moment(m, Complex(1.5, 0), 2000);
    CHECK(real.log_value.imag() == 0.0);
    CHECK(real.log_value.real() == doctest::Approx(moment(m, 1.5, 2000).log_value.real()));
  }
}

TEST_CASE("log moments are convex in r") {
  for (int m = 1; m <= 4; ++m) {
    std::vector<double> values;
    for (int r = 1; r <= 50; ++r) values.push_back(moment(m, double(r), 1000).log_value.real());
    for (std::size_t i = 1; i + 1 < values.size(); ++i)
      REQUIRE(values[i + 1] - 2 * values[i] + values[i - 1] >= -1e-8);
  }
}

TEST_CASE("tail correction tracks a larger cutoff") {
  // The p > y completion should predict what the extra primes contribute.
  for (int m = 1; m <= 4; ++m)
    for (double z : {-1.0, 2.0}) {
      const auto coarse = moment(m, z, 1000);
      const auto fine = moment(m, z, 20'000);
      CHECK(std::abs(coarse.log_value - fine.log_value) <= 1e-8);
    }
}

TEST_CASE("ramified series") {
  for (int m = 1; m <= 4; ++m)
    for (double z : {-2.0, 0.5, 3.0})
      for (std::uint64_t p : {2u, 3u, 11u})
        CHECK(ramified_series_log(m, z, p) ==
              doctest::Approx(ramified_series_brute(m, z, p)).epsilon(1e-13));
}

TEST_CASE("level factor") {
  CHECK(level_factor_log(2, 5.0, 1) == 0.0);
  CHECK(level_factor_log(2, 0.0, 30) == 0.0);
  // m = 2, z = 1, N = 3: log (1 - 3^-2)^-1 - local_moment_log(2, 1, 3).
  const double closed = -std::log1p(-1.0 / 9) - local_moment_log(2, 1.0, 3);
  CHECK(level_factor_log(2, 1.0, 3) == doctest::Approx(closed).epsilon(1e-14));
  CHECK(std::abs(level_factor_log(2, 1.0, 3)) <= 1e-12);
  // Quadrature oracle at 30 digits.
  CHECK(level_factor_log(2, 10.0, 101) == doctest::Approx(-0.00452783679167454724).epsilon(1e-10));
  // Multiplicative over the prime factors of N.
  CHECK(level_factor_log(3, -2.0, 35) ==
        doctest::Approx(level_factor_log(3, -2.0, 5) + level_factor_log(3, -2.0, 7)).epsilon(1e-13));
  CHECK_THROWS_AS(level_factor_log(1, 1.0, 12), SquarefreeError);
}

TEST_CASE("level correction in the r << N regime") {
  CHECK(level_correction_check(2, Sign::kPlus, 10, 1) == 0.0);
  // The per-prime correction is O(r^2/p^2) while r < p, so with N = 10007
  // the normalized value stays tiny across the whole sweep.
  double prev = 0;
  for (double r : {25.0, 50.0, 100.0, 200.0, 400.0, 800.0}) {
    const double v = level_correction_check(2, Sign::kPlus, r, 10007);
    CHECK(std::abs(v) <= 1e-2);
    if (prev != 0) CHECK(std::abs(v) <= 4 * std::abs(prev));
    prev = v;
  }
  // Once r passes p the correction is linear in r and the normalization
  // (log r)^3 / r no longer keeps it bounded.
  CHECK(std::abs(level_correction_check(2, Sign::kPlus, 800, 101)) >
        std::abs(level_correction_check(2, Sign::kPlus, 200, 101)));
  CHECK_THROWS_AS(level_correction_check(2, Sign::kPlus, 0.5, 7), DomainError);
}

TEST_CASE("h functions") {
  for (int m = 1; m <= 4; ++m)
    for (const Sign s : {Sign::kPlus, Sign::kMinus}) CHECK(h_function(m, s, 0.0) == 0.0);
  // m = 1: E[exp(t cos theta)] = 2 I_1(t)/t (Bessel oracle at 30 digits).
  CHECK(h_function(1, Sign::kPlus, 0.5) == doctest::Approx(0.0310889140945561543).epsilon(1e-13));
  CHECK(h_function(1, Sign::kPlus, 2.0) == doctest::Approx(-1.53586552645384026).epsilon(1e-13));
  CHECK(h_function(1, Sign::kPlus, 50.0) == doctest::Approx(-6.10140220828107423).epsilon(1e-12));
  // m = 1 is symmetric under theta -> pi - theta.
  for (double t : {0.1, 1.0, 7.0, 120.0})
    CHECK(h_function(1, Sign::kMinus, t) == doctest::Approx(h_function(1, Sign::kPlus, t)).epsilon(1e-13));
  for (int m = 1; m <= 4; ++m)
    for (double t = 0.05; t <= 1.0; t += 0.05)
      CHECK(std::abs(h_function(m, Sign::kMinus, t)) / (t * t) <= 1.0);
  CHECK_THROWS_AS(h_function(1, Sign::kPlus, -1.0), DomainError);
}

TEST_CASE("h+ approaches the Laplace regime") {
  // h + (3/2) log t = c0 + c1/t + ..., so the raw Cauchy gap on [300, 500]
  // is about c1 * 1.3e-3. Removing the 1/t term leaves agreement to 1e-5.
  const auto g = [](int m, double t) { return h_function(m, Sign::kPlus, t) + 1.5 * std::log(t); };
  const auto extrapolate = [&](int m, double t0, double t1) {
    return (t1 * g(m, t1) - t0 * g(m, t0)) / (t1 - t0);
  };
  for (int m = 1; m <= 4; ++m) {
    CHECK(std::abs(g(m, 300) - g(m, 500)) <= 2e-3);
    CHECK(extrapolate(m, 300, 500) == doctest::Approx(extrapolate(m, 600, 1000)).epsilon(1e-5));
  }
}

TEST_CASE("script constants") {
  const auto& s1 = standard_script_constants(1, Sign::kPlus);
  // Bessel-function oracle: 1 + int h/t^2 and int h log t/t^2 with
  // h(t) = log(2 I_1(t)/t) - t [t >= 1], evaluated at 30 digits.
  CHECK(s1.script_A == doctest::Approx(-0.891585444580307767).epsilon(1e-9));
  CHECK(s1.script_B == doctest::Approx(-3.478647311804199319).epsilon(1e-9));
  CHECK(s1.tail_fit_residual <= 1e-8);
  CHECK_FALSE(s1.script_D.has_value());

  for (int m = 1; m <= 4; ++m) {
    const auto& minus = standard_script_constants(m, Sign::kMinus);
    REQUIRE(minus.script_D.has_value());
    REQUIRE(minus.script_K.has_value());
    const double shift = std::log((m + 1) / a_const(m, Sign::kMinus));
    CHECK(minus.script_A - *minus.script_D == doctest::Approx(shift).epsilon(1e-12));
    CHECK(minus.script_B - *minus.script_K == doctest::Approx(-0.5 * shift * shift).epsilon(1e-12));
    if (m % 2 == 1) CHECK(minus.script_A == *minus.script_D);
  }
  const auto& m1 = standard_script_constants(1, Sign::kMinus);
  CHECK(m1.script_A == doctest::Approx(s1.script_A).epsilon(1e-10));
  CHECK(m1.script_B == doctest::Approx(s1.script_B).epsilon(1e-10));
  // Independent mpmath quadrature for m = 2.
  CHECK(standard_script_constants(2, Sign::kPlus).script_B ==
        doctest::Approx(-3.90905).epsilon(1e-5));
  CHECK_THROWS_AS(script_constants(1, Sign::kPlus, 1e-9), PrecisionError);
}

TEST_CASE("asymptotic formula") {
  const AsymptoticInputs in = standard_asymptotic_inputs(2, Sign::kPlus);
  // A r = e^e gives r ~ 5.05, below the r >= 8 guard.
  CHECK_THROWS_AS(log_moment_asymptotic(in, std::exp(std::exp(1.0)) / 3, 1), DomainError);
  const double r = 50;
  CHECK(log_moment_asymptotic(in, r, 1) ==
        doctest::Approx(3 * r * std::log(in.B * std::log(3 * r))).epsilon(1e-14));
  const double r2 = 100;
  const double l = std::log(3 * r2);
  CHECK(log_moment_asymptotic(in, r2, 2) - log_moment_asymptotic(in, r2, 1) ==
        doctest::Approx(3 * r2 / l * (in.script_A - 1)).epsilon(1e-12));
  CHECK(log_moment_asymptotic(in, r2, 3) - log_moment_asymptotic(in, r2, 2) ==
        doctest::Approx(3 * r2 / (l * l) * in.script_B).epsilon(1e-12));
  CHECK_THROWS_AS(log_moment_asymptotic(in, 4, 1), DomainError);
  CHECK_THROWS_AS(log_moment_asymptotic(in, 50, 4), DomainError);
}

TEST_CASE("higher orders track the direct moment") {
  const AsymptoticInputs in = standard_asymptotic_inputs(1, Sign::kPlus);
  for (double r : {50.0, 200.0}) {
    const double direct = moment(1, r).log_value.real();
    const double e1 = std::abs(log_moment_asymptotic(in, r, 1) - direct);
    const double e3 = std::abs(log_moment_asymptotic(in, r, 3) - direct);
    CHECK(e3 <= e1);
  }
}

}  // TEST_SUITE
