#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "symlval/constants.hpp"
#include "symlval/errors.hpp"
#include "symlval/moments.hpp"
#include "symlval/montecarlo.hpp"
#include "symlval/parallel.hpp"
#include "symlval/symrep.hpp"

using namespace symlval;

namespace {

constexpr double kPi = std::numbers::pi;

struct ThreadGuard {
  ~ThreadGuard() { set_thread_count(1); }
};

}  // namespace

TEST_SUITE("montecarlo") {

TEST_CASE("counter streams are pure functions of key and position") {
  CounterStream a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    const auto va = a.next_u64();
    CHECK(va == b.next_u64());
    CHECK(va != c.next_u64());
  }
  CounterStream u(7);
  for (int i = 0; i < 10'000; ++i) {
    const double x = u.next_uniform();
    REQUIRE(x >= 0.0);
    REQUIRE(x < 1.0);
  }
  CHECK(substream(1, 2, 3).next_u64() == substream(1, 2, 3).next_u64());
  CHECK(substream(1, 2, 3).next_u64() != substream(1, 3, 2).next_u64());
}

TEST_CASE("angle sampler follows the Sato-Tate law") {
  const int n = 200'000;
  double mean1 = 0, mean2 = 0, below_half = 0;
  for (int i = 0; i < n; ++i) {
    auto s = substream(5, i, 0);
    const double theta = sample_angle(s);
    REQUIRE(theta >= 0);
    REQUIRE(theta <= kPi);
    mean1 += sym_trace(1, theta);
    mean2 += sym_trace(2, theta);
    below_half += theta <= kPi / 2;
  }
  mean1 /= n;
  mean2 /= n;
  below_half /= n;
  CHECK(std::abs(mean1) <= 4 / std::sqrt(double(n)));
  // sd of U_2 under the measure is 1.
  CHECK(std::abs(mean2) <= 4 / std::sqrt(double(n)));
  CHECK(std::abs(below_half - 0.5) <= 4 / (2 * std::sqrt(double(n))));
}

TEST_CASE("cosine sampler matches the angle sampler in distribution") {
  // Kolmogorov distance of cos(theta) against F(u) = 1 - F_ST(arccos u).
  const int n = 100'000;
  std::vector<double> draws;
  for (int i = 0; i < n; ++i) {
    auto s = substream(11, i, 3);
    const double c = sample_cosine(s);
    REQUIRE(c > -1);
    REQUIRE(c < 1);
    draws.push_back(c);
  }
  std::sort(draws.begin(), draws.end());
  double dist = 0;
  for (int i = 0; i < n; ++i) {
    const double f = 1 - sato_tate_cdf(std::acos(draws[i]));
    dist = std::max({dist, std::abs(f - double(i) / n), std::abs(f - double(i + 1) / n)});
  }
  // 99.9% Kolmogorov quantile is about 1.95/sqrt(n).
  CHECK(dist <= 1.95 / std::sqrt(double(n)));
}

TEST_CASE("random log value is the sum of local factors over the drawn angles") {
  const std::uint64_t cutoff = 2000, seed = 77;
  const auto table = primes_up_to(cutoff);
  const RandomEulerProduct model(cutoff, seed);
  for (std::uint64_t sample : {0u, 1u, 12345u}) {
    double expected[4] = {};
    for (std::size_t i = 0; i < table.size(); ++i) {
      auto s = substream(seed, sample, i);
      const double theta = std::acos(sample_cosine(s));
      for (int m = 1; m <= 4; ++m) expected[m - 1] += local_factor_log(m, theta, 1.0 / table[i]);
    }
    const auto got = model.log_values(sample);
    for (int m = 1; m <= 4; ++m) {
      CHECK(got[m - 1] == doctest::Approx(expected[m - 1]).epsilon(1e-11));
      CHECK(random_log_value(m, cutoff, seed, sample) == got[m - 1]);
    }
  }
}

TEST_CASE("random log values respect the extremal bounds") {
  const std::uint64_t cutoff = 1000;
  const auto table = primes_up_to(cutoff);
  const RandomEulerProduct model(cutoff, 3);
  for (int m = 1; m <= 4; ++m) {
    double upper = 0, lower = 0;
    for (const auto p : table) {
      upper += -(m + 1) * std::log1p(-1.0 / p);
      lower += local_factor_log(m, extremal_angle(m, p, Sign::kMinus), 1.0 / p);
    }
    for (std::uint64_t s = 0; s < 500; ++s) {
      const double v = model.log_value(m, s);
      REQUIRE(v <= upper + 1e-9);
      REQUIRE(v >= lower - 1e-9);
    }
  }
}

TEST_CASE("configuration validation") {
  SimulationConfig c;
  CHECK_NOTHROW(c.validate());
  c.samples = 0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c.samples = 10;
  c.prime_cutoff = 50;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c.prime_cutoff = 100;
  c.m = 5;
  CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("empirical moments") {
  SimulationConfig config;
  config.samples = 100'000;
  config.prime_cutoff = 1000;
  config.seed = 9;
  const auto zero = empirical_moment(2, 0.0, config);
  CHECK(zero.mean == 1.0);
  CHECK(zero.std_error == 0.0);
  CHECK_THROWS_AS(empirical_moment(1, 5.5, config), DomainError);

  const std::vector<double> zs = {-1, 1, 2};
  const auto est = empirical_moments(zs, config);
  const auto table = primes_up_to(config.prime_cutoff);
  int misses = 0;
  for (int m = 1; m <= 4; ++m)
    for (std::size_t j = 0; j < zs.size(); ++j) {
      double s = 0;
      for (const auto p : table) s += local_moment_log(m, zs[j], p);
      const auto& e = est[m - 1][j];
      CHECK(e.std_error > 0);
      // Allow one of twelve cells past 3 SE.
      misses += std::abs(e.mean - std::exp(s)) > 3 * e.std_error;
      CHECK(std::abs(e.mean - std::exp(s)) <= 5 * e.std_error);
    }
  CHECK(misses <= 1);
  CHECK(empirical_moment(3, 2.0, config).mean == est[2][2].mean);
}

TEST_CASE("results do not depend on the thread count") {
  ThreadGuard guard;
  SimulationConfig config;
  config.samples = 20'000;
  config.prime_cutoff = 500;
  config.seed = 31;
  const std::vector<double> zs = {-1.5, 0.5, 3};
  const std::vector<double> ts = {1, 1.5, 2};
  set_thread_count(1);
  const auto one = empirical_moments(zs, config);
  const auto tails_one = tail_distributions(ts, config, standard_tail_law(1, Sign::kPlus),
                                            standard_tail_law(1, Sign::kMinus));
  for (unsigned n : {2u, 5u}) {
    set_thread_count(n);
    const auto many = empirical_moments(zs, config);
    for (int m = 0; m < 4; ++m)
      for (std::size_t j = 0; j < zs.size(); ++j) {
        CHECK(many[m][j].mean == one[m][j].mean);
        CHECK(many[m][j].std_error == one[m][j].std_error);
      }
    const auto tails = tail_distributions(ts, config, standard_tail_law(1, Sign::kPlus),
                                          standard_tail_law(1, Sign::kMinus));
    for (std::size_t j = 0; j < ts.size(); ++j) {
      CHECK(tails.plus[j].hits == tails_one.plus[j].hits);
      CHECK(tails.minus[j].hits == tails_one.minus[j].hits);
    }
  }
}

TEST_CASE("theorem 3 prediction") {
  CHECK(theorem3_prediction(2.0, 2.0) == doctest::Approx(std::exp(-0.5)));
  CHECK(theorem3_prediction(0.75, 0.75) == doctest::Approx(std::exp(-1 / 0.75)));
  CHECK_THROWS_AS(theorem3_prediction(1.0, 0.0), DomainError);
  const double a = standard_script_constants(2, Sign::kPlus).script_A;
  double prev = 1;
  for (double t = 1.05; t < 4; t += 0.1) {
    const double v = theorem3_prediction(2, Sign::kPlus, t);
    CHECK(v > 0);
    CHECK(v < prev);
    prev = v;
    // d log(-log F)/dt = 1 - 1/t.
    const double h = 1e-5;
    const double slope = (std::log(-std::log(theorem3_prediction(a, t + h))) -
                          std::log(-std::log(theorem3_prediction(a, t - h)))) / (2 * h);
    CHECK(slope == doctest::Approx(1 - 1 / t).epsilon(1e-6));
  }
}

TEST_CASE("tail tables") {
  SimulationConfig config;
  config.samples = 50'000;
  config.prime_cutoff = 1000;
  config.seed = 4;
  const std::vector<double> ts = {1.0, 1.2, 1.5, 2.0, 3.0, 6.0};
  const auto plus = tail_distribution(1, Sign::kPlus, ts, config);
  REQUIRE(plus.size() == ts.size());
  for (std::size_t j = 0; j < ts.size(); ++j) {
    const auto& row = plus[j];
    CHECK(row.t == ts[j]);
    CHECK(row.predicted_prob == theorem3_prediction(1, Sign::kPlus, ts[j]));
    CHECK(row.empirical_prob == double(row.hits) / config.samples);
    CHECK(row.std_error ==
          doctest::Approx(std::sqrt(row.empirical_prob * (1 - row.empirical_prob) / config.samples)));
    if (j) CHECK(row.empirical_prob <= plus[j - 1].empirical_prob);
  }
  CHECK(plus.back().zero_hits);
  CHECK(plus.back().std_error == 0.0);

  const auto minus = tail_distribution(1, Sign::kMinus, ts, config);
  for (std::size_t j = 1; j < ts.size(); ++j)
    CHECK(minus[j].empirical_prob <= minus[j - 1].empirical_prob);

  // B_1^- t must exceed 1.
  const std::vector<double> low = {0.5};
  CHECK_THROWS_AS(tail_distribution(1, Sign::kMinus, low, config), DomainError);
}

}  // TEST_SUITE
