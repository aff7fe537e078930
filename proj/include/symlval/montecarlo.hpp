#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "symlval/constants.hpp"
#include "symlval/primes.hpp"

namespace symlval {

inline constexpr std::uint64_t kDefaultSimulationCutoff = 10'000;

struct SimulationConfig {
  int m = 1;
  std::uint64_t prime_cutoff = kDefaultSimulationCutoff;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 0;
  Sign sign = Sign::kPlus;

  // Throws DomainError unless samples >= 1, prime_cutoff >= 100, 1 <= m <= 4.
  void validate() const;
};

// Counter-based uniform stream: the n-th draw is a pure function of
// (key, n), so any (sample, prime) substream can be regenerated on demand.
class CounterStream {
 public:
  explicit CounterStream(std::uint64_t key) : key_(key) {}
  std::uint64_t next_u64();
  // Uniform on [0, 1) with 53 random bits.
  double next_uniform();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Stream for prime number `prime_index` of sample `sample`.
CounterStream substream(std::uint64_t seed, std::uint64_t sample, std::uint64_t prime_index);

// Sato-Tate angle by inverting the distribution function.
double sample_angle(CounterStream& stream);

// cos(theta) for a Sato-Tate angle theta: the semicircle law, drawn as the
// abscissa of a uniform point in the unit disk (rejection from the square).
double sample_cosine(CounterStream& stream);

// The random Euler product sum_{p <= y} log D(1/p, sym^m[g(theta_p)]) with
// i.i.d. Sato-Tate angles. One set of angles per sample index is shared by
// all orders m = 1..4.
class RandomEulerProduct {
 public:
  RandomEulerProduct(std::uint64_t prime_cutoff, std::uint64_t seed);

  std::array<double, 4> log_values(std::uint64_t sample) const;
  double log_value(int m, std::uint64_t sample) const { return log_values(sample)[m - 1]; }

  const PrimeTable& primes() const { return table_; }
  std::uint64_t seed() const { return seed_; }

 private:
  PrimeTable table_;
  std::vector<double> inverse_primes_;
  std::uint64_t seed_;
};

double random_log_value(int m, std::uint64_t prime_cutoff, std::uint64_t seed,
                        std::uint64_t sample);

struct MomentEstimate {
  double mean = 0;
  double std_error = 0;
};

// Sample mean of exp(z L) with its standard error. |z| <= 5.
MomentEstimate empirical_moment(int m, double z, const SimulationConfig& config);

// All orders m = 1..4 against every z in one simulation pass; result[m-1][i]
// belongs to zs[i]. config.m is ignored.
std::vector<std::vector<MomentEstimate>> empirical_moments(std::span<const double> zs,
                                                           const SimulationConfig& config);

struct TailEstimate {
  double t = 0;
  double empirical_prob = 0;
  double std_error = 0;
  double predicted_prob = 0;
  std::uint64_t hits = 0;
  // No sample crossed the threshold; std_error is then 0 and the one-sided
  // 95% bound is 3/samples.
  bool zero_hits = false;
};

// Constants entering the tail events and the limiting law.
struct TailLaw {
  double A;
  double B;
  double script_A;
};

TailLaw standard_tail_law(int m, Sign sign);

// exp(-e^{t - script_A}/t). Throws DomainError for t <= 0.
double theorem3_prediction(double script_A, double t);
double theorem3_prediction(int m, Sign sign, double t);

struct TailTables {
  std::vector<TailEstimate> plus;
  std::vector<TailEstimate> minus;
};

// Both signs from one simulation pass:
//   sign +: fraction with L >= A+ log(B+ t)
//   sign -: fraction with L <= -A- log(B- t)
// A sign passed as nullopt is skipped and its table left empty.
TailTables tail_distributions(std::span<const double> t_grid, const SimulationConfig& config,
                              const std::optional<TailLaw>& plus,
                              const std::optional<TailLaw>& minus);

// One sign, standard constants. Requires B t > 1 for every t.
std::vector<TailEstimate> tail_distribution(int m, Sign sign, std::span<const double> t_grid,
                                            const SimulationConfig& config);

}  // namespace symlval
