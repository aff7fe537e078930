#include "symlval/montecarlo.hpp"

#include <cmath>
#include <limits>

#include "symlval/errors.hpp"
#include "symlval/moments.hpp"
#include "symlval/parallel.hpp"
#include "symlval/symrep.hpp"

namespace symlval {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr std::size_t kChunkSamples = 4096;
constexpr std::size_t kRenormalizeEvery = 128;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t sample_key(std::uint64_t seed, std::uint64_t sample) {
  return mix64(mix64(seed + kGolden) + sample * 0xd1b54a32d192ed03ULL);
}

std::size_t chunk_count(std::uint64_t samples) {
  return static_cast<std::size_t>((samples + kChunkSamples - 1) / kChunkSamples);
}

}  // namespace

void SimulationConfig::validate() const {
  check_order(m);
  if (samples < 1) throw DomainError("simulation needs at least one sample");
  if (prime_cutoff < 100) throw DomainError("simulation prime cutoff must be at least 100");
}

std::uint64_t CounterStream::next_u64() { return mix64(key_ + (++counter_) * kGolden); }

double CounterStream::next_uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

CounterStream substream(std::uint64_t seed, std::uint64_t sample, std::uint64_t prime_index) {
  return CounterStream(mix64(sample_key(seed, sample) + prime_index * 0x8cb92ba72f3d8dd7ULL));
}

double sample_angle(CounterStream& stream) {
  return sato_tate_inverse_cdf(stream.next_uniform());
}

double sample_cosine(CounterStream& stream) {
  for (;;) {
    const double u = 2 * stream.next_uniform() - 1;
    const double v = 2 * stream.next_uniform() - 1;
    if (u * u + v * v < 1) return u;
  }
}

RandomEulerProduct::RandomEulerProduct(std::uint64_t prime_cutoff, std::uint64_t seed)
    : table_(primes_up_to(prime_cutoff)), seed_(seed) {
  inverse_primes_.reserve(table_.size());
  for (const auto p : table_) inverse_primes_.push_back(1.0 / p);
}

std::array<double, 4> RandomEulerProduct::log_values(std::uint64_t sample) const {
  // Products of the paired factors 1 - 2x T_k(c) + x^2 (and 1 - x for even
  // m); the logarithm is taken every kRenormalizeEvery primes.
  std::array<double, 4> logs{};
  std::array<double, 4> prod{1, 1, 1, 1};
  const std::uint64_t key = sample_key(seed_, sample);
  for (std::size_t i = 0; i < inverse_primes_.size(); ++i) {
    CounterStream stream(mix64(key + i * 0x8cb92ba72f3d8dd7ULL));
    const double c = sample_cosine(stream);
    const double x = inverse_primes_[i];
    const double c2 = 2 * c * c - 1;
    const double c3 = (4 * c * c - 3) * c;
    const double c4 = 2 * c2 * c2 - 1;
    const double x2 = x * x;
    const double q1 = 1 - 2 * x * c + x2;
    const double q2 = 1 - 2 * x * c2 + x2;
    const double q3 = 1 - 2 * x * c3 + x2;
    const double q4 = 1 - 2 * x * c4 + x2;
    const double q0 = 1 - x;
    prod[0] *= q1;
    prod[1] *= q2 * q0;
    prod[2] *= q3 * q1;
    prod[3] *= q4 * q2 * q0;
    if ((i + 1) % kRenormalizeEvery == 0) {
      for (int k = 0; k < 4; ++k) {
        logs[k] -= std::log(prod[k]);
        prod[k] = 1;
      }
    }
  }
  for (int k = 0; k < 4; ++k) logs[k] -= std::log(prod[k]);
  return logs;
}

double random_log_value(int m, std::uint64_t prime_cutoff, std::uint64_t seed,
                        std::uint64_t sample) {
  check_order(m);
  return RandomEulerProduct(prime_cutoff, seed).log_value(m, sample);
}

std::vector<std::vector<MomentEstimate>> empirical_moments(std::span<const double> zs,
                                                           const SimulationConfig& config) {
  config.validate();
  for (const double z : zs)
    if (!(std::abs(z) <= 5)) throw DomainError("empirical moments require |z| <= 5");
  const RandomEulerProduct model(config.prime_cutoff, config.seed);
  const std::size_t nz = zs.size();
  const std::size_t chunks = chunk_count(config.samples);
  // Per chunk: [m][z] first and second power sums.
  std::vector<std::vector<double>> first(chunks, std::vector<double>(4 * nz));
  std::vector<std::vector<double>> second(chunks, std::vector<double>(4 * nz));
  parallel_for(chunks, [&](std::size_t c) {
    const std::uint64_t begin = c * kChunkSamples;
    const std::uint64_t end = std::min<std::uint64_t>(config.samples, begin + kChunkSamples);
    for (std::uint64_t s = begin; s < end; ++s) {
      const auto logs = model.log_values(s);
      for (int m = 0; m < 4; ++m)
        for (std::size_t j = 0; j < nz; ++j) {
          const double v = std::exp(zs[j] * logs[m]);
          first[c][m * nz + j] += v;
          second[c][m * nz + j] += v * v;
        }
    }
  });

  const double n = static_cast<double>(config.samples);
  std::vector<std::vector<MomentEstimate>> out(4, std::vector<MomentEstimate>(nz));
  std::vector<double> column(chunks);
  for (std::size_t idx = 0; idx < 4 * nz; ++idx) {
    for (std::size_t c = 0; c < chunks; ++c) column[c] = first[c][idx];
    const double s1 = pairwise_sum(column);
    for (std::size_t c = 0; c < chunks; ++c) column[c] = second[c][idx];
    const double s2 = pairwise_sum(column);
    MomentEstimate& e = out[idx / nz][idx % nz];
    if (zs[idx % nz] == 0.0) {
      e = {1.0, 0.0};
      continue;
    }
    e.mean = s1 / n;
    const double var = config.samples > 1 ? std::max(0.0, (s2 - n * e.mean * e.mean) / (n - 1)) : 0.0;
    e.std_error = std::sqrt(var / n);
    if (!std::isfinite(e.mean) || !std::isfinite(e.std_error))
      throw InstabilityError("empirical moment statistics are not finite");
  }
  return out;
}

MomentEstimate empirical_moment(int m, double z, const SimulationConfig& config) {
  config.validate();
  const double zs[] = {z};
  return empirical_moments(zs, config)[m - 1][0];
}

TailLaw standard_tail_law(int m, Sign sign) {
  return {a_const(m, sign), standard_constants(m, sign).B,
          standard_script_constants(m, sign).script_A};
}

double theorem3_prediction(double script_A, double t) {
  if (!(t > 0)) throw DomainError("tail prediction requires t > 0");
  return std::exp(-std::exp(t - script_A) / t);
}

double theorem3_prediction(int m, Sign sign, double t) {
  return theorem3_prediction(standard_script_constants(m, sign).script_A, t);
}

TailTables tail_distributions(std::span<const double> t_grid, const SimulationConfig& config,
                              const std::optional<TailLaw>& plus,
                              const std::optional<TailLaw>& minus) {
  config.validate();
  const std::size_t nt = t_grid.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // Disabled signs get thresholds no finite value can cross.
  std::vector<double> upper(nt, kInf), lower(nt, -kInf);
  for (std::size_t j = 0; j < nt; ++j) {
    const double t = t_grid[j];
    for (const auto* law : {&plus, &minus})
      if (*law && !((*law)->B * t > 1))
        throw DomainError("tail threshold requires B t > 1 for t = " + std::to_string(t));
    if (plus) upper[j] = plus->A * std::log(plus->B * t);
    if (minus) lower[j] = -minus->A * std::log(minus->B * t);
  }
  const RandomEulerProduct model(config.prime_cutoff, config.seed);
  const std::size_t chunks = chunk_count(config.samples);
  std::vector<std::vector<std::uint64_t>> counts(chunks, std::vector<std::uint64_t>(2 * nt));
  parallel_for(chunks, [&](std::size_t c) {
    const std::uint64_t begin = c * kChunkSamples;
    const std::uint64_t end = std::min<std::uint64_t>(config.samples, begin + kChunkSamples);
    for (std::uint64_t s = begin; s < end; ++s) {
      const double value = model.log_value(config.m, s);
      for (std::size_t j = 0; j < nt; ++j) {
        counts[c][j] += value >= upper[j];
        counts[c][nt + j] += value <= lower[j];
      }
    }
  });

  const double n = static_cast<double>(config.samples);
  auto build = [&](std::size_t offset, const std::optional<TailLaw>& law) {
    std::vector<TailEstimate> rows;
    if (!law) return rows;
    rows.resize(nt);
    for (std::size_t j = 0; j < nt; ++j) {
      std::uint64_t hits = 0;
      for (std::size_t c = 0; c < chunks; ++c) hits += counts[c][offset + j];
      TailEstimate& row = rows[j];
      row.t = t_grid[j];
      row.hits = hits;
      row.empirical_prob = static_cast<double>(hits) / n;
      row.std_error = std::sqrt(row.empirical_prob * (1 - row.empirical_prob) / n);
      row.predicted_prob = theorem3_prediction(law->script_A, row.t);
      row.zero_hits = hits == 0;
    }
    return rows;
  };
  return {build(0, plus), build(nt, minus)};
}

std::vector<TailEstimate> tail_distribution(int m, Sign sign, std::span<const double> t_grid,
                                            const SimulationConfig& config) {
  SimulationConfig cfg = config;
  cfg.m = m;
  cfg.sign = sign;
  const TailLaw law = standard_tail_law(m, sign);
  if (sign == Sign::kPlus) return tail_distributions(t_grid, cfg, law, std::nullopt).plus;
  return tail_distributions(t_grid, cfg, std::nullopt, law).minus;
}

}  // namespace symlval
