#include "symlval/primes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "symlval/errors.hpp"

namespace symlval {

namespace {

constexpr std::uint64_t kSegmentThreshold = 10'000'000;
constexpr std::size_t kSegmentSize = 1 << 18;

// B_2, B_4, ..., B_24.
constexpr std::array<long double, 12> kBernoulli = {
    1.0L / 6,       -1.0L / 30,      1.0L / 42,         -1.0L / 30,
    5.0L / 66,      -691.0L / 2730,  7.0L / 6,          -3617.0L / 510,
    43867.0L / 798, -174611.0L / 330, 854513.0L / 138, -236364091.0L / 2730};
constexpr long double kBernoulli26 = 8553103.0L / 6;

std::vector<std::uint32_t> simple_sieve(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<std::uint32_t> segmented_sieve(std::uint64_t limit) {
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  const std::vector<std::uint32_t> small = simple_sieve(root);
  std::vector<std::uint32_t> primes;
  primes.reserve(static_cast<std::size_t>(1.1 * limit / std::log(static_cast<double>(limit))));
  std::vector<char> segment(kSegmentSize);
  for (std::uint64_t low = 0; low <= limit; low += kSegmentSize) {
    const std::uint64_t high = std::min<std::uint64_t>(low + kSegmentSize - 1, limit);
    std::fill(segment.begin(), segment.end(), 1);
    for (const std::uint64_t p : small) {
      if (p * p > high) break;
      std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
      for (std::uint64_t j = start; j <= high; j += p) segment[j - low] = 0;
    }
    for (std::uint64_t n = std::max<std::uint64_t>(low, 2); n <= high; ++n)
      if (segment[n - low]) primes.push_back(static_cast<std::uint32_t>(n));
  }
  return primes;
}

int mobius(int k) {
  int result = 1;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    k /= p;
    if (k % p == 0) return 0;
    result = -result;
  }
  return k > 1 ? -result : result;
}

}  // namespace

std::span<const std::uint32_t> PrimeTable::up_to(std::uint64_t bound) const {
  auto it = std::upper_bound(primes_.begin(), primes_.end(), bound);
  return {primes_.data(), static_cast<std::size_t>(it - primes_.begin())};
}

bool PrimeTable::contains(std::uint64_t n) const {
  return std::binary_search(primes_.begin(), primes_.end(), n);
}

PrimeTable primes_up_to(std::uint64_t limit) {
  if (limit < 2) throw DomainError("prime table limit must be at least 2");
  if (limit > std::numeric_limits<std::uint32_t>::max())
    throw DomainError("prime table limit exceeds 2^32 - 1");
  if (limit > kSegmentThreshold) return {limit, segmented_sieve(limit)};
  return {limit, simple_sieve(limit)};
}

bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return false;
  }
  return true;
}

LevelProfile level_profile(std::uint64_t n) {
  if (n == 0) throw DomainError("level must be positive");
  LevelProfile profile;
  profile.n = n;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    rest /= p;
    if (rest % p == 0) throw SquarefreeError(n);
    profile.prime_factors.push_back(p);
  }
  if (rest > 1) profile.prime_factors.push_back(rest);
  for (const auto p : profile.prime_factors) profile.phi *= p - 1;
  if (!profile.prime_factors.empty()) profile.least_prime = profile.prime_factors.front();
  return profile;
}

double iterated_log(double x, int depth) {
  for (int i = 0; i < depth; ++i) {
    if (!(x > 0)) throw DomainError("iterated logarithm leaves the positive reals");
    x = std::log(x);
  }
  return x;
}

bool level_set_member(std::uint64_t n, int k, double xi) {
  if (k < 2 || k % 2 != 0) throw DomainError("weight k must be an even integer >= 2");
  if (!is_squarefree(n)) return false;
  const LevelProfile profile = level_profile(n);
  if (profile.least_prime == LevelProfile::kNoPrimeFactor) return true;
  const double kn = static_cast<double>(k) * static_cast<double>(n);
  const double bound = xi * std::log(kn) * iterated_log(kn, 2);
  return static_cast<double>(profile.least_prime) >= bound;
}

double euler_gamma(double tol) {
  if (!(tol >= 1e-18)) throw PrecisionError("euler_gamma: tolerance below 1e-18 is not attainable");
  // Smallest n whose first omitted Euler-Maclaurin term is below tol.
  long double n = 2;
  while (kBernoulli26 / (26 * std::pow(n, 26.0L)) > tol) n += 1;
  long double harmonic = 0;
  for (long double j = n; j >= 1; j -= 1) harmonic += 1 / j;
  long double gamma = harmonic - std::log(n) - 1 / (2 * n);
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    const int two_k = 2 * static_cast<int>(k + 1);
    gamma += kBernoulli[k] / (two_k * std::pow(n, static_cast<long double>(two_k)));
  }
  return static_cast<double>(gamma);
}

long double zeta_minus_one(long double s) {
  if (!(s > 1)) throw DomainError("zeta: s must exceed 1");
  if (s >= 24) {
    long double sum = 0;
    for (long double n = 2;; n += 1) {
      const long double term = std::pow(n, -s);
      sum += term;
      if (term < 1e-24L * sum) break;
    }
    return sum;
  }
  constexpr int cut = 16;
  long double sum = 0;
  for (int n = cut - 1; n >= 2; --n) sum += std::pow(static_cast<long double>(n), -s);
  const long double big_n = cut;
  sum += std::pow(big_n, 1 - s) / (s - 1) + std::pow(big_n, -s) / 2;
  // Euler-Maclaurin correction: B_2k/(2k)! * s(s+1)...(s+2k-2) N^{-s-2k+1}.
  long double rising = s;
  long double factorial = 2;
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    const int two_k = 2 * static_cast<int>(k + 1);
    sum += kBernoulli[k] / factorial * rising * std::pow(big_n, -s - two_k + 1);
    rising *= (s + two_k - 1) * (s + two_k);
    factorial *= static_cast<long double>(two_k + 1) * (two_k + 2);
  }
  return sum;
}

double zeta(double s) { return static_cast<double>(1 + zeta_minus_one(s)); }

long double prime_zeta(double s) {
  if (!(s > 1)) throw DomainError("prime_zeta: s must exceed 1");
  long double sum = 0;
  for (int k = 1;; ++k) {
    const long double zm1 = zeta_minus_one(static_cast<long double>(k) * s);
    if (zm1 < 1e-22L) break;
    const int mu = mobius(k);
    if (mu != 0) sum += mu * std::log1p(zm1) / k;
  }
  return sum;
}

long double prime_zeta_tail(double s, const PrimeTable& table) {
  long double head = 0;
  const auto primes = table.primes();
  for (auto it = primes.rbegin(); it != primes.rend(); ++it)
    head += std::pow(static_cast<long double>(*it), -static_cast<long double>(s));
  return std::max<long double>(prime_zeta(s) - head, 0);
}

double mertens_constant(double tol) {
  if (!(tol >= 1e-12))
    throw PrecisionError("mertens_constant: tolerance below 1e-12 is not attainable in double");
  constexpr std::uint64_t cutoff = 100'000;
  const PrimeTable table = primes_up_to(cutoff);
  long double sum = 0;
  const auto primes = table.primes();
  for (auto it = primes.rbegin(); it != primes.rend(); ++it) {
    const long double x = 1.0L / *it;
    sum += std::log1p(-x) + x;
  }
  // sum_{p > y} [log(1 - 1/p) + 1/p] = -sum_{v >= 2} P_{>y}(v) / v
  // and P_{>y}(v) <= y^{1-v}/(v-1).
  long double tail = 0;
  const long double y = static_cast<long double>(cutoff);
  for (int v = 2;; ++v) {
    if (std::pow(y, 1.0L - v) / ((v - 1) * v) < 0.01L * tol) break;
    tail -= prime_zeta_tail(v, table) / v;
  }
  return euler_gamma(0.01 * tol) + static_cast<double>(sum + tail);
}

}  // namespace symlval
