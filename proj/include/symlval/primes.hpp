#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace symlval {

// All primes up to `limit`, in increasing order.
class PrimeTable {
 public:
  PrimeTable() = default;
  PrimeTable(std::uint64_t limit, std::vector<std::uint32_t> primes)
      : limit_(limit), primes_(std::move(primes)) {}

  std::uint64_t limit() const { return limit_; }
  std::span<const std::uint32_t> primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  std::uint32_t operator[](std::size_t i) const { return primes_[i]; }
  auto begin() const { return primes_.begin(); }
  auto end() const { return primes_.end(); }

  // Primes p <= bound (bound may be below limit()).
  std::span<const std::uint32_t> up_to(std::uint64_t bound) const;
  bool contains(std::uint64_t n) const;

 private:
  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> primes_;
};

// Sieve of Eratosthenes; limits above 10^7 go through a segmented sieve.
// Throws DomainError for limit < 2 or limit >= 2^32.
PrimeTable primes_up_to(std::uint64_t limit);

// Squarefree level N with its factorization.
struct LevelProfile {
  static constexpr std::uint64_t kNoPrimeFactor =
      std::numeric_limits<std::uint64_t>::max();

  std::uint64_t n = 1;
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t phi = 1;
  // Least prime factor; kNoPrimeFactor for N = 1.
  std::uint64_t least_prime = kNoPrimeFactor;

  bool divisible_by(std::uint64_t p) const { return n % p == 0; }
};

// Throws SquarefreeError when N has a repeated prime factor.
LevelProfile level_profile(std::uint64_t n);

bool is_squarefree(std::uint64_t n);

// True iff N is squarefree with P^-(N) >= xi * log(kN) * log log(kN).
// Throws DomainError for odd or non-positive k.
bool level_set_member(std::uint64_t n, int k, double xi);

// log applied `depth` times: iterated_log(x, 2) = log log x. Throws DomainError
// when an intermediate argument is not positive.
double iterated_log(double x, int depth);

// ---- analytic constants -------------------------------------------------

// Euler's constant by Euler-Maclaurin summation of the harmonic series.
// Throws PrecisionError when tol is below long double resolution.
double euler_gamma(double tol = 1e-15);

// Riemann zeta for real s > 1.
double zeta(double s);
// zeta(s) - 1 without cancellation for large s.
long double zeta_minus_one(long double s);

// Prime zeta P(s) = sum_p p^{-s} for real s > 1, from the Mobius
// inversion P(s) = sum_k mu(k)/k log zeta(ks).
long double prime_zeta(double s);

// sum_{p > table.limit()} p^{-s}.
long double prime_zeta_tail(double s, const PrimeTable& table);

// The constant w0 in sum_{p<=t} 1/p = log log t + w0 + o(1), as
// gamma + sum_p [log(1 - 1/p) + 1/p]: explicit prime sum plus the tail
// -sum_{v>=2} P_{>y}(v)/v. Requires tol >= 1e-12 (PrecisionError otherwise).
double mertens_constant(double tol = 1e-10);

}  // namespace symlval
