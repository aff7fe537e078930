#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "symlval/primes.hpp"

namespace symlval {

enum class Normalization { kArithmetic, kUnit };

// Normalized Hecke eigenvalues lambda_f(p) of a newform of weight k and
// squarefree level N. Unramified values satisfy |lambda| <= 2; at p | N the
// value is eps_f(p)/sqrt(p).
struct NewformCoefficients {
  int k = 12;
  std::uint64_t n = 1;
  LevelProfile level;
  std::map<std::uint64_t, double> lambda;
  std::map<std::uint64_t, int> ramified_sign;
  std::uint64_t max_prime = 0;

  bool ramified(std::uint64_t p) const { return n % p == 0; }
  // Throws InsufficientDataError when p was not ingested.
  double lambda_at(std::uint64_t p) const;
  // Throws InsufficientDataError naming the first prime <= x not ingested.
  void require_primes_up_to(std::uint64_t x) const;
};

// Coefficient file:
//   k=<even int>
//   N=<squarefree int>
//   normalization=arithmetic|unit
//   <p> <value>        one record per prime, '#' starts a comment
// Arithmetic values a_p are divided by p^{(k-1)/2}. Decimal values are read
// with std::from_chars (locale independent).
NewformCoefficients parse_coefficients(std::string_view text);
NewformCoefficients load_coefficients(const std::filesystem::path& path);

// lambda_f(n) through multiplicativity and the Hecke recursion
// lambda(p^{v+1}) = lambda(p) lambda(p^v) - lambda(p^{v-1}) (p not | N),
// lambda(p^v) = lambda(p)^v (p | N).
double hecke_lambda(const NewformCoefficients& f, std::uint64_t n);

// theta_f(p) = arccos(lambda_f(p)/2). Throws DomainError at ramified p.
double angle_of(const NewformCoefficients& f, std::uint64_t p);

// lambda_{sym^m f}(n): lambda_m^{1,v}[g(theta_f(p))] at unramified p^v,
// lambda_f(p)^{m v} at ramified p^v.
double sym_coeff(const NewformCoefficients& f, int m, std::uint64_t n);

enum class LMethod { kEulerProduct, kDirichletLog };
std::string to_string(LMethod method);
LMethod parse_method(std::string_view text);

struct TruncatedLValue {
  int m = 1;
  double value = 0;
  std::uint64_t truncation = 0;
  // 1/sqrt(log(kN x)); a heuristic scale, not a bound.
  double heuristic_error = 0;
  LMethod method = LMethod::kEulerProduct;
};

// Euler product over p <= x, or exp of sum_{p^v <= x} Lambda(p^v)/(p^v log p^v).
TruncatedLValue l_value_truncated(const NewformCoefficients& f, int m, std::uint64_t x,
                                  LMethod method);

// exp(sqrt(log(kN) / (7(m+4)))), the truncation point the error analysis
// is stated for.
double reference_truncation(int m, int k, std::uint64_t n);

// 2 pi^2 / ((k-1) phi(N) L(1, sym^2 f)).
double harmonic_weight(const NewformCoefficients& f, double l_sym2);

struct GrhReport {
  int m = 1;
  double value = 0;
  std::uint64_t truncation = 0;
  // False when kN < 16 and the interval is undefined.
  bool applicable = false;
  double lower = 0;
  double upper = 0;
  bool inside = false;
};

GrhReport grh_check(const NewformCoefficients& f, int m, std::uint64_t x);

}  // namespace symlval
