#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symlval {

enum class Sign { kPlus, kMinus };

inline double sign_factor(Sign s) { return s == Sign::kPlus ? 1.0 : -1.0; }
std::string to_string(Sign s);
// Accepts "+", "-", "plus", "minus".
Sign parse_sign(std::string_view text);

inline constexpr std::uint64_t kDefaultConstantsCutoff = 100'000;

// A_m^{+-}, B_m^{+-} and the per-prime extremal angles for one (m, sign).
struct ExtremalConstants {
  int m = 1;
  Sign sign = Sign::kPlus;
  double A = 0;
  double B = 0;
  std::uint64_t cutoff = 0;
  // Bound on |B - B_truncated| from the C/p^2 decay of the summand.
  double tail_bound = 0;
  bool precision_warning = false;
  // Fitted C in summand ~ C/p^2 on [cutoff/2, cutoff], and its max |.|.
  double tail_coefficient = 0;
  double tail_coefficient_max = 0;
  std::vector<std::uint32_t> primes;
  std::vector<double> angles;  // theta_{m,p}^{+-} for each prime above
};

// argmax (sign +) or argmin (sign -) of theta -> D(1/p, sym^m[g(theta)]) on
// [0, pi]: 1024-interval grid, then golden-section refinement to 1e-12.
// Ties resolve to the smallest theta.
double extremal_angle(int m, std::uint64_t p, Sign sign);

// +-log D(1/p, theta^{+-}_{m,p}) - A^{+-}_m / p; the B-sum summand.
double extremal_summand(int m, std::uint64_t p, Sign sign, double theta);

// A_m^{+-} = max +-tr sym^m[g(theta)], exact values cross-checked once
// against a grid search of sym_trace.
double a_const(int m, Sign sign);

// B_m^{+-} from the prime sum up to `cutoff`, completed by a fitted C/p^2
// tail. precision_warning is set when tail_bound > tol.
ExtremalConstants b_const(int m, Sign sign, std::uint64_t cutoff = kDefaultConstantsCutoff,
                          double tol = 1e-6);

// The closed forms e^gamma, e^gamma/zeta(2), e^gamma/zeta(2)^2; empty for
// B_4^- which has none.
std::optional<double> b_closed_form(int m, Sign sign);

// b_const at the default cutoff, computed once per (m, sign) and shared.
const ExtremalConstants& standard_constants(int m, Sign sign);

// (B log log kN)^{+-A} with log log kN supplied directly.
double extreme_value_at(double A, double B, Sign sign, double loglog);

// (B_m^{+-} log log kN)^{+-A_m^{+-}}. Requires kN >= 16.
double extreme_value_prediction(int m, Sign sign, int k, std::uint64_t n);

// ((2 B^- log log kN)^{-A^-}, (2 B^+ log log kN)^{A^+}). Requires kN >= 16.
std::pair<double, double> grh_bound_interval(int m, int k, std::uint64_t n);
std::pair<double, double> grh_bound_interval_at(int m, double loglog);

// T_{k,N} = log_2 kN - log_3 kN - log_4 kN - c11 (iterated logs).
// Requires log_4 kN > 0, i.e. kN > exp(e^e).
double mv_threshold(int k, std::uint64_t n, double c11);
double mv_threshold_from_log(double log_kn, double c11);

// Main term (k-1) phi(N) / 12 of |H_k^*(N)|.
double family_size(int k, std::uint64_t n);

}  // namespace symlval
