#pragma once

#include <cstdint>
#include <optional>

#include "symlval/constants.hpp"
#include "symlval/symrep.hpp"

namespace symlval {

inline constexpr std::uint64_t kDefaultMomentCutoff = 100'000;

// log M^z_{sym^m} (truncated Euler product plus fitted tail). For real z the
// imaginary part of log_value is zero.
struct MomentResult {
  int m = 1;
  Complex z{};
  Complex log_value{};
  std::uint64_t cutoff = 0;
  // Contribution assigned to primes above the cutoff (already included).
  Complex tail_correction{};
  double tail_bound = 0;
  bool precision_warning = false;
};

// log of the Sato-Tate mean of D(1/p, sym^m[g(theta)])^z. The exponent is
// shifted by its maximum before exponentiating, so large |z| is safe.
double local_moment_log(int m, double z, std::uint64_t p);
Complex local_moment_log(int m, Complex z, std::uint64_t p);

// Euler product over p <= cutoff of the local means, completed by
// mu2 P_{>y}(2) + mu3 P_{>y}(3) + (mu4 - mu2^2/2) P_{>y}(4) with
// mu_v = mu_{m,0}^{z,v}. Complex z requires
// |Im z| <= 10. precision_warning is set when tail_bound > tol.
MomentResult moment(int m, Complex z, std::uint64_t cutoff = kDefaultMomentCutoff,
                    double tol = 1e-6);
MomentResult moment(int m, double z, std::uint64_t cutoff = kDefaultMomentCutoff,
                    double tol = 1e-6);

// log of sum_{v>=0} d_z(p^v) [m v even] p^{-v(1+m/2)}: the p-part of
// sum_n Box_N(n^m) d_z(n) n^{-1-m/2}.
double ramified_series_log(int m, double z, std::uint64_t p);

// log(M^z_{sym^m}(N) / M^z_{sym^m}). Throws SquarefreeError for non-squarefree N.
double level_factor_log(int m, double z, std::uint64_t n);

// h_m^{+-}(t) with the linear part removed for t >= 1:
//   t < 1:  log E[exp(+-t tr/(m+1))]
//   t >= 1: log E[exp(+-t tr/(m+1))] - A_m^{+-} t/(m+1)
// where E is the Sato-Tate mean.
double h_function(int m, Sign sign, double t);

struct ScriptConstants {
  int m = 1;
  Sign sign = Sign::kPlus;
  double script_A = 0;
  double script_B = 0;
  // Sign - only: the two integrals from which script_A/script_B are built.
  std::optional<double> script_D;
  std::optional<double> script_K;
  // Largest |fit - h| on the fitting window, weighted by the tail integral.
  double tail_fit_residual = 0;
};

// 1 + int_0^inf h/t^2 dt and int_0^inf h/t^2 log t dt with h from
// h_function. (0, 1] and [1, T0] are integrated in s = -+log t; t > T0 = 500
// goes through a c0 + c1 log t + c2/t + c3/t^2 model fitted on [300, 500].
// Sign - is converted via A = D + log((m+1)/A^-), B = K - log^2((m+1)/A^-)/2.
// Throws PrecisionError when tol < 1e-8 or the fit residual exceeds tol.
ScriptConstants script_constants(int m, Sign sign, double tol = 1e-8);

// script_constants at the default tolerance, computed once per (m, sign).
const ScriptConstants& standard_script_constants(int m, Sign sign);

// Inputs of the log-moment asymptotic for one (m, sign).
struct AsymptoticInputs {
  double A;
  double B;
  double script_A;
  double script_B;
};

AsymptoticInputs standard_asymptotic_inputs(int m, Sign sign);

// Asymptotic for log M^{+-r}:
//   order 1: A r log(B log(A r))
//   order 2: + (A r / log(A r)) (script_A - 1)
//   order 3: + (A r / log(A r)) script_B / log(A r)
// Requires r >= 8 and A r > e.
double log_moment_asymptotic(const AsymptoticInputs& in, double r, int order);
double log_moment_asymptotic(int m, Sign sign, double r, int order);

// level_factor_log(m, +-r, N) (log r)^3 / r.
double level_correction_check(int m, Sign sign, double r, std::uint64_t n);

}  // namespace symlval
