#pragma once

#include <complex>
#include <vector>

#include "symlval/quadrature.hpp"

namespace symlval {

using Complex = std::complex<double>;

// A symmetric power order m in [1, 4] together with an angle theta in
// [0, pi]; indexes the unitary class sym^m[g(theta)] with eigenvalues
// e^{i(m-2j)theta}, j = 0..m.
struct LocalClass {
  int m;
  double theta;

  // Throws DomainError when m or theta is out of range.
  LocalClass(int m, double theta);
};

void check_order(int m);

// tr sym^m[g(theta)] = sum_j cos((m-2j)theta); m + 1 at theta = 0.
double sym_trace(int m, double theta);

// tr (sym^m[g(theta)])^nu.
double sym_power_trace(int m, double theta, int nu);

// log D(x, sym^m[g(theta)]) = -sum_j log|1 - e^{i(m-2j)theta} x|,
// evaluated pairwise in real arithmetic. Throws DomainError unless 0 <= x < 1.
double local_factor_log(int m, double theta, double x);

// Coefficients of D(x, sym^m[g(theta)])^z = sum_nu lambda^{z,nu} x^nu.
struct PowerSeriesCoeffs {
  int m;
  Complex z;
  double theta;
  std::vector<Complex> coeffs;  // nu = 0..nu_max, coeffs[0] == 1
};

// Exp-of-power-series recurrence n P_n = z sum_{k=1}^n tr(g^k) P_{n-k}.
PowerSeriesCoeffs power_series_coeffs(int m, Complex z, double theta, int nu_max);

// (2/pi) int_0^pi lambda^{z,nu}[g(theta)] sin((nu'+1)theta) sin(theta) dtheta:
// the coefficient of lambda_f(p^{nu'}) in the Chebyshev expansion.
Complex mu_coeff(int m, Complex z, int nu, int nu_prime, double tol = 1e-12);

// d_z(p^nu) = prod_{j<nu} (z + j)/(j + 1).
Complex dz(Complex z, int nu);

// Sato-Tate distribution function F(theta) = (theta - sin theta cos theta)/pi.
double sato_tate_cdf(double theta);
// Inverse of sato_tate_cdf to 1e-12 by safeguarded Newton. Throws
// DomainError for u outside [0, 1].
double sato_tate_inverse_cdf(double u);

// (2/pi) int_0^pi f(theta) sin^2(theta) dtheta.
template <class F>
auto sato_tate_mean(const F& f, const quad::Options& opt = {}) {
  constexpr double two_over_pi = 0.63661977236758134308;
  auto weighted = [&f](double theta) {
    const double s = std::sin(theta);
    return f(theta) * (s * s);
  };
  return two_over_pi * quad::integrate(weighted, 0.0, 3.14159265358979323846, opt);
}

}  // namespace symlval
