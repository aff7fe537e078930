#include "symlval/symrep.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "symlval/errors.hpp"

namespace symlval {

namespace {
constexpr double kPi = std::numbers::pi;
}

void check_order(int m) {
  if (m < 1 || m > 4)
    throw DomainError("symmetric power order must lie in [1, 4], got " + std::to_string(m));
}

LocalClass::LocalClass(int m_, double theta_) : m(m_), theta(theta_) {
  check_order(m);
  if (!(theta >= 0.0 && theta <= kPi)) throw DomainError("angle must lie in [0, pi]");
}

double sym_trace(int m, double theta) { return sym_power_trace(m, theta, 1); }

double sym_power_trace(int m, double theta, int nu) {
  // Cosine-sum form; exact at the zeros of sin(nu theta).
  double sum = 0;
  for (int j = 0; j <= m; ++j) sum += std::cos((m - 2 * j) * nu * theta);
  return sum;
}

double local_factor_log(int m, double theta, double x) {
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("local factor requires 0 <= x < 1");
  // Conjugate eigenvalues e^{+-ik theta} pair into 1 - 2x cos(k theta) + x^2.
  double sum = 0;
  for (int j = 0; 2 * j < m; ++j)
    sum -= std::log1p(x * (x - 2 * std::cos((m - 2 * j) * theta)));
  if (m % 2 == 0) sum -= std::log1p(-x);
  return sum;
}

PowerSeriesCoeffs power_series_coeffs(int m, Complex z, double theta, int nu_max) {
  if (nu_max < 0) throw DomainError("nu_max must be non-negative");
  std::vector<double> traces(static_cast<std::size_t>(nu_max) + 1);
  for (int k = 1; k <= nu_max; ++k) traces[k] = sym_power_trace(m, theta, k);
  std::vector<Complex> p(static_cast<std::size_t>(nu_max) + 1);
  p[0] = 1.0;
  for (int n = 1; n <= nu_max; ++n) {
    Complex acc = 0.0;
    for (int k = 1; k <= n; ++k) acc += traces[k] * p[n - k];
    p[n] = z * acc / static_cast<double>(n);
  }
  return {m, z, theta, std::move(p)};
}

Complex mu_coeff(int m, Complex z, int nu, int nu_prime, double tol) {
  check_order(m);
  if (nu < 0 || nu_prime < 0 || nu_prime > m * nu)
    throw DomainError("mu_coeff requires 0 <= nu' <= m nu");
  // The weight sin(theta) sin((nu'+1)theta) is sin^2 times U_{nu'}(cos theta).
  quad::Options opt;
  opt.abs_tol = tol;
  opt.rel_tol = tol;
  auto chebyshev_weighted = [&](double theta) {
    const double s = std::sin(theta);
    const Complex lambda = power_series_coeffs(m, z, theta, nu).coeffs[nu];
    return lambda * (std::sin((nu_prime + 1) * theta) * s);
  };
  return (2.0 / kPi) * quad::integrate(chebyshev_weighted, 0.0, kPi, opt);
}

Complex dz(Complex z, int nu) {
  if (nu < 0) throw DomainError("dz requires nu >= 0");
  Complex result = 1.0;
  for (int j = 0; j < nu; ++j) result *= (z + static_cast<double>(j)) / static_cast<double>(j + 1);
  return result;
}

double sato_tate_cdf(double theta) {
  if (!(theta >= 0.0 && theta <= kPi)) throw DomainError("angle must lie in [0, pi]");
  return (theta - std::sin(theta) * std::cos(theta)) / kPi;
}

double sato_tate_inverse_cdf(double u) {
  if (!(u >= 0.0 && u <= 1.0)) throw DomainError("probability must lie in [0, 1]");
  if (u == 0.0) return 0.0;
  if (u == 1.0) return kPi;
  double lo = 0.0, hi = kPi;
  double theta = kPi * u;
  for (int iter = 0; iter < 200; ++iter) {
    const double f = sato_tate_cdf(theta) - u;
    if (f > 0) hi = theta; else lo = theta;
    const double s = std::sin(theta);
    const double density = 2.0 * s * s / kPi;
    double next = density > 0 ? theta - f / density : 0.5 * (lo + hi);
    // Fall back to bisection when Newton leaves the bracket.
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - theta) < 1e-14 || hi - lo < 1e-14) return next;
    theta = next;
  }
  return theta;
}

}  // namespace symlval
