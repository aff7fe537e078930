#include "symlval/moments.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "symlval/errors.hpp"
#include "symlval/parallel.hpp"
#include "symlval/primes.hpp"

namespace symlval {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoOverPi = 2.0 / std::numbers::pi;
constexpr int kShiftGrid = 512;

// Largest real part of z log D(x, .) over a uniform grid on [0, pi].
double exponent_shift(int m, Complex z, double x) {
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kShiftGrid; ++i) {
    const double theta = kPi * i / kShiftGrid;
    best = std::max(best, z.real() * local_factor_log(m, theta, x));
  }
  return best;
}

quad::Options local_options() {
  quad::Options opt;
  opt.abs_tol = 1e-15;
  opt.rel_tol = 1e-13;
  return opt;
}

template <class Z>
Z local_moment_log_impl(int m, Z z, std::uint64_t p) {
  check_order(m);
  if (p < 2) throw DomainError("local moment requires p >= 2");
  if (z == Z{}) return Z{};
  const double x = 1.0 / static_cast<double>(p);
  const double shift = exponent_shift(m, Complex(z), x);
  auto integrand = [&](double theta) {
    const double s = std::sin(theta);
    return std::exp(z * local_factor_log(m, theta, x) - shift) * (s * s);
  };
  const Z mean = kTwoOverPi * quad::integrate(integrand, 0.0, kPi, local_options());
  return std::log(mean) + shift;
}

// expm1(y) - y without cancellation near 0.
double expm1_minus_linear(double y) {
  if (std::abs(y) >= 0.5) return std::expm1(y) - y;
  double term = y * y / 2;
  double sum = term;
  for (int n = 3; n < 30; ++n) {
    term *= y / n;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

template <class Z>
MomentResult moment_impl(int m, Z z, std::uint64_t cutoff, double tol) {
  check_order(m);
  if (cutoff < 1000) throw DomainError("moment requires cutoff >= 1000");
  if (std::abs(Complex(z).imag()) > 10)
    throw DomainError("complex moments require |Im z| <= 10");
  MomentResult out;
  out.m = m;
  out.z = Complex(z);
  out.cutoff = cutoff;
  if (z == Z{}) return out;

  const PrimeTable table = primes_up_to(cutoff);
  std::vector<Z> logs(table.size());
  constexpr std::size_t chunk = 128;
  parallel_for((table.size() + chunk - 1) / chunk, [&](std::size_t c) {
    const std::size_t end = std::min(table.size(), (c + 1) * chunk);
    for (std::size_t i = c * chunk; i < end; ++i) logs[i] = local_moment_log_impl(m, z, table[i]);
  });
  const Complex head = Complex(pairwise_sum(logs));

  // log E[D^z] = mu2 x^2 + mu3 x^3 + (mu4 - mu2^2/2) x^4 + O(x^5).
  const Complex zc(z);
  const Complex mu2 = mu_coeff(m, zc, 2, 0);
  const Complex mu3 = mu_coeff(m, zc, 3, 0);
  const Complex mu4 = mu_coeff(m, zc, 4, 0);
  const Complex c4 = mu4 - 0.5 * mu2 * mu2;
  const double p2 = static_cast<double>(prime_zeta_tail(2, table));
  const double p3 = static_cast<double>(prime_zeta_tail(3, table));
  const double p4 = static_cast<double>(prime_zeta_tail(4, table));
  out.tail_correction = mu2 * p2 + mu3 * p3 + c4 * p4;
  const double y = static_cast<double>(cutoff);
  const double p5_bound = std::pow(y, -4.0) / 4;
  const double w = (m + 1) * std::abs(zc);
  out.tail_bound = 2 * std::abs(dz(w, 5)) * p5_bound + 1e-12 * table.size();
  out.log_value = head + out.tail_correction;
  if constexpr (std::is_same_v<Z, double>) out.log_value.imag(0.0);
  out.precision_warning = out.tail_bound > tol;
  return out;
}

}  // namespace

double local_moment_log(int m, double z, std::uint64_t p) { return local_moment_log_impl(m, z, p); }

Complex local_moment_log(int m, Complex z, std::uint64_t p) {
  return local_moment_log_impl(m, z, p);
}

MomentResult moment(int m, Complex z, std::uint64_t cutoff, double tol) {
  if (z.imag() == 0.0) return moment_impl(m, z.real(), cutoff, tol);
  return moment_impl(m, z, cutoff, tol);
}

MomentResult moment(int m, double z, std::uint64_t cutoff, double tol) {
  return moment_impl(m, z, cutoff, tol);
}

double ramified_series_log(int m, double z, std::uint64_t p) {
  check_order(m);
  const double y = std::pow(static_cast<double>(p), -(1.0 + 0.5 * m));
  if (m % 2 == 0) return -z * std::log1p(-y);
  // Only even exponents v contribute when m is odd.
  const double lo = -z * std::log1p(-y);
  const double hi = -z * std::log1p(y);
  const double top = std::max(lo, hi);
  return top + std::log(0.5 * (std::exp(lo - top) + std::exp(hi - top)));
}

double level_factor_log(int m, double z, std::uint64_t n) {
  check_order(m);
  const LevelProfile profile = level_profile(n);
  if (z == 0.0) return 0.0;
  double sum = 0;
  for (const auto p : profile.prime_factors)
    sum += ramified_series_log(m, z, p) - local_moment_log(m, z, p);
  return sum;
}

double h_function(int m, Sign sign, double t) {
  check_order(m);
  if (!(t >= 0)) throw DomainError("h_function requires t >= 0");
  if (t == 0) return 0.0;
  const double s = sign_factor(sign);
  const double scale = 1.0 / (m + 1);
  quad::Options opt = local_options();
  opt.initial_panels = 8;
  if (t < 1) {
    // E[tr] = 0, so log E[e^y] = log1p(E[expm1(y) - y]).
    const double mean = sato_tate_mean(
        [&](double theta) { return expm1_minus_linear(s * t * scale * sym_trace(m, theta)); }, opt);
    return std::log1p(mean);
  }
  const double top = a_const(m, sign) * scale;
  const double mean = sato_tate_mean(
      [&](double theta) { return std::exp(t * (s * scale * sym_trace(m, theta) - top)); }, opt);
  return std::log(mean);
}

ScriptConstants script_constants(int m, Sign sign, double tol) {
  check_order(m);
  if (!(tol >= 1e-8)) throw PrecisionError("script_constants requires tol >= 1e-8");
  auto h = [&](double t) { return h_function(m, sign, t); };
  quad::Options opt;
  opt.abs_tol = 1e-3 * tol;
  opt.rel_tol = 1e-12;

  // (0, 1] through t = e^{-s}: dt/t^2 = e^{s} ds, log t = -s.
  constexpr double s_max = 45.0;
  const double i_low = quad::integrate([&](double s) { return h(std::exp(-s)) * std::exp(s); },
                                       0.0, s_max, opt);
  const double j_low = quad::integrate(
      [&](double s) { return -s * h(std::exp(-s)) * std::exp(s); }, 0.0, s_max, opt);

  // [1, T0] through t = e^{s}: dt/t^2 = e^{-s} ds.
  constexpr double t0 = 500.0;
  const double l0 = std::log(t0);
  const double i_mid = quad::integrate([&](double s) { return h(std::exp(s)) * std::exp(-s); },
                                       0.0, l0, opt);
  const double j_mid = quad::integrate(
      [&](double s) { return s * h(std::exp(s)) * std::exp(-s); }, 0.0, l0, opt);

  // Tail model h(t) = c0 + c1 log t + c2/t + c3/t^2 fitted on [300, 500].
  constexpr int fit_points = 41;
  Eigen::MatrixXd design(fit_points, 4);
  Eigen::VectorXd values(fit_points);
  for (int i = 0; i < fit_points; ++i) {
    const double t = 300.0 + 200.0 * i / (fit_points - 1);
    design.row(i) << 1.0, std::log(t), 1.0 / t, 1.0 / (t * t);
    values(i) = h(t);
  }
  const Eigen::Vector4d c = design.colPivHouseholderQr().solve(values);
  const double max_dev = (design * c - values).cwiseAbs().maxCoeff();

  const double i_tail = c(0) / t0 + c(1) * (l0 + 1) / t0 + c(2) / (2 * t0 * t0) +
                        c(3) / (3 * t0 * t0 * t0);
  const double j_tail = c(0) * (l0 + 1) / t0 + c(1) * (l0 * l0 + 2 * l0 + 2) / t0 +
                        c(2) * (2 * l0 + 1) / (4 * t0 * t0) +
                        c(3) * (3 * l0 + 1) / (9 * t0 * t0 * t0);

  ScriptConstants out;
  out.m = m;
  out.sign = sign;
  out.tail_fit_residual = max_dev * (l0 + 1) / t0;
  if (out.tail_fit_residual > tol)
    throw PrecisionError("script_constants: tail fit residual " +
                         std::to_string(out.tail_fit_residual) + " exceeds tolerance");
  const double first = 1.0 + i_low + i_mid + i_tail;
  const double second = j_low + j_mid + j_tail;
  if (sign == Sign::kPlus) {
    out.script_A = first;
    out.script_B = second;
  } else {
    const double shift = std::log((m + 1) / a_const(m, sign));
    out.script_D = first;
    out.script_K = second;
    out.script_A = first + shift;
    out.script_B = second - 0.5 * shift * shift;
  }
  return out;
}

const ScriptConstants& standard_script_constants(int m, Sign sign) {
  check_order(m);
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<ScriptConstants>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{m, sign == Sign::kPlus ? 1 : -1}];
  if (!slot) slot = std::make_unique<ScriptConstants>(script_constants(m, sign));
  return *slot;
}

AsymptoticInputs standard_asymptotic_inputs(int m, Sign sign) {
  const auto& script = standard_script_constants(m, sign);
  return {a_const(m, sign), standard_constants(m, sign).B, script.script_A, script.script_B};
}

double log_moment_asymptotic(const AsymptoticInputs& in, double r, int order) {
  if (order < 1 || order > 3) throw DomainError("asymptotic order must be 1, 2 or 3");
  if (!(r >= 8)) throw DomainError("log-moment asymptotic requires r >= 8");
  const double ar = in.A * r;
  const double log_ar = std::log(ar);
  if (!(log_ar > 1)) throw DomainError("log-moment asymptotic requires A r > e");
  double value = ar * std::log(in.B * log_ar);
  if (order >= 2) value += ar / log_ar * (in.script_A - 1);
  if (order >= 3) value += ar / log_ar * in.script_B / log_ar;
  return value;
}

double log_moment_asymptotic(int m, Sign sign, double r, int order) {
  return log_moment_asymptotic(standard_asymptotic_inputs(m, sign), r, order);
}

double level_correction_check(int m, Sign sign, double r, std::uint64_t n) {
  if (!(r > 1)) throw DomainError("level_correction_check requires r > 1");
  const double lr = std::log(r);
  return level_factor_log(m, sign_factor(sign) * r, n) * lr * lr * lr / r;
}

}  // namespace symlval
