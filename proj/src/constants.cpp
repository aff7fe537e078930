#include "symlval/constants.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "symlval/errors.hpp"
#include "symlval/parallel.hpp"
#include "symlval/primes.hpp"
#include "symlval/symrep.hpp"

namespace symlval {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kGridIntervals = 1024;
constexpr double kAngleTol = 1e-12;

// Maximizes f on [0, pi]; smallest argument wins ties.
template <class F>
double grid_golden_argmax(const F& f) {
  const double h = kPi / kGridIntervals;
  int best = 0;
  double best_value = f(0.0);
  for (int i = 1; i <= kGridIntervals; ++i) {
    const double v = f(i * h);
    if (v > best_value + 1e-15 * std::abs(best_value)) {
      best = i;
      best_value = v;
    }
  }
  double lo = std::max(0, best - 1) * h;
  double hi = std::min(kGridIntervals, best + 1) * h;
  const double lo0 = lo, hi0 = hi;
  constexpr double inv_phi = 0.61803398874989484820;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > kAngleTol) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  double arg = 0.5 * (lo + hi);
  double value = f(arg);
  // The optimum may sit on the bracket edge (theta = 0 or pi).
  for (const double edge : {lo0, hi0}) {
    const double v = f(edge);
    if (v > value || (v == value && edge < arg)) {
      arg = edge;
      value = v;
    }
  }
  return arg;
}

double exact_a(int m, Sign sign) {
  if (sign == Sign::kPlus || m % 2 == 1) return m + 1;
  return m == 2 ? 1.0 : 1.25;
}

void verify_a_once(int m, Sign sign) {
  static std::once_flag flags[4][2];
  std::call_once(flags[m - 1][sign == Sign::kPlus ? 0 : 1], [m, sign] {
    const double s = sign_factor(sign);
    const double theta = grid_golden_argmax([&](double t) { return s * sym_trace(m, t); });
    const double numeric = s * sym_trace(m, theta);
    if (std::abs(numeric - exact_a(m, sign)) > 1e-9)
      throw PrecisionError("A_m cross-check failed for m = " + std::to_string(m));
  });
}

}  // namespace

std::string to_string(Sign s) { return s == Sign::kPlus ? "+" : "-"; }

Sign parse_sign(std::string_view text) {
  if (text == "+" || text == "plus") return Sign::kPlus;
  if (text == "-" || text == "minus") return Sign::kMinus;
  throw DomainError("sign must be '+' or '-', got '" + std::string(text) + "'");
}

double extremal_angle(int m, std::uint64_t p, Sign sign) {
  check_order(m);
  if (p < 2) throw DomainError("extremal_angle requires p >= 2");
  const double x = 1.0 / static_cast<double>(p);
  const double s = sign_factor(sign);
  return grid_golden_argmax([&](double t) { return s * local_factor_log(m, t, x); });
}

double extremal_summand(int m, std::uint64_t p, Sign sign, double theta) {
  const double x = 1.0 / static_cast<double>(p);
  return sign_factor(sign) * local_factor_log(m, theta, x) - a_const(m, sign) * x;
}

double a_const(int m, Sign sign) {
  check_order(m);
  verify_a_once(m, sign);
  return exact_a(m, sign);
}

ExtremalConstants b_const(int m, Sign sign, std::uint64_t cutoff, double tol) {
  check_order(m);
  if (cutoff < 1000) throw DomainError("b_const requires cutoff >= 1000");
  const PrimeTable table = primes_up_to(cutoff);
  ExtremalConstants out;
  out.m = m;
  out.sign = sign;
  out.A = a_const(m, sign);
  out.cutoff = cutoff;
  out.primes.assign(table.begin(), table.end());
  out.angles.resize(table.size());
  std::vector<double> summands(table.size());

  constexpr std::size_t chunk = 256;
  const std::size_t chunks = (table.size() + chunk - 1) / chunk;
  parallel_for(chunks, [&](std::size_t c) {
    const std::size_t end = std::min(table.size(), (c + 1) * chunk);
    for (std::size_t i = c * chunk; i < end; ++i) {
      out.angles[i] = extremal_angle(m, table[i], sign);
      summands[i] = extremal_summand(m, table[i], sign, out.angles[i]);
    }
  });

  // Summand = C/p^2 + O(p^-3); estimate C on the top octave of primes.
  double c_sum = 0, c_max = 0;
  std::size_t c_count = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (2 * static_cast<std::uint64_t>(table[i]) < cutoff) continue;
    const double p = table[i];
    const double c = summands[i] * p * p;
    c_sum += c;
    c_max = std::max(c_max, std::abs(c));
    ++c_count;
  }
  out.tail_coefficient = c_count ? c_sum / static_cast<double>(c_count) : 0.0;
  out.tail_coefficient_max = c_max;
  const double p2_tail = static_cast<double>(prime_zeta_tail(2.0, table));

  const double sum = pairwise_sum(summands) + out.tail_coefficient * p2_tail;
  const double mertens_tol = 1e-10;
  out.B = std::exp(mertens_constant(mertens_tol) + sum / out.A);
  out.tail_bound = out.B * (std::expm1(c_max * p2_tail / out.A) + mertens_tol);
  out.precision_warning = out.tail_bound > tol;
  return out;
}

std::optional<double> b_closed_form(int m, Sign sign) {
  check_order(m);
  const double eg = std::exp(euler_gamma());
  const double z2 = kPi * kPi / 6;
  if (sign == Sign::kPlus) return eg;
  if (m % 2 == 1) return eg / z2;
  if (m == 2) return eg / (z2 * z2);
  return std::nullopt;
}

const ExtremalConstants& standard_constants(int m, Sign sign) {
  check_order(m);
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<ExtremalConstants>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{m, sign == Sign::kPlus ? 1 : -1}];
  if (!slot) slot = std::make_unique<ExtremalConstants>(b_const(m, sign));
  return *slot;
}

double extreme_value_at(double A, double B, Sign sign, double loglog) {
  return std::pow(B * loglog, sign_factor(sign) * A);
}

namespace {
double checked_loglog(int k, std::uint64_t n) {
  const double kn = static_cast<double>(k) * static_cast<double>(n);
  if (k < 2 || k % 2 != 0) throw DomainError("weight k must be an even integer >= 2");
  if (kn < 16) throw DomainError("kN must be at least 16 so that log log kN > 1");
  return iterated_log(kn, 2);
}
}  // namespace

double extreme_value_prediction(int m, Sign sign, int k, std::uint64_t n) {
  const double loglog = checked_loglog(k, n);
  const auto& c = standard_constants(m, sign);
  return extreme_value_at(c.A, c.B, sign, loglog);
}

std::pair<double, double> grh_bound_interval_at(int m, double loglog) {
  const auto& minus = standard_constants(m, Sign::kMinus);
  const auto& plus = standard_constants(m, Sign::kPlus);
  return {std::pow(2 * minus.B * loglog, -minus.A), std::pow(2 * plus.B * loglog, plus.A)};
}

std::pair<double, double> grh_bound_interval(int m, int k, std::uint64_t n) {
  return grh_bound_interval_at(m, checked_loglog(k, n));
}

double mv_threshold_from_log(double log_kn, double c11) {
  const double l2 = std::log(log_kn);
  const double l3 = std::log(l2);
  if (!(l3 > 1.0)) throw DomainError("T_{k,N} requires log_4 kN > 0");
  const double l4 = std::log(l3);
  return l2 - l3 - l4 - c11;
}

double mv_threshold(int k, std::uint64_t n, double c11) {
  if (k < 2 || k % 2 != 0) throw DomainError("weight k must be an even integer >= 2");
  return mv_threshold_from_log(std::log(static_cast<double>(k) * static_cast<double>(n)), c11);
}

double family_size(int k, std::uint64_t n) {
  if (k < 2 || k % 2 != 0) throw DomainError("weight k must be an even integer >= 2");
  return (k - 1) * static_cast<double>(level_profile(n).phi) / 12.0;
}

}  // namespace symlval
