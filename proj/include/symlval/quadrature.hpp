#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>

#include "symlval/errors.hpp"

namespace symlval::quad {

inline constexpr std::size_t kNodes = 64;

struct Rule {
  std::array<double, kNodes> nodes;    // on [-1, 1]
  std::array<double, kNodes> weights;
};

// 64-point Gauss-Legendre rule, computed once.
const Rule& gauss_legendre64();

struct Options {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_depth = 40;
  int initial_panels = 4;
};

namespace detail {

template <class F>
auto panel(const F& f, double a, double b) {
  const Rule& rule = gauss_legendre64();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  decltype(f(a)) sum{};
  for (std::size_t i = 0; i < kNodes; ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return sum * half;
}

template <class F, class T>
T refine(const F& f, double a, double b, T whole, double abs_tol,
         const Options& opt, int depth) {
  const double mid = 0.5 * (a + b);
  const T left = panel(f, a, mid);
  const T right = panel(f, mid, b);
  const T both = left + right;
  const double diff = std::abs(both - whole);
  if (diff <= std::max(abs_tol, opt.rel_tol * std::abs(both))) return both;
  if (depth >= opt.max_depth)
    throw PrecisionError("adaptive quadrature did not converge on [" +
                         std::to_string(a) + ", " + std::to_string(b) + "]");
  return refine(f, a, mid, left, 0.5 * abs_tol, opt, depth + 1) +
         refine(f, mid, b, right, 0.5 * abs_tol, opt, depth + 1);
}

}  // namespace detail

// Composite 64-node Gauss-Legendre with adaptive bisection: a panel is
// accepted once its two halves agree with it to within the tolerance.
// Works for real- and complex-valued integrands.
template <class F>
auto integrate(const F& f, double a, double b, const Options& opt = {}) {
  using T = decltype(f(a));
  T total{};
  const int n = std::max(1, opt.initial_panels);
  const double h = (b - a) / n;
  for (int i = 0; i < n; ++i) {
    const double lo = a + i * h;
    const double hi = (i + 1 == n) ? b : lo + h;
    const T whole = detail::panel(f, lo, hi);
    total += detail::refine(f, lo, hi, whole, opt.abs_tol / n, opt, 0);
  }
  return total;
}

}  // namespace symlval::quad
