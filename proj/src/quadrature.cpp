#include "symlval/quadrature.hpp"

#include <numbers>

namespace symlval::quad {

namespace {

Rule build_rule() {
  Rule rule{};
  constexpr int n = static_cast<int>(kNodes);
  for (int i = 0; i < n; ++i) {
    // Newton on P_n starting from the Chebyshev-like guess.
    long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
    auto legendre = [n](long double t, long double& deriv) {
      long double p0 = 1, p1 = t;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      deriv = n * (t * p1 - p0) / (t * t - 1);
      return p1;
    };
    long double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      const long double dx = legendre(x, dp) / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    legendre(x, dp);
    rule.nodes[i] = static_cast<double>(x);
    rule.weights[i] = static_cast<double>(2 / ((1 - x * x) * dp * dp));
  }
  return rule;
}

}  // namespace

const Rule& gauss_legendre64() {
  static const Rule rule = build_rule();
  return rule;
}

}  // namespace symlval::quad
