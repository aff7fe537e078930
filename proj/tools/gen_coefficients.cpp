// Writes coefficient files for two reference newforms:
//   delta: Ramanujan Delta = q prod (1 - q^n)^24, weight 12, level 1
//   11a:   q prod (1 - q^n)^2 (1 - q^{11n})^2, weight 2, level 11
// usage: gen_coefficients delta|11a <prime limit>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

using i128 = __int128;

std::string to_string(i128 v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  std::string digits;
  while (v != 0) {
    const int d = static_cast<int>(v % 10);
    digits.insert(digits.begin(), static_cast<char>('0' + (d < 0 ? -d : d)));
    v /= 10;
  }
  return negative ? "-" + digits : digits;
}

std::vector<i128> truncated_product(const std::vector<i128>& a, const std::vector<i128>& b) {
  const std::size_t n = a.size();
  std::vector<i128> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// prod_{n>=1} (1 - q^n) by the pentagonal number theorem, length `len`.
std::vector<i128> euler_product(std::size_t len) {
  std::vector<i128> out(len, 0);
  for (long k = 0;; ++k) {
    bool any = false;
    for (const long j : {k, -k - 1}) {
      const long e = j * (3 * j - 1) / 2;
      if (e < static_cast<long>(len)) {
        out[e] += (j % 2 == 0) ? 1 : -1;
        any = true;
      }
    }
    if (!any) break;
  }
  return out;
}

std::vector<bool> prime_flags(std::size_t limit) {
  std::vector<bool> prime(limit + 1, true);
  prime[0] = false;
  if (limit >= 1) prime[1] = false;
  for (std::size_t i = 2; i * i <= limit; ++i)
    if (prime[i])
      for (std::size_t j = i * i; j <= limit; j += i) prime[j] = false;
  return prime;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: gen_coefficients delta|11a <prime limit>\n";
    return 1;
  }
  const std::string form = argv[1];
  const std::size_t limit = std::strtoull(argv[2], nullptr, 10);
  if (limit < 2) {
    std::cerr << "prime limit must be at least 2\n";
    return 1;
  }
  // Coefficient of q^n is series[n - 1].
  std::vector<i128> series;
  if (form == "delta") {
    // prod (1 - q^n)^3 = sum_k (-1)^k (2k+1) q^{k(k+1)/2}
    std::vector<i128> cube(limit, 0);
    for (std::size_t k = 0; k * (k + 1) / 2 < limit; ++k)
      cube[k * (k + 1) / 2] = (k % 2 == 0 ? 1 : -1) * static_cast<i128>(2 * k + 1);
    const auto p6 = truncated_product(cube, cube);
    const auto p12 = truncated_product(p6, p6);
    series = truncated_product(p12, p12);
    std::cout << "# Ramanujan Delta, a_p = tau(p)\nk=12\nN=1\nnormalization=arithmetic\n";
  } else if (form == "11a") {
    const auto eta = euler_product(limit);
    const auto eta2 = truncated_product(eta, eta);
    std::vector<i128> eta2_11(limit, 0);
    for (std::size_t i = 0; i * 11 < limit; ++i) eta2_11[i * 11] = eta2[i];
    series = truncated_product(eta2, eta2_11);
    std::cout << "# eta(z)^2 eta(11z)^2, elliptic curve 11a\nk=2\nN=11\nnormalization=arithmetic\n";
  } else {
    std::cerr << "unknown form '" << form << "'\n";
    return 1;
  }
  const auto prime = prime_flags(limit);
  for (std::size_t p = 2; p <= limit; ++p)
    if (prime[p]) std::cout << p << ' ' << to_string(series[p - 1]) << '\n';
  return 0;
}
