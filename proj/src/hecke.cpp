#include "symlval/hecke.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <tuple>
#include <vector>

#include "symlval/constants.hpp"
#include "symlval/errors.hpp"
#include "symlval/symrep.hpp"

namespace symlval {

namespace {

constexpr double kDeligneSlack = 1e-9;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
bool parse_number(std::string_view s, T& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct Factor {
  std::uint64_t p;
  int exponent;
};

std::vector<Factor> factorize(std::uint64_t n) {
  std::vector<Factor> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

double unramified_power(double lambda_p, int exponent) {
  double prev = 1.0, cur = lambda_p;
  if (exponent == 0) return 1.0;
  for (int v = 1; v < exponent; ++v) {
    const double next = lambda_p * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

double NewformCoefficients::lambda_at(std::uint64_t p) const {
  const auto it = lambda.find(p);
  if (it == lambda.end()) throw InsufficientDataError(p);
  return it->second;
}

void NewformCoefficients::require_primes_up_to(std::uint64_t x) const {
  if (x <= max_prime) {
    const PrimeTable table = primes_up_to(std::max<std::uint64_t>(x, 2));
    for (const auto p : table.up_to(x))
      if (!lambda.count(p)) throw InsufficientDataError(p);
    return;
  }
  for (std::uint64_t p = max_prime + 1; p <= x; ++p)
    if (is_prime(p)) throw InsufficientDataError(p);
}

NewformCoefficients parse_coefficients(std::string_view text) {
  NewformCoefficients f;
  std::optional<int> weight;
  std::optional<std::uint64_t> level;
  std::optional<Normalization> normalization;
  struct Record {
    std::uint64_t p;
    double value;
    std::size_t line;
  };
  std::vector<Record> records;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (const auto eq = line.find('='); eq != std::string_view::npos) {
      if (!records.empty()) throw ParseError(line_no, "header line after coefficient records");
      const auto key = trim(line.substr(0, eq));
      const auto value = trim(line.substr(eq + 1));
      if (key == "k") {
        int k = 0;
        if (!parse_number(value, k)) throw ParseError(line_no, "invalid weight");
        if (k < 2 || k % 2) throw ParseError(line_no, "weight k must be even and >= 2");
        weight = k;
      } else if (key == "N") {
        std::uint64_t n = 0;
        if (!parse_number(value, n) || n == 0) throw ParseError(line_no, "invalid level");
        if (!is_squarefree(n)) throw ParseError(line_no, "level N must be squarefree");
        level = n;
      } else if (key == "normalization") {
        if (value == "arithmetic") normalization = Normalization::kArithmetic;
        else if (value == "unit") normalization = Normalization::kUnit;
        else throw ParseError(line_no, "normalization must be 'arithmetic' or 'unit'");
      } else {
        throw ParseError(line_no, "unknown header key '" + std::string(key) + "'");
      }
      continue;
    }

    const auto space = line.find_first_of(" \t");
    if (space == std::string_view::npos) throw ParseError(line_no, "expected '<p> <value>'");
    Record r{0, 0.0, line_no};
    if (!parse_number(trim(line.substr(0, space)), r.p)) throw ParseError(line_no, "invalid prime");
    std::string_view value = trim(line.substr(space));
    if (!value.empty() && value.front() == '+') value.remove_prefix(1);
    if (!parse_number(value, r.value)) throw ParseError(line_no, "invalid coefficient value");
    if (!is_prime(r.p)) throw ParseError(line_no, std::to_string(r.p) + " is not prime");
    records.push_back(r);
  }
  if (!weight || !level || !normalization)
    throw ParseError(0, "header must define k, N and normalization");

  f.k = *weight;
  f.n = *level;
  f.level = level_profile(f.n);
  for (const auto& r : records) {
    double lambda = r.value;
    if (*normalization == Normalization::kArithmetic)
      lambda /= std::pow(static_cast<double>(r.p), 0.5 * (f.k - 1));
    if (f.ramified(r.p)) {
      const int eps = lambda >= 0 ? 1 : -1;
      const double expected = eps / std::sqrt(static_cast<double>(r.p));
      if (std::abs(lambda - expected) > kDeligneSlack)
        throw RamifiedNormalizationError(r.line, "ramified coefficient at p = " + std::to_string(r.p) +
                                                     " is not +-p^{-1/2}");
      f.ramified_sign[r.p] = eps;
      lambda = expected;
    } else if (std::abs(lambda) > 2 + kDeligneSlack) {
      throw DeligneViolation(r.line, "|lambda_f(" + std::to_string(r.p) + ")| exceeds 2");
    }
    if (!f.lambda.emplace(r.p, lambda).second)
      throw ParseError(r.line, "duplicate record for p = " + std::to_string(r.p));
    f.max_prime = std::max(f.max_prime, r.p);
  }
  for (const auto p : f.level.prime_factors)
    if (!f.ramified_sign.count(p))
      throw ParseError(0, "missing record for ramified prime " + std::to_string(p));
  return f;
}

NewformCoefficients load_coefficients(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open coefficient file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_coefficients(buffer.str());
}

double hecke_lambda(const NewformCoefficients& f, std::uint64_t n) {
  if (n == 0) throw DomainError("hecke_lambda requires n >= 1");
  double result = 1.0;
  for (const auto [p, e] : factorize(n)) {
    const double lp = f.lambda_at(p);
    result *= f.ramified(p) ? std::pow(lp, e) : unramified_power(lp, e);
  }
  return result;
}

double angle_of(const NewformCoefficients& f, std::uint64_t p) {
  if (f.ramified(p)) throw DomainError("no Satake angle at ramified prime " + std::to_string(p));
  return std::acos(std::clamp(f.lambda_at(p) / 2, -1.0, 1.0));
}

double sym_coeff(const NewformCoefficients& f, int m, std::uint64_t n) {
  check_order(m);
  if (n == 0) throw DomainError("sym_coeff requires n >= 1");
  double result = 1.0;
  for (const auto [p, e] : factorize(n)) {
    if (f.ramified(p)) {
      result *= std::pow(f.lambda_at(p), m * e);
    } else {
      result *= power_series_coeffs(m, 1.0, angle_of(f, p), e).coeffs[e].real();
    }
  }
  return result;
}

std::string to_string(LMethod method) {
  return method == LMethod::kEulerProduct ? "euler-product" : "dirichlet-log";
}

LMethod parse_method(std::string_view text) {
  if (text == "euler-product" || text == "euler") return LMethod::kEulerProduct;
  if (text == "dirichlet-log" || text == "dirichlet") return LMethod::kDirichletLog;
  throw DomainError("method must be 'euler-product' or 'dirichlet-log'");
}

TruncatedLValue l_value_truncated(const NewformCoefficients& f, int m, std::uint64_t x,
                                  LMethod method) {
  check_order(m);
  if (x < 2) throw DomainError("truncation point must be at least 2");
  f.require_primes_up_to(x);
  const PrimeTable table = primes_up_to(x);
  double log_value = 0;
  for (const auto p : table) {
    const double inv = 1.0 / p;
    const double lp = f.lambda_at(p);
    if (method == LMethod::kEulerProduct) {
      log_value += f.ramified(p) ? -std::log1p(-std::pow(lp, m) * inv)
                                 : local_factor_log(m, angle_of(f, p), inv);
      continue;
    }
    const double theta = f.ramified(p) ? 0.0 : angle_of(f, p);
    double power = 1.0;
    for (int v = 1; power * p <= static_cast<double>(x); ++v) {
      power *= p;
      const double coefficient = f.ramified(p) ? std::pow(lp, m * v) : sym_power_trace(m, theta, v);
      log_value += coefficient / (v * power);
    }
  }
  TruncatedLValue out;
  out.m = m;
  out.value = std::exp(log_value);
  out.truncation = x;
  out.heuristic_error =
      1.0 / std::sqrt(std::log(static_cast<double>(f.k) * static_cast<double>(f.n) * x));
  out.method = method;
  return out;
}

double reference_truncation(int m, int k, std::uint64_t n) {
  check_order(m);
  return std::exp(std::sqrt(std::log(static_cast<double>(k) * n) / (7.0 * (m + 4))));
}

double harmonic_weight(const NewformCoefficients& f, double l_sym2) {
  if (!(l_sym2 > 0)) throw DomainError("L(1, sym^2 f) must be positive");
  return 2 * std::numbers::pi * std::numbers::pi /
         ((f.k - 1) * static_cast<double>(f.level.phi) * l_sym2);
}

GrhReport grh_check(const NewformCoefficients& f, int m, std::uint64_t x) {
  GrhReport report;
  report.m = m;
  report.truncation = x;
  report.value = l_value_truncated(f, m, x, LMethod::kEulerProduct).value;
  const double kn = static_cast<double>(f.k) * static_cast<double>(f.n);
  report.applicable = kn >= 16;
  if (report.applicable) {
    std::tie(report.lower, report.upper) = grh_bound_interval(m, f.k, f.n);
    report.inside = report.lower <= report.value && report.value <= report.upper;
  }
  return report;
}

}  // namespace symlval
