#include "symlval/cli.hpp"

#include <CLI11.hpp>
#include <array>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <optional>
#include <ostream>

#include "symlval/errors.hpp"
#include "symlval/hecke.hpp"
#include "symlval/moments.hpp"
#include "symlval/montecarlo.hpp"
#include "symlval/parallel.hpp"

namespace symlval::cli {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string csv_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return "";
        else if constexpr (std::is_same_v<T, double>) return format_double(v);
        else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else return v;
      },
      cell);
}

nlohmann::json json_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
        else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return v;
        } else return v;
      },
      cell);
}

Cell optional_cell(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

double normalized_remainder(double direct, double approx, double ar) {
  const double l = std::log(ar);
  return std::abs(direct - approx) * l * l * l / ar;
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  throw DomainError("format must be 'csv' or 'json'");
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) throw Error("table row has wrong number of cells");
  rows_.push_back(std::move(row));
}

void Table::write(std::ostream& out, Format format) const {
  if (format == Format::kCsv) {
    for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
    out << '\n';
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
      out << '\n';
    }
    return;
  }
  nlohmann::json doc;
  doc["command"] = command_;
  doc["columns"] = columns_;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : rows_) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[columns_[i]] = json_cell(row[i]);
    doc["rows"].push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

CommandResult cmd_constants(const std::vector<int>& ms, const std::vector<Sign>& signs,
                            std::uint64_t cutoff, double tol) {
  CommandResult result{Table("constants", {"m", "sign", "A", "B", "B_closed_form", "abs_diff",
                                           "tail_bound", "precision_warning"})};
  for (const int m : ms) {
    for (const Sign sign : signs) {
      const ExtremalConstants c = b_const(m, sign, cutoff, tol);
      const auto closed = b_closed_form(m, sign);
      Cell diff = std::monostate{};
      if (closed) diff = std::abs(c.B - *closed);
      result.table.add_row({std::int64_t{m}, to_string(sign), c.A, c.B, optional_cell(closed), diff,
                            c.tail_bound, c.precision_warning});
      if (c.precision_warning) result.tolerances_met = false;
    }
  }
  return result;
}

CommandResult cmd_moments(int m, const std::vector<double>& zs, std::uint64_t cutoff,
                          std::uint64_t level, double tol) {
  CommandResult result{Table("moments", {"m", "z", "log_M", "log_M_N", "N", "tail_bound",
                                         "precision_warning"})};
  for (const double z : zs) {
    const MomentResult r = moment(m, z, cutoff, tol);
    const double base = r.log_value.real();
    const double with_level = base + level_factor_log(m, z, level);
    result.table.add_row({std::int64_t{m}, z, base, with_level, static_cast<std::int64_t>(level),
                          r.tail_bound, r.precision_warning});
    if (r.precision_warning) result.tolerances_met = false;
  }
  return result;
}

CommandResult cmd_asympt(int m, Sign sign, const std::vector<double>& rs, std::uint64_t cutoff,
                         double tol) {
  CommandResult result{Table("asympt", {"m", "sign", "r", "direct", "order1", "order2", "order3",
                                        "remainder1", "remainder2", "remainder3",
                                        "precision_warning"})};
  const AsymptoticInputs in = standard_asymptotic_inputs(m, sign);
  for (const double r : rs) {
    std::array<double, 3> approx{};
    for (int order = 1; order <= 3; ++order) approx[order - 1] = log_moment_asymptotic(in, r, order);
    const MomentResult direct = moment(m, sign_factor(sign) * r, cutoff, tol);
    const double d = direct.log_value.real();
    const double ar = in.A * r;
    result.table.add_row({std::int64_t{m}, to_string(sign), r, d, approx[0], approx[1], approx[2],
                          normalized_remainder(d, approx[0], ar),
                          normalized_remainder(d, approx[1], ar),
                          normalized_remainder(d, approx[2], ar), direct.precision_warning});
    if (direct.precision_warning) result.tolerances_met = false;
  }
  return result;
}

CommandResult cmd_simulate(int m, Sign sign, const std::vector<double>& ts, std::uint64_t samples,
                           std::uint64_t cutoff, std::uint64_t seed) {
  CommandResult result{Table("simulate", {"t", "empirical_prob", "stderr", "predicted_prob"})};
  SimulationConfig config;
  config.m = m;
  config.sign = sign;
  config.samples = samples;
  config.prime_cutoff = cutoff;
  config.seed = seed;
  for (const auto& row : tail_distribution(m, sign, ts, config))
    result.table.add_row({row.t, row.empirical_prob, row.std_error, row.predicted_prob});
  return result;
}

CommandResult cmd_evaluate(const std::string& path, int m, std::uint64_t x,
                           const std::string& method) {
  const NewformCoefficients f = load_coefficients(path);
  std::vector<LMethod> methods;
  if (method == "both") methods = {LMethod::kEulerProduct, LMethod::kDirichletLog};
  else methods = {parse_method(method)};

  CommandResult result{Table("evaluate", {"method", "m", "k", "N", "x", "value", "heuristic_error",
                                          "grh_applicable", "grh_lower", "grh_upper", "grh_inside",
                                          "harmonic_weight", "methods_difference"})};
  std::vector<TruncatedLValue> values;
  for (const LMethod mt : methods) values.push_back(l_value_truncated(f, m, x, mt));
  const GrhReport grh = grh_check(f, m, x);
  Cell difference = std::monostate{};
  if (values.size() == 2) difference = std::abs(values[0].value - values[1].value);
  for (const auto& v : values) {
    Cell weight = std::monostate{};
    if (m == 2) weight = harmonic_weight(f, v.value);
    Cell lower = std::monostate{}, upper = std::monostate{}, inside = std::monostate{};
    if (grh.applicable) {
      lower = grh.lower;
      upper = grh.upper;
      inside = v.value >= grh.lower && v.value <= grh.upper;
    }
    result.table.add_row({to_string(v.method), std::int64_t{m}, std::int64_t{f.k},
                          static_cast<std::int64_t>(f.n), static_cast<std::int64_t>(x), v.value,
                          v.heuristic_error, grh.applicable, lower, upper, inside, weight,
                          difference});
  }
  return result;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constants, moments and distribution laws of L(1, sym^m f)"};
  app.require_subcommand(1);
  std::string format = "csv";
  std::uint64_t seed = 0;
  unsigned threads = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", seed, "Random seed");
    cmd->add_option("--threads", threads, "Worker threads (default: SYMLVAL_THREADS or 1)");
  };

  std::vector<int> ms{1, 2, 3, 4};
  std::vector<std::string> sign_texts{"+"};
  std::uint64_t cutoff = 0;
  double tol = 1e-6;
  auto* constants = app.add_subcommand("constants", "A and B constants against their closed forms");
  constants->add_option("--m", ms)->delimiter(',');
  constants->add_option("--sign", sign_texts)->delimiter(',');
  constants->add_option("--cutoff", cutoff);
  constants->add_option("--tol", tol);
  add_common(constants);

  int m = 1;
  std::vector<double> zs{0.0};
  std::uint64_t level = 1;
  auto* moments = app.add_subcommand("moments", "log M^z and the level-corrected log M^z(N)");
  moments->add_option("--m", m);
  moments->add_option("--z", zs)->delimiter(',');
  moments->add_option("--N", level);
  moments->add_option("--cutoff", cutoff);
  moments->add_option("--tol", tol);
  add_common(moments);

  std::string sign_text = "+";
  std::vector<double> rs{50, 100, 200, 400};
  auto* asympt = app.add_subcommand("asympt", "log M^{+-r} against its asymptotic expansion");
  asympt->add_option("--m", m);
  asympt->add_option("--sign", sign_text);
  asympt->add_option("--r", rs)->delimiter(',');
  asympt->add_option("--cutoff", cutoff);
  asympt->add_option("--tol", tol);
  add_common(asympt);

  std::vector<double> ts{1, 2, 3, 4, 5, 6};
  std::uint64_t samples = 100'000;
  auto* simulate = app.add_subcommand("simulate", "Tail distribution of the random Euler product");
  simulate->add_option("--m", m);
  simulate->add_option("--sign", sign_text);
  simulate->add_option("--t", ts)->delimiter(',');
  simulate->add_option("--samples", samples);
  simulate->add_option("--cutoff", cutoff);
  add_common(simulate);

  std::string file;
  std::uint64_t x = 1000;
  std::string method = "euler-product";
  auto* evaluate = app.add_subcommand("evaluate", "Truncated L(1, sym^m f) from a coefficient file");
  evaluate->add_option("--file", file)->required();
  evaluate->add_option("--m", m);
  evaluate->add_option("--x", x);
  evaluate->add_option("--method", method)
      ->check(CLI::IsMember({"euler-product", "dirichlet-log", "both"}));
  add_common(evaluate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; every usage error maps to status 1.
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  if (threads > 0) set_thread_count(threads);
  try {
    const Format fmt = parse_format(format);
    std::optional<CommandResult> result;
    if (*constants) {
      std::vector<Sign> signs;
      for (const auto& s : sign_texts) signs.push_back(parse_sign(s));
      result = cmd_constants(ms, signs, cutoff ? cutoff : kDefaultConstantsCutoff, tol);
    } else if (*moments) {
      result = cmd_moments(m, zs, cutoff ? cutoff : kDefaultMomentCutoff, level, tol);
    } else if (*asympt) {
      result = cmd_asympt(m, parse_sign(sign_text), rs, cutoff ? cutoff : kDefaultMomentCutoff, tol);
    } else if (*simulate) {
      err << "simulating " << samples << " samples (m = " << m << ", seed = " << seed << ")\n";
      result = cmd_simulate(m, parse_sign(sign_text), ts, samples,
                            cutoff ? cutoff : kDefaultSimulationCutoff, seed);
    } else if (*evaluate) {
      result = cmd_evaluate(file, m, x, method);
    }
    result->table.write(out, fmt);
    if (!result->tolerances_met) {
      err << "warning: requested tolerance not met\n";
      return 2;
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace symlval::cli
