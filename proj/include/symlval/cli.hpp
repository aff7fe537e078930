#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "symlval/constants.hpp"

namespace symlval::cli {

enum class Format { kCsv, kJson };
Format parse_format(const std::string& text);

using Cell = std::variant<std::monostate, double, std::int64_t, std::string, bool>;

// Column-oriented result of a command; rendered as CSV or as a JSON object
// {"command": ..., "columns": [...], "rows": [{...}, ...]}.
class Table {
 public:
  Table(std::string command, std::vector<std::string> columns)
      : command_(std::move(command)), columns_(std::move(columns)) {}

  void add_row(std::vector<Cell> row);
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  void write(std::ostream& out, Format format) const;

 private:
  std::string command_;
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

struct CommandResult {
  Table table;
  // False when some requested tolerance was not met; the table is still
  // complete and the process exits with status 2.
  bool tolerances_met = true;
};

CommandResult cmd_constants(const std::vector<int>& ms, const std::vector<Sign>& signs,
                            std::uint64_t cutoff, double tol);
CommandResult cmd_moments(int m, const std::vector<double>& zs, std::uint64_t cutoff,
                          std::uint64_t level, double tol);
CommandResult cmd_asympt(int m, Sign sign, const std::vector<double>& rs, std::uint64_t cutoff,
                         double tol);
CommandResult cmd_simulate(int m, Sign sign, const std::vector<double>& ts, std::uint64_t samples,
                           std::uint64_t cutoff, std::uint64_t seed);
// method: "euler-product", "dirichlet-log" or "both".
CommandResult cmd_evaluate(const std::string& path, int m, std::uint64_t x,
                           const std::string& method);

// Entry point: data to `out`, diagnostics to `err`. Returns the exit status
// (0 success, 1 error, 2 tolerance not met).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symlval::cli
