#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperhodge/hodge_values.hpp"

namespace hyperhodge::cli {

enum class Command { Table, Verify, VerifyLocalization, VerifyIdentities };
enum class Format { Text, Csv, Json };

// Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::Table;
  int max_k = 20;
  int max_g = 50;
  Format format = Format::Text;
  std::optional<std::string> out_path;
  std::optional<unsigned> decimal_digits;
  // Fault injection for the verification drivers.
  BaseValues base;
};

// Parses "KIND,I,K=VALUE", e.g. "D,1,4=1/3". Throws std::invalid_argument.
std::pair<HodgeValueKey, Rational> parse_base_override(const std::string& text);

// Writes the table in the requested format. Rows must come from table().
void write_table(std::ostream& os, const std::vector<TableRow>& rows, Format format,
                 std::optional<unsigned> decimal_digits);

// Data goes to `out`, diagnostics to `err`. Both return an exit code.
int run_table(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full command line (args exclude the program name).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hyperhodge::cli
