#include "hyperhodge/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperhodge/suites.hpp"

namespace hyperhodge::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr unsigned kMaxDecimalDigits = 10000;

std::string kind_string(HodgeKind kind) { return std::string(1, symbol(kind)); }

void write_csv(std::ostream& os, const std::vector<TableRow>& rows, std::optional<unsigned> digits) {
  os << "kind,i,k,num,den" << (digits ? ",approx" : "") << "\n";
  for (const auto& row : rows) {
    os << symbol(row.key.kind) << ',' << row.key.i << ',' << row.key.k << ',' << row.value.numerator().get_str()
       << ',' << row.value.denominator().get_str();
    if (digits) os << ',' << row.value.to_decimal(*digits);
    os << "\n";
  }
}

void write_json(std::ostream& os, const std::vector<TableRow>& rows, std::optional<unsigned> digits) {
  os << "[";
  for (std::size_t n = 0; n < rows.size(); ++n) {
    const auto& row = rows[n];
    ordered_json obj;
    obj["kind"] = kind_string(row.key.kind);
    obj["i"] = row.key.i;
    obj["k"] = row.key.k;
    obj["num"] = row.value.numerator().get_str();
    obj["den"] = row.value.denominator().get_str();
    if (digits) obj["approx"] = row.value.to_decimal(*digits);
    os << (n ? ",\n" : "\n") << obj.dump();
  }
  os << (rows.empty() ? "]\n" : "\n]\n");
}

void write_text(std::ostream& os, const std::vector<TableRow>& rows, std::optional<unsigned> digits) {
  std::size_t width = 5;
  for (const auto& row : rows) width = std::max(width, row.value.to_string().size());
  const int value_width = static_cast<int>(width);
  os << std::left << std::setw(6) << "kind" << std::right << std::setw(4) << "i" << std::setw(5) << "k" << "  "
     << std::left << std::setw(digits ? value_width : 0) << "value" << std::right;
  if (digits) os << "  approx";
  os << "\n";
  for (const auto& row : rows) {
    os << std::left << std::setw(6) << symbol(row.key.kind) << std::right << std::setw(4) << row.key.i
       << std::setw(5) << row.key.k << "  " << std::left << std::setw(digits ? value_width : 0)
       << row.value.to_string() << std::right;
    if (digits) os << "  ~" << row.value.to_decimal(*digits);
    os << "\n";
  }
}

// Runs `body` against --out when given, otherwise against `out`.
template <typename Body>
int with_output(const RunConfig& config, std::ostream& out, std::ostream& err, Body&& body) {
  if (!config.out_path) return body(out);
  std::ofstream file(*config.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << *config.out_path << " for writing\n";
    return kExitUsage;
  }
  const int status = body(file);
  file.flush();
  if (!file) {
    err << "error: failed writing " << *config.out_path << "\n";
    return kExitUsage;
  }
  return status;
}

std::vector<SuiteResult> collect_suites(const RunConfig& config) {
  std::vector<SuiteResult> suites;
  switch (config.command) {
    case Command::Verify: {
      suites = run_identity_suites(identity_options_for(config.max_g));
      suites.push_back(run_recursion_suite(config.max_k, config.base));
      const int loc_k = std::min(config.max_k, 20);
      suites.push_back(run_localization_suite(loc_k));
      suites.push_back(run_localization_recursion_suite(loc_k, config.base));
      break;
    }
    case Command::VerifyLocalization:
      suites.push_back(run_localization_suite(config.max_k));
      suites.push_back(run_localization_recursion_suite(config.max_k, config.base));
      break;
    case Command::VerifyIdentities:
      suites = run_identity_suites(identity_options_for(config.max_g));
      break;
    case Command::Table:
      break;
  }
  return suites;
}

void write_suites_text(std::ostream& os, const std::vector<SuiteResult>& suites, const IdentityReport* failure) {
  for (const auto& s : suites) {
    os << std::left << std::setw(28) << s.name << std::right << std::setw(7) << s.passed << " passed"
       << std::setw(5) << s.failed << " failed\n";
    for (const auto& note : s.notes) os << "  note: " << note << "\n";
  }
  if (failure) {
    os << "FAILED\nfirst failure:\n" << failure->render();
  } else {
    os << "all checks passed\n";
  }
}

void write_suites_csv(std::ostream& os, const std::vector<SuiteResult>& suites) {
  os << "suite,passed,failed\n";
  for (const auto& s : suites) os << s.name << ',' << s.passed << ',' << s.failed << "\n";
}

void write_suites_json(std::ostream& os, const std::vector<SuiteResult>& suites, const IdentityReport* failure) {
  ordered_json doc;
  doc["ok"] = failure == nullptr;
  doc["suites"] = ordered_json::array();
  for (const auto& s : suites) {
    ordered_json entry;
    entry["name"] = s.name;
    entry["passed"] = s.passed;
    entry["failed"] = s.failed;
    entry["notes"] = s.notes;
    doc["suites"].push_back(std::move(entry));
  }
  if (failure) {
    doc["first_failure"] = {{"identity", failure->name},
                            {"parameters", failure->parameters},
                            {"computed", hyperhodge::to_string(failure->computed)},
                            {"expected", hyperhodge::to_string(failure->expected)}};
  }
  os << doc.dump(2) << "\n";
}

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "csv") return Format::Csv;
  return Format::Json;
}

}  // namespace

std::pair<HodgeValueKey, Rational> parse_base_override(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw std::invalid_argument("expected KIND,I,K=VALUE, got '" + text + "'");
  std::istringstream key_stream(text.substr(0, eq));
  std::string kind_text;
  std::string i_text;
  std::string k_text;
  if (!std::getline(key_stream, kind_text, ',') || !std::getline(key_stream, i_text, ',') ||
      !std::getline(key_stream, k_text) || kind_text.size() != 1)
    throw std::invalid_argument("expected KIND,I,K=VALUE, got '" + text + "'");
  HodgeValueKey key{parse_kind(kind_text[0]), std::stoi(i_text), std::stoi(k_text)};
  if (!key.is_valid()) throw std::invalid_argument("invalid key in '" + text + "'");
  return {key, Rational::parse(text.substr(eq + 1))};
}

void write_table(std::ostream& os, const std::vector<TableRow>& rows, Format format,
                 std::optional<unsigned> decimal_digits) {
  switch (format) {
    case Format::Csv:
      write_csv(os, rows, decimal_digits);
      break;
    case Format::Json:
      write_json(os, rows, decimal_digits);
      break;
    case Format::Text:
      write_text(os, rows, decimal_digits);
      break;
  }
}

int run_table(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<TableRow> rows;
  try {
    rows = table(config.max_k, config.base);
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return with_output(config, out, err, [&](std::ostream& os) {
    write_table(os, rows, config.format, config.decimal_digits);
    return kExitOk;
  });
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::vector<SuiteResult> suites = collect_suites(config);
  const IdentityReport* failure = nullptr;
  for (const auto& s : suites) {
    if (s.first_failure) {
      failure = &*s.first_failure;
      break;
    }
  }
  const int status = with_output(config, out, err, [&](std::ostream& os) {
    switch (config.format) {
      case Format::Csv:
        write_suites_csv(os, suites);
        break;
      case Format::Json:
        write_suites_json(os, suites, failure);
        break;
      case Format::Text:
        write_suites_text(os, suites, failure);
        break;
    }
    return kExitOk;
  });
  if (status != kExitOk) return status;
  if (failure) {
    // The full report also goes to diagnostics so it is visible whatever the format.
    err << "verification failed\n" << failure->render();
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact calculator and verifier for linear hyperelliptic Hodge integrals", "hyperhodge"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format_text = "text";
  std::vector<std::string> overrides;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--max-k", config.max_k, "Largest number of twisted points (even, >= 4)");
    sub->add_option("--max-g", config.max_g, "Largest genus for the identity sweeps (>= 1)");
    sub->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--out", config.out_path, "Write data to this file instead of standard output");
    sub->add_option("--decimal", config.decimal_digits, "Add an approximate decimal column with this many digits");
    sub->add_option("--corrupt-base", overrides, "Replace a base value, KIND,I,K=VALUE (testing)")->group("");
  };

  struct Entry {
    const char* name;
    const char* help;
    Command command;
  };
  const Entry entries[] = {
      {"table", "Emit D and d values, cross-checked closed form against recursion", Command::Table},
      {"verify", "Run every verification suite", Command::Verify},
      {"verify-localization", "Check that the auxiliary localization integrals vanish", Command::VerifyLocalization},
      {"verify-identities", "Check the combinatorial identities", Command::VerifyIdentities},
  };
  for (const auto& entry : entries) {
    CLI::App* sub = app.add_subcommand(entry.name, entry.help);
    add_common(sub);
    sub->callback([&config, cmd = entry.command] { config.command = cmd; });
  }

  std::vector<const char*> argv{"hyperhodge"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  config.format = parse_format(format_text);
  if (config.max_k < 4 || config.max_k % 2 != 0) {
    err << "usage error: --max-k must be an even integer >= 4, got " << config.max_k << "\n";
    return kExitUsage;
  }
  if (config.max_g < 1) {
    err << "usage error: --max-g must be >= 1, got " << config.max_g << "\n";
    return kExitUsage;
  }
  if (config.decimal_digits && *config.decimal_digits > kMaxDecimalDigits) {
    err << "usage error: --decimal must be <= " << kMaxDecimalDigits << "\n";
    return kExitUsage;
  }
  for (const auto& entry_text : overrides) {
    try {
      auto [key, value] = parse_base_override(entry_text);
      config.base.override_value(key, value);
    } catch (const std::exception& e) {
      err << "usage error: --corrupt-base: " << e.what() << "\n";
      return kExitUsage;
    }
  }

  if (config.command == Command::Table) return run_table(config, out, err);
  return run_verify(config, out, err);
}

}  // namespace hyperhodge::cli
