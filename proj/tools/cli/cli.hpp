#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace specbound::cli {

enum class OutputFormat { text, json, csv };

struct CliConfig {
  double tolerance = 1e-7;
  OutputFormat format = OutputFormat::text;
  std::optional<std::string> output_path;
  std::optional<std::size_t> threads;
};

/// Entry point shared by the executable and the tests. Data goes to `out`
/// (or --out), diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace specbound::cli
