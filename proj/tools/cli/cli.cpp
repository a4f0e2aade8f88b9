#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "edge_list.hpp"
#include "family_spec.hpp"
#include "report.hpp"
#include "specbound/enumeration.hpp"
#include "specbound/graph6.hpp"

namespace specbound::cli {
namespace {

constexpr std::size_t kFamilyOrderBudget = 300;

constexpr const char* kFamilyHelp =
    "Family spec: [cone:]* kind[:param]*\n"
    "  complete:n  empty:n  path:n  cycle:n  star:k  wheel:k\n"
    "  completeBipartite:a:b  hypercube:k  kneser:m:t  odd:k\n"
    "Each 'cone:' prefix joins a new vertex to every existing vertex,\n"
    "e.g. cone:kneser:5:2 is the Petersen graph plus an apex.";

// Either a graph6 line or an "n: u-v,..." edge list.
Graph parse_graph_line(std::string_view line) {
  if (line.find(':') != std::string_view::npos) return parse_edge_list(line);
  return parse_graph6(line);
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> read_input_lines(const std::string& path) {
  if (path == "-") return read_lines(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_lines(in);
}

Graph read_single_graph(const std::string& input) {
  if (!std::filesystem::exists(input)) return parse_graph_line(input);
  std::optional<Graph> g;
  const auto lines = read_input_lines(input);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    if (g) throw std::runtime_error(input + ": expected a single graph, found another on line " +
                                    std::to_string(i + 1));
    try {
      g = parse_graph_line(lines[i]);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(input + ": line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  if (!g) throw std::runtime_error(input + ": no graph found");
  return *g;
}

void emit(const CliConfig& config, const std::string& data, std::ostream& out) {
  if (!config.output_path) {
    out << data;
    return;
  }
  std::ofstream file(*config.output_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + *config.output_path + "'");
  file << data;
  if (!file) throw std::runtime_error("write to '" + *config.output_path + "' failed");
}

std::string render(const Analysis& a, const CliConfig& config, nlohmann::json extra = {}) {
  switch (config.format) {
    case OutputFormat::json: {
      auto j = to_json(a);
      for (auto& [k, v] : extra.items()) j[k] = v;
      return j.dump(2) + "\n";
    }
    case OutputFormat::csv:
      return std::string(kAnalysisCsvHeader) + "\n" + to_csv_row(a) + "\n";
    case OutputFormat::text:
      break;
  }
  return to_text(a);
}

int cmd_analyze(const std::string& input, const std::string& family, const CliConfig& config,
                std::ostream& out) {
  if (input.empty() == family.empty())
    throw std::invalid_argument("analyze needs exactly one of INPUT or --family");
  Graph g = family.empty() ? read_single_graph(input) : build(parse_family_spec(family));
  emit(config, render(analyze_graph(g, config.tolerance), config), out);
  return 0;
}

int cmd_survey(std::size_t max_n, const std::string& universe, const CliConfig& config,
               std::ostream& out) {
  if (max_n < 4 || max_n > 8)
    throw std::invalid_argument("survey: MAXN must be in 4..8, got " + std::to_string(max_n));
  SurveyOptions options{config.tolerance, config.threads.value_or(1)};

  std::vector<Graph> external;
  if (!universe.empty()) {
    std::ifstream in(universe);
    if (!in) throw std::runtime_error("cannot open universe file '" + universe + "'");
    external = read_graph6_stream(in);
  }

  std::vector<SurveyRow> rows;
  for (std::size_t n = 4; n <= max_n; ++n)
    rows.push_back(universe.empty() ? survey(n, options) : survey_graphs(n, external, options));

  std::string data;
  switch (config.format) {
    case OutputFormat::csv:
      data = std::string(kSurveyCsvHeader) + "\n";
      for (const auto& r : rows) data += to_csv_row(r) + "\n";
      break;
    case OutputFormat::json: {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : rows) j.push_back(to_json(r));
      data = j.dump(2) + "\n";
      break;
    }
    case OutputFormat::text:
      data = survey_text(rows);
      break;
  }
  emit(config, data, out);
  return 0;
}

int cmd_family(const std::string& text, bool check_equality, const CliConfig& config,
               std::ostream& out, std::ostream& err) {
  const auto family = parse_family_spec(text);
  const std::size_t order = order_of(family);
  if (order > kFamilyOrderBudget)
    throw std::invalid_argument("family '" + text + "' has " + std::to_string(order) +
                                " vertices; the limit is " + std::to_string(kFamilyOrderBudget));
  const auto analysis = analyze_graph(build(family), config.tolerance);
  const auto expected = expected_equality(family);
  const bool observed = analysis.bound.equality_within_tol;
  const bool structural = analysis.bound.witness.has_value();

  nlohmann::json extra;
  extra["family"] = text;
  extra["expectedEquality"] = expected ? nlohmann::json(*expected) : nlohmann::json(nullptr);

  int status = 0;
  std::string verdict;
  if (check_equality) {
    if (!expected) throw std::invalid_argument("no stated equality verdict for family '" + text + "'");
    const bool ok = observed == *expected && structural == *expected;
    verdict = ok ? "passed" : "failed";
    extra["check"] = verdict;
    if (!ok) {
      err << "error: family " << text << ": expected " << (*expected ? "equality" : "strict inequality")
          << ", numerical verdict " << (observed ? "equality" : "strict")
          << ", structural verdict " << (structural ? "equality" : "strict") << '\n';
      status = 1;
    }
  }

  std::string data;
  if (config.format == OutputFormat::text) {
    data = "family:        " + text + "\n" + to_text(analysis);
    if (expected) data += std::string("expected:      ") + (*expected ? "equality" : "strict inequality") + "\n";
    if (!verdict.empty()) data += "check:         " + verdict + "\n";
  } else {
    data = render(analysis, config, extra);
  }
  emit(config, data, out);
  return status;
}

int cmd_convert(const std::string& input, const std::string& to, const CliConfig& config,
                std::ostream& out) {
  const bool to_g6 = to == "graph6";
  const auto lines = read_input_lines(input);
  std::string data;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    try {
      data += to_g6 ? to_graph6(parse_edge_list(lines[i])) : to_edge_list(parse_graph6(lines[i]));
      data += '\n';
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(input + ": line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  emit(config, data, out);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral bound -lambda_min * lambda_max >= max degree: analysis, equality "
               "certificates and small-graph surveys"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig config;
  std::string format = "text";
  std::string out_path;
  std::size_t threads = 1;
  app.add_option("--tol", config.tolerance, "Comparison tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write data to PATH instead of stdout");

  auto* analyze = app.add_subcommand("analyze", "Bounds, spectrum and equality witness for one graph");
  std::string analyze_input, analyze_family;
  analyze->add_option("input", analyze_input, "graph6 string, 'n: u-v,...' edge list, or a file holding one");
  analyze->add_option("--family", analyze_family, "Build the graph from a family spec instead");
  analyze->footer(kFamilyHelp);

  auto* survey_cmd = app.add_subcommand("survey", "Compare the bounds over all irregular connected graphs");
  std::size_t max_n = 8;
  std::string universe;
  survey_cmd->add_option("maxn", max_n, "Largest order (4..8)")->required();
  survey_cmd->add_option("--universe", universe, "Take graphs from a graph6 file instead of generating them");
  auto* threads_opt = survey_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* family = app.add_subcommand("family", "Analyze a member of a named graph family");
  std::string family_text;
  bool check_equality = false;
  family->add_option("spec", family_text, "Family spec")->required();
  family->add_flag("--check-equality", check_equality, "Fail unless the expected equality verdict is observed");
  family->footer(kFamilyHelp);

  auto* convert = app.add_subcommand("convert", "Convert between edge lists and graph6, one graph per line");
  std::string convert_input, convert_to;
  convert->add_option("input", convert_input, "Input file ('-' for stdin)")->required();
  convert->add_option("--to", convert_to, "Target format")
      ->required()
      ->check(CLI::IsMember({"graph6", "edges"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  config.format = format == "json" ? OutputFormat::json : format == "csv" ? OutputFormat::csv : OutputFormat::text;
  if (!out_path.empty()) config.output_path = out_path;
  if (threads_opt->count() > 0) config.threads = threads;

  try {
    if (analyze->parsed()) return cmd_analyze(analyze_input, analyze_family, config, out);
    if (survey_cmd->parsed()) return cmd_survey(max_n, universe, config, out);
    if (family->parsed()) return cmd_family(family_text, check_equality, config, out, err);
    if (convert->parsed()) return cmd_convert(convert_input, convert_to, config, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace specbound::cli
