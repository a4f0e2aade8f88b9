#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "specbound/bounds.hpp"
#include "specbound/enumeration.hpp"
#include "specbound/graph.hpp"
#include "specbound/spectra.hpp"

namespace specbound::cli {

/// Everything the analyze/family commands print about one graph.
struct Analysis {
  Graph graph;
  StructuralProfile profile;
  Spectrum spectrum;
  BoundReport bound;
  // alpha and the comparison need n <= 64 for the exact solver.
  std::optional<std::size_t> alpha;
  std::optional<Comparison> comparison;
  std::optional<BipartiteBound> bipartite;
  double tolerance;
};

/// Throws std::domain_error if g is disconnected or has a single vertex.
Analysis analyze_graph(const Graph& g, double tol);

nlohmann::json to_json(const EqualityWitness& w);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const Comparison& c);
nlohmann::json to_json(const BipartiteBound& b);
nlohmann::json to_json(const SurveyRow& row);
nlohmann::json to_json(const Analysis& a);

std::string to_text(const Analysis& a);

inline constexpr const char* kAnalysisCsvHeader =
    "n,edges,max_degree,min_degree,lambda_max,lambda_min,product,slack,equality,cone_vertex,"
    "alpha,haemers_bound,winner";
std::string to_csv_row(const Analysis& a);

inline constexpr const char* kSurveyCsvHeader = "n,count,new_wins,haemers_wins,ties,proportion";
std::string to_csv_row(const SurveyRow& row);
std::string survey_text(const std::vector<SurveyRow>& rows);

}  // namespace specbound::cli
