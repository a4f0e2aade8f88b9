#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "specbound/graph6.hpp"

namespace specbound::cli {
namespace {

// Fixed-point rendering for human-facing output; tiny rounding residue is
// printed as 0 rather than -0.000000.
std::string fixed(double x, int digits = 6) {
  if (std::abs(x) < 0.5 * std::pow(10.0, -digits)) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

template <typename T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? to_json(*v) : nlohmann::json(nullptr);
}

}  // namespace

Analysis analyze_graph(const Graph& g, double tol) {
  auto spec = spectrum(g, tol);
  auto bound = product_bound_report(g, spec, tol);
  Analysis a{g, profile(g), spec, bound, std::nullopt, std::nullopt, std::nullopt, tol};
  if (g.order() <= 64) {
    a.alpha = independence_number(g);
    a.comparison = compare_bounds(g, *a.alpha, tol);
  }
  if (a.profile.bipartition) a.bipartite = bipartite_product_bound(g, spec, tol);
  return a;
}

nlohmann::json to_json(const EqualityWitness& w) {
  return {{"coneVertex", w.cone_vertex},
          {"baseDegree", w.base_degree},
          {"baseLambdaMin", w.base_lambda_min},
          {"phiValue", w.phi_value},
          {"conditionHolds", w.condition_holds}};
}

nlohmann::json to_json(const BoundReport& r) {
  return {{"n", r.order},
          {"maxDegree", r.max_degree},
          {"minDegree", r.min_degree},
          {"lambdaMax", r.lambda_max},
          {"lambdaMin", r.lambda_min},
          {"product", r.product},
          {"slack", r.slack},
          {"equalityWithinTol", r.equality_within_tol},
          {"witness", optional_json(r.witness)}};
}

nlohmann::json to_json(const Comparison& c) {
  return {{"newBound", c.new_bound},
          {"haemersBound", c.haemers_bound},
          {"winner", to_string(c.winner)},
          {"alphaThreshold", c.alpha_threshold},
          {"alpha", c.alpha}};
}

nlohmann::json to_json(const BipartiteBound& b) {
  return {{"lambda1Squared", b.lambda1_squared},
          {"meanDeg1", b.mean_degree_larger},
          {"meanDeg2", b.mean_degree_smaller},
          {"boundHolds", b.bound_holds},
          {"equality", b.equality},
          {"isBiregular", b.biregular}};
}

nlohmann::json to_json(const SurveyRow& row) {
  return {{"order", row.order},
          {"irregularConnectedCount", row.irregular_connected_count},
          {"newWins", row.new_wins},
          {"haemersWins", row.haemers_wins},
          {"ties", row.ties},
          {"proportion", row.proportion()}};
}

nlohmann::json to_json(const Analysis& a) {
  nlohmann::json j;
  j["graph6"] = a.graph.order() <= kGraph6MaxOrder ? nlohmann::json(to_graph6(a.graph)) : nlohmann::json(nullptr);
  j["n"] = a.graph.order();
  j["edges"] = a.graph.size();
  j["degrees"] = a.profile.degrees;
  j["maxDegree"] = a.profile.max_degree;
  j["minDegree"] = a.profile.min_degree;
  j["regularDegree"] = a.profile.regular_degree ? nlohmann::json(*a.profile.regular_degree) : nlohmann::json(nullptr);
  j["bipartite"] = a.profile.bipartition.has_value();
  j["spectrum"] = std::vector<double>(a.spectrum.values().begin(), a.spectrum.values().end());
  j["productBound"] = to_json(a.bound);
  j["independenceNumber"] = a.alpha ? nlohmann::json(*a.alpha) : nlohmann::json(nullptr);
  j["comparison"] = optional_json(a.comparison);
  j["bipartiteBound"] = optional_json(a.bipartite);
  j["tolerance"] = a.tolerance;
  return j;
}

std::string to_text(const Analysis& a) {
  std::ostringstream os;
  const auto& r = a.bound;
  if (a.graph.order() <= kGraph6MaxOrder) os << "graph6:        " << to_graph6(a.graph) << '\n';
  os << "vertices:      " << a.graph.order() << "  edges: " << a.graph.size() << '\n';
  os << "degrees:       max " << r.max_degree << ", min " << r.min_degree;
  if (a.profile.regular_degree) os << " (regular)";
  os << '\n';
  os << "spectrum:     ";
  for (double x : a.spectrum.values()) os << ' ' << fixed(x);
  os << '\n';
  os << "lambda_max:    " << fixed(r.lambda_max) << '\n';
  os << "lambda_min:    " << fixed(r.lambda_min) << '\n';
  os << "-lmin*lmax:    " << fixed(r.product) << "  (max degree " << r.max_degree << ", slack "
     << fixed(r.slack, 9) << ")\n";
  os << "equality:      " << (r.equality_within_tol ? "yes" : "no") << '\n';
  if (r.witness) {
    const auto& w = *r.witness;
    os << "witness:       cone vertex " << w.cone_vertex << " over a " << w.base_degree
       << "-regular base, lambda_min(base) " << fixed(w.base_lambda_min) << " >= phi "
       << fixed(w.phi_value) << '\n';
  } else {
    os << "witness:       none\n";
  }
  if (a.comparison) {
    const auto& c = *a.comparison;
    os << "alpha:         " << c.alpha << "  (crossover threshold " << fixed(c.alpha_threshold) << ")\n";
    os << "bounds:        max degree " << fixed(c.new_bound) << " vs alpha-bound "
       << fixed(c.haemers_bound) << "  -> " << to_string(c.winner) << '\n';
  }
  if (a.bipartite) {
    const auto& b = *a.bipartite;
    os << "bipartite:     lambda_1^2 " << fixed(b.lambda1_squared) << " >= " << fixed(b.mean_degree_larger)
       << " * " << fixed(b.mean_degree_smaller) << "  equality " << (b.equality ? "yes" : "no")
       << ", biregular " << (b.biregular ? "yes" : "no") << '\n';
  }
  return os.str();
}

std::string to_csv_row(const Analysis& a) {
  std::ostringstream os;
  const auto& r = a.bound;
  os << a.graph.order() << ',' << a.graph.size() << ',' << r.max_degree << ',' << r.min_degree << ','
     << fixed(r.lambda_max, 9) << ',' << fixed(r.lambda_min, 9) << ',' << fixed(r.product, 9) << ','
     << fixed(r.slack, 9) << ',' << (r.equality_within_tol ? 1 : 0) << ',';
  if (r.witness) os << r.witness->cone_vertex;
  os << ',';
  if (a.comparison)
    os << a.comparison->alpha << ',' << fixed(a.comparison->haemers_bound, 9) << ','
       << to_string(a.comparison->winner);
  else
    os << ",,";
  return os.str();
}

std::string to_csv_row(const SurveyRow& row) {
  std::ostringstream os;
  os << row.order << ',' << row.irregular_connected_count << ',' << row.new_wins << ','
     << row.haemers_wins << ',' << row.ties << ',' << fixed(row.proportion());
  return os.str();
}

std::string survey_text(const std::vector<SurveyRow>& rows) {
  std::ostringstream os;
  char line[128];
  std::snprintf(line, sizeof line, "%-6s %10s %6s %8s %6s  %s\n", "order", "irregular", "new",
                "haemers", "ties", "proportion");
  os << line;
  for (const auto& r : rows) {
    const std::string ratio = std::to_string(r.new_wins) + "/" + std::to_string(r.irregular_connected_count);
    std::snprintf(line, sizeof line, "%-6zu %10zu %6zu %8zu %6zu  %s = %s\n", r.order,
                  r.irregular_connected_count, r.new_wins, r.haemers_wins, r.ties, ratio.c_str(),
                  fixed(r.proportion(), 3).c_str());
    os << line;
  }
  return os.str();
}

}  // namespace specbound::cli
