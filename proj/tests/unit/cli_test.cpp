#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli/cli.hpp"
#include "cli/edge_list.hpp"
#include "cli/family_spec.hpp"
#include "specbound/families.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "specbound");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = specbound::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

fs::path scratch(const std::string& name, const std::string& contents) {
  const fs::path p = fs::temp_directory_path() / ("specbound_cli_test_" + name);
  std::ofstream(p, std::ios::binary) << contents;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("analyze K3") {
  const auto r = run({"--format", "json", "analyze", "Bw"});
  REQUIRE(r.status == 0);
  CHECK(r.err.empty());
  const auto j = json::parse(r.out);
  CHECK(j["n"] == 3);
  CHECK(j["maxDegree"] == 2);
  const auto spec = j["spectrum"].get<std::vector<double>>();
  REQUIRE(spec.size() == 3);
  CHECK(spec[0] == doctest::Approx(2.0));
  CHECK(spec[1] == doctest::Approx(-1.0));
  CHECK(spec[2] == doctest::Approx(-1.0));
  CHECK(j["productBound"]["product"].get<double>() == doctest::Approx(2.0));
  CHECK(j["productBound"]["equalityWithinTol"] == true);
  CHECK(j["productBound"]["witness"]["coneVertex"] == 0);
}

TEST_CASE("analyze P3 finds the star witness") {
  const auto r = run({"--format", "json", "analyze", "Bg"});
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j["productBound"]["product"].get<double>() == doctest::Approx(2.0));
  CHECK(j["productBound"]["equalityWithinTol"] == true);
  CHECK(j["productBound"]["witness"]["coneVertex"] == 1);
  CHECK(j["productBound"]["witness"]["baseDegree"] == 0);
  CHECK(j["bipartiteBound"]["equality"] == true);
}

TEST_CASE("analyze a family member, an edge list and a file") {
  const auto r = run({"--format", "json", "analyze", "--family", "cone:kneser:5:2"});
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j["n"] == 11);
  CHECK(std::abs(j["productBound"]["product"].get<double>() - 10.0) <= 1e-9);
  CHECK(j["productBound"]["equalityWithinTol"] == true);

  const auto edges = run({"--format", "json", "analyze", "3: 0-1,1-2,0-2"});
  REQUIRE(edges.status == 0);
  CHECK(json::parse(edges.out)["graph6"] == "Bw");

  const auto file = scratch("one.g6", "\nBw\n\n");
  CHECK(run({"analyze", file.string()}).status == 0);
  const auto two = scratch("two.g6", "Bw\nBg\n");
  const auto bad = run({"analyze", two.string()});
  CHECK(bad.status != 0);
  CHECK(bad.err.find("line 2") != std::string::npos);
}

TEST_CASE("analyze text and csv output") {
  const auto text = run({"analyze", "Bw"});
  REQUIRE(text.status == 0);
  CHECK(text.out.find("equality") != std::string::npos);

  const auto csv = run({"--format", "csv", "analyze", "Bg"});
  REQUIRE(csv.status == 0);
  std::istringstream lines(csv.out);
  std::string header, row, extra;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == "n,edges,max_degree,min_degree,lambda_max,lambda_min,product,slack,equality,cone_vertex,alpha,"
                  "haemers_bound,winner");
  CHECK(row.rfind("3,2,2,1,", 0) == 0);
  CHECK_FALSE(std::getline(lines, extra));
}

TEST_CASE("analyze errors go to the error stream") {
  const auto disconnected = run({"analyze", "4: 0-1,2-3"});
  CHECK(disconnected.status != 0);
  CHECK(disconnected.out.empty());
  CHECK(disconnected.err.find("error:") != std::string::npos);

  for (std::vector<std::string> args : {std::vector<std::string>{"analyze", "B!"},
                                        {"analyze"},
                                        {"analyze", "Bw", "--family", "complete:3"},
                                        {"analyze", "--family", "triangle:3"},
                                        {"--tol", "-1", "analyze", "Bw"},
                                        {"--format", "xml", "analyze", "Bw"},
                                        {"frobnicate"}}) {
    const auto r = run(args);
    CHECK(r.status != 0);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("survey 5 as csv") {
  const auto r = run({"--format", "csv", "survey", "5"});
  REQUIRE(r.status == 0);
  CHECK(r.out ==
        "n,count,new_wins,haemers_wins,ties,proportion\n"
        "4,4,2,1,1,0.500000\n"
        "5,19,14,4,1,0.736842\n");
}

TEST_CASE("survey output does not depend on the thread count") {
  const auto one = run({"--format", "csv", "survey", "7"});
  REQUIRE(one.status == 0);
  for (const char* k : {"2", "5", "16"}) {
    const auto many = run({"--format", "csv", "survey", "7", "--threads", k});
    REQUIRE(many.status == 0);
    CHECK(many.out == one.out);
  }
  CHECK(run({"survey", "7", "--threads", "0"}).status != 0);
}

TEST_CASE("survey over an external universe") {
  const auto builtin = run({"--format", "csv", "survey", "7"});
  const auto external =
      run({"--format", "csv", "survey", "7", "--universe", SPECBOUND_TEST_DATA "/atlas_connected_upto7.g6"});
  REQUIRE(external.status == 0);
  CHECK(external.out == builtin.out);

  CHECK(run({"survey", "3"}).status != 0);
  CHECK(run({"survey", "9"}).status != 0);
  CHECK(run({"survey", "5", "--universe", "/nonexistent/universe.g6"}).status != 0);
}

TEST_CASE("survey json and text") {
  const auto j = json::parse(run({"--format", "json", "survey", "4"}).out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["order"] == 4);
  CHECK(j[0]["irregularConnectedCount"] == 4);
  CHECK(j[0]["newWins"] == 2);
  CHECK(j[0]["proportion"].get<double>() == doctest::Approx(0.5));
  CHECK(run({"survey", "4"}).out.find("2/4") != std::string::npos);
}

TEST_CASE("family equality checks") {
  const auto q7 = run({"family", "cone:hypercube:7", "--check-equality"});
  CHECK(q7.status == 0);
  CHECK(q7.out.find("check:         passed") != std::string::npos);

  const auto q6 = run({"--format", "json", "family", "cone:hypercube:6", "--check-equality"});
  REQUIRE(q6.status == 0);
  const auto j = json::parse(q6.out);
  CHECK(j["expectedEquality"] == false);
  CHECK(j["productBound"]["equalityWithinTol"] == false);
  CHECK(j["check"] == "passed");

  CHECK(run({"family", "cone:cycle:7", "--check-equality"}).status == 0);
  CHECK(run({"family", "wheel:4", "--check-equality"}).status == 0);

  // no stated verdict, over budget, malformed
  CHECK(run({"family", "path:5", "--check-equality"}).status != 0);
  CHECK(run({"family", "path:5"}).status == 0);
  CHECK(run({"family", "hypercube:9"}).status != 0);
  CHECK(run({"family", "cone:"}).status != 0);
  CHECK(run({"family", "kneser:3:2"}).status != 0);
}

TEST_CASE("family spec parsing and verdicts") {
  using specbound::cli::expected_equality;
  using specbound::cli::parse_family_spec;
  CHECK(parse_family_spec("cone:cone:empty:3").cone_depth == 2);
  CHECK(specbound::cli::order_of(parse_family_spec("cone:odd:4")) == 36);
  CHECK(specbound::cli::build(parse_family_spec("cone:empty:4")) ==
        specbound::make_family({specbound::FamilyKind::star, {4}}));
  CHECK(expected_equality(parse_family_spec("complete:6")) == true);
  CHECK(expected_equality(parse_family_spec("cone:kneser:7:3")) == true);
  CHECK(expected_equality(parse_family_spec("cone:cycle:5")) == false);
  CHECK(expected_equality(parse_family_spec("cone:hypercube:3")) == false);
  CHECK_FALSE(expected_equality(parse_family_spec("cycle:5")).has_value());
  CHECK_THROWS(parse_family_spec(""));
  CHECK_THROWS(parse_family_spec("cycle:x"));
  CHECK_THROWS(parse_family_spec("cycle:5:6"));
}

TEST_CASE("convert examples") {
  const auto edges = scratch("edges.txt", "3: 0-1,1-2,0-2\n");
  const auto r = run({"convert", edges.string(), "--to", "graph6"});
  REQUIRE(r.status == 0);
  CHECK(r.out == "Bw\n");

  const auto g6 = scratch("k2.g6", "A_\n");
  CHECK(run({"convert", g6.string(), "--to", "edges"}).out == "2: 0-1\n");

  const auto empty = scratch("empty.g6", "");
  const auto e = run({"convert", empty.string(), "--to", "edges"});
  CHECK(e.status == 0);
  CHECK(e.out.empty());
}

TEST_CASE("convert reports the failing line") {
  const auto bad = scratch("bad.g6", "Bw\nA_\nB?x\n");
  const auto r = run({"convert", bad.string(), "--to", "edges"});
  CHECK(r.status != 0);
  CHECK(r.out.empty());
  CHECK(r.err.find("line 3") != std::string::npos);

  const auto bad_edges = scratch("bad_edges.txt", "3: 0-1\n3: 0-3\n");
  const auto re = run({"convert", bad_edges.string(), "--to", "graph6"});
  CHECK(re.status != 0);
  CHECK(re.err.find("line 2") != std::string::npos);
}

TEST_CASE("convert round trip is byte-identical") {
  const std::string atlas = slurp(SPECBOUND_TEST_DATA "/atlas_connected_upto7.g6");
  const auto to_edges = run({"convert", SPECBOUND_TEST_DATA "/atlas_connected_upto7.g6", "--to", "edges"});
  REQUIRE(to_edges.status == 0);
  const auto mid = scratch("atlas_edges.txt", to_edges.out);
  const auto back = run({"convert", mid.string(), "--to", "graph6"});
  REQUIRE(back.status == 0);
  CHECK(back.out == atlas);
}

TEST_CASE("edge list format") {
  using specbound::cli::parse_edge_list;
  using specbound::cli::to_edge_list;
  const auto g = parse_edge_list("4: 0-1, 1-2,2-3");
  CHECK(g.size() == 3);
  CHECK(to_edge_list(g) == "4: 0-1,1-2,2-3");
  CHECK(to_edge_list(parse_edge_list("3:")) == "3:");
  CHECK_THROWS(parse_edge_list("3: 0-3"));
  CHECK_THROWS(parse_edge_list("3: 0-0"));
  CHECK_THROWS(parse_edge_list("0:"));
  CHECK_THROWS(parse_edge_list("3 0-1"));
  CHECK_THROWS(parse_edge_list("3: 0-"));
}

TEST_CASE("json reports re-serialize stably") {
  for (const char* input : {"Bw", "Bg", "Ch", "FCZbg"}) {
    const auto r = run({"--format", "json", "analyze", input});
    REQUIRE(r.status == 0);
    const auto once = json::parse(r.out).dump(2) + "\n";
    CHECK(once == r.out);
    CHECK(json::parse(once).dump(2) + "\n" == once);
  }
}

TEST_CASE("--out writes data to a file") {
  const fs::path target = fs::temp_directory_path() / "specbound_cli_test_out.csv";
  fs::remove(target);
  const auto r = run({"--format", "csv", "--out", target.string(), "survey", "4"});
  REQUIRE(r.status == 0);
  CHECK(r.out.empty());
  CHECK(slurp(target) == "n,count,new_wins,haemers_wins,ties,proportion\n4,4,2,1,1,0.500000\n");

  CHECK(run({"--out", "/nonexistent/dir/x.csv", "survey", "4"}).status != 0);
}
