#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "qfinetti/bounds.hpp"
#include "qfinetti/serialization.hpp"

using namespace qfinetti;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qfinetti");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qfinetti_test_cli_" + name);
}

void write(const std::filesystem::path& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("qbinom") {
  auto r = invoke({"qbinom", "4", "2", "--q", "1/2"});
  CHECK(r.code == 0);
  CHECK(r.out == "35/16\n");

  r = invoke({"qbinom", "5", "0", "--q", "1/3"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");

  CHECK(invoke({"qbinom", "2", "3", "--q", "1/2"}).code == 2);
  CHECK(invoke({"qbinom", "4", "2", "--q", "0.5"}).code == 2);
  CHECK(invoke({"qbinom", "4", "2", "--q", "3/2"}).code == 2);
  CHECK(invoke({"qbinom", "4", "2"}).code == 2);
}

TEST_CASE("usage errors and help") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"distance", "--n", "x", "--n1", "1", "--k", "1", "--q", "1/2"}).code == 2);
  const auto help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("sweep") != std::string::npos);
}

TEST_CASE("distance") {
  auto r = invoke({"distance", "--n", "2", "--n1", "1", "--k", "1", "--q", "1/2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("D = 1/3\n") != std::string::npos);
  CHECK(r.out.find("upper") != std::string::npos);
  CHECK(r.out.find("lower c~_k*q^n = 1/8") != std::string::npos);
  CHECK(lines(r.out).back() == "PASS");

  r = invoke({"distance", "--n", "6", "--n1", "0", "--k", "3", "--q", "1/2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("D = 0\n") != std::string::npos);
  CHECK(r.out.find("n/a") != std::string::npos);

  r = invoke({"distance", "--n", "1", "--n1", "1", "--k", "1", "--q", "1/2", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["distance"] == "1");
  CHECK(doc["pass"] == true);

  CHECK(invoke({"distance", "--n", "2", "--n1", "3", "--k", "1", "--q", "1/2"}).code == 2);
  CHECK(invoke({"distance", "--n", "2", "--n1", "1", "--k", "3", "--q", "1/2"}).code == 2);
  CHECK(invoke({"distance", "--n", "2", "--n1", "1", "--k", "1", "--q", "1/2", "--format", "xml"}).code == 2);
}

TEST_CASE("sweep CSV") {
  auto r = invoke({"sweep", "--q", "1/2", "--k", "2", "--n", "2..16", "--n1", "half"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 16);
  CHECK(rows[0] == "n,k,n1,q,distance,upper,lower,dist_over_qn");
  CHECK(rows[1].rfind("2,2,1,1/2,", 0) == 0);
  CHECK(rows[15].rfind("16,2,8,1/2,", 0) == 0);

  r = invoke({"sweep", "--q", "1/2", "--k", "1", "--n", "1..1", "--n1", "equal"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).at(1) == "1,1,1,1/2,1,2,0.25,2");

  CHECK(invoke({"sweep", "--q", "1/2", "--k", "1", "--n", "5..4"}).code == 2);
  CHECK(invoke({"sweep", "--q", "1/2", "--k", "3", "--n", "1..4"}).code == 2);
  CHECK(invoke({"sweep", "--q", "1/2", "--k", "1", "--n", "a..b"}).code == 2);
  CHECK(invoke({"sweep", "--q", "1/2", "--k", "1", "--n", "1..4", "--n1", "quarter"}).code == 2);
}

TEST_CASE("sweep output is byte-deterministic") {
  for (const char* mode : {"exact", "float"}) {
    const std::vector<std::string> args{"sweep", "--q", "2/3", "--k", "3", "--n", "3..14", "--n1", "list:1,3",
                                        "--mode", mode};
    const auto first = invoke(args);
    const auto second = invoke(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
  }
  const auto path = temp_file("sweep.csv");
  CHECK(invoke({"sweep", "--q", "1/3", "--k", "2", "--n", "2..8", "--out", path.string()}).code == 0);
  std::ifstream in(path);
  std::ostringstream file;
  file << in.rdbuf();
  CHECK(file.str() == invoke({"sweep", "--q", "1/3", "--k", "2", "--n", "2..8"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("sweep JSON") {
  const auto r = invoke({"sweep", "--q", "1/2", "--k", "1", "--n", "1..3", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.size() == 3);
  CHECK(doc[0]["distance"] == "1");
}

TEST_CASE("a failing report produces a VIOLATION row") {
  auto report = distance_report(2, 1, 1, QParam::parse("1/2"));
  report.upper = Scalar::fraction(1, 10, Mode::exact);
  std::ostringstream out;
  CHECK_FALSE(cli::write_sweep_csv({distance_report(1, 1, 1, QParam::parse("1/2")), report}, out));
  const auto rows = lines(out.str());
  REQUIRE(rows.size() == 4);
  CHECK(rows[3].rfind("VIOLATION,2,1,1,1/2,", 0) == 0);

  std::ostringstream clean;
  CHECK(cli::write_sweep_csv({distance_report(1, 1, 1, QParam::parse("1/2"))}, clean));
  CHECK(clean.str().find("VIOLATION") == std::string::npos);
}

TEST_CASE("fit") {
  auto r = invoke({"fit", "--q", "1/2", "--k", "2", "--n", "12..24", "--mode", "float"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).back() == "PASS");
  CHECK(invoke({"fit", "--q", "1/2", "--k", "1", "--n", "5..6"}).code == 2);
  CHECK(invoke({"fit", "--q", "1/2", "--k", "1", "--n", "1..1"}).code == 2);
}

TEST_CASE("measure and decompose") {
  const auto path = temp_file("extreme.json");
  CHECK(invoke({"measure", "extreme", "--n", "5", "--n1", "2", "--q", "1/3", "--out", path.string()}).code == 0);
  auto r = invoke({"decompose", path.string(), "--k", "2", "--format", "json"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["k"] == 2);
  CHECK(doc["mixing"]["base"] == nlohmann::json({"0", "0", "1", "0", "0", "0"}));

  r = invoke({"decompose", path.string(), "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("alpha[2] = 1") != std::string::npos);
  CHECK(invoke({"decompose", path.string(), "--k", "6"}).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("decompose output re-ingests to the same mixing measure") {
  const auto path = temp_file("random.json");
  for (int seed = 0; seed < 5; ++seed) {
    const auto gen = invoke({"measure", "random", "--n", "9", "--seed", std::to_string(seed), "--q", "2/3"});
    REQUIRE(gen.code == 0);
    write(path, gen.out);
    const auto m = measure_from_json(gen.out);
    const auto r = invoke({"decompose", path.string(), "--k", "3", "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["pass"] == true);
    const auto mu = mixing_from_json(doc["mixing"].dump());
    CHECK(mu == decompose(m));
    CHECK(to_json(mu) == doc["mixing"].dump());
  }
  std::filesystem::remove(path);
}

TEST_CASE("decompose rejects bad input with exit 2") {
  const auto path = temp_file("bad.json");
  write(path, R"({"n": 1, "q": "1/2", "base": ["9/20", "9/20"]})");
  auto r = invoke({"decompose", path.string(), "--k", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("mass") != std::string::npos);

  write(path, R"({"n": 1, "q": "1/2", "base": ["-1/2", "3/4"]})");
  CHECK(invoke({"decompose", path.string(), "--k", "1"}).code == 2);

  write(path, R"({"n": 1, "q": "1/2", "base": )");
  r = invoke({"decompose", path.string(), "--k", "1"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());

  std::filesystem::remove(path);
  CHECK(invoke({"decompose", path.string(), "--k", "1"}).code == 2);
}

TEST_CASE("verify-all") {
  auto r = invoke({"verify-all", "--max-n", "6", "--q", "1/2,1/3,2/3"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 8);
  CHECK(lines(r.out).back() == "ALL PASS");

  CHECK(invoke({"verify-all", "--max-n", "0", "--q", "1/2"}).code == 0);

  r = invoke({"verify-all", "--max-n", "4", "--q", "1/2", "--inject-fault"});
  CHECK(r.code == 1);
  CHECK(r.out.find("counterexample") != std::string::npos);

  CHECK(invoke({"verify-all", "--q", "1/2,1"}).code == 2);
}
