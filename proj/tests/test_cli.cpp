// Copyright 2026 The qboson Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qboson/cli.hpp"
#include "qboson/serialize.hpp"

using namespace qboson;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qboson_test_" + name);
}

}  // namespace

TEST_CASE("single reports K = m, S = ln m, C = 1") {
  const auto r = run({"single", "--m", "3"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["rank"] == 3);
  CHECK(j["K"].get<double>() == doctest::Approx(3.0));
  CHECK(j["S_nats"].get<double>() == doctest::Approx(std::log(3.0)));
  CHECK(j["C"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("fock command and bits conversion") {
  const auto r = run({"fock", "--epsilon", "-1", "--m", "3", "--occupation", "2", "--bits"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["K"].get<double>() == doctest::Approx(6.0));
  CHECK(j["S_bits"].get<double>() == doctest::Approx(std::log2(6.0)));
}

TEST_CASE("oracle cross-checks through the CLI") {
  const auto r = run({"coherent", "--m", "2", "--amp", "0.5", "--with-oracle"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["oracle"]["delta_K"].get<double>() < 1e-8);
  CHECK(j["oracle"]["delta_S"].get<double>() < 1e-8);
  const auto o = run({"oracle", "--family", "modes", "--m", "3", "--n", "2"});
  REQUIRE(o.code == 0);
  CHECK(Json::parse(o.out)["oracle"]["K"].get<double>() == doctest::Approx(9.0));
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "--epsilon", "+1", "--m", "2", "--da", "4", "--db", "4", "--modes", "2", "--seed", "7"}).code == 0);
  CHECK(run({"verify", "--m", "3", "--da", "2", "--db", "2"}).code == 2);
  CHECK(run({"verify", "--epsilon", "0", "--m", "2"}).code == 2);
  CHECK(run({"verify", "--phi", "/nonexistent/phi.json"}).code == 2);
}

TEST_CASE("verify with a tampered family names the failing checks") {
  const auto good = temp_file("phi_good.json");
  const auto bad = temp_file("phi_bad.json");
  REQUIRE(run({"verify", "--m", "2", "--modes", "2", "--seed", "3", "--save-phi", good.string()}).code == 0);
  std::ifstream in(good);
  auto j = Json::parse(in);
  j["matrices"][1]["re"][0][0] = j["matrices"][1]["re"][0][0].get<double>() + 0.05;
  std::ofstream(bad) << dump_json(j);
  const auto r = run({"verify", "--phi", bad.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("orthonormality") != std::string::npos);
  CHECK(Json::parse(r.out)["passed"] == false);
  CHECK(run({"verify", "--phi", good.string()}).code == 0);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST_CASE("usage and parameter errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"single", "--m", "three"}).code == 2);
  CHECK(run({"single", "--format", "xml", "--m", "2"}).code == 2);
  CHECK(run({"fock", "--m", "2", "--occupation", "3"}).code == 2);
  CHECK(run({"coherent", "--epsilon", "1", "--m", "2", "--amp", "0.5"}).code == 2);
  CHECK(run({"state"}).code == 2);
  CHECK(run({"single", "--help"}).code == 0);
}

TEST_CASE("state command checks normalization unless asked to fix it") {
  const auto path = temp_file("psi.json");
  std::ofstream(path) << R"({"epsilon": 1, "m": 2, "modes": ["1", "2"],
    "amplitudes": [{"config": {"1": 1}, "re": 1.0, "im": 0}, {"config": {"2": 1}, "re": 1.0, "im": 0}]})";
  CHECK(run({"state", "--input", path.string()}).code == 1);
  const auto r = run({"state", "--input", path.string(), "--renormalize", "--with-oracle"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["K"].get<double>() == doctest::Approx(4.0));
  CHECK(j["oracle"]["passed"] == true);
  std::filesystem::remove(path);
}

TEST_CASE("scan output") {
  const auto r = run({"scan", "--family", "single", "--m", "1:10"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "m,f,rank,K,P,S_nats,C,error");
  int m = 0;
  while (std::getline(lines, line)) {
    ++m;
    const auto s = std::stod(line.substr(0, line.find(',')));
    CHECK(s == m);
  }
  CHECK(m == 10);

  const auto empty = run({"scan", "--family", "fock", "--m", ""});
  CHECK(empty.code == 0);
  CHECK(empty.out == "epsilon,m,occupation,K,S_nats,error\n");

  const auto partial = run({"scan", "--family", "fock", "--m", "1:2", "--occupation", "2"});
  CHECK(partial.code == 1);
  CHECK(partial.out.find("exceeds") != std::string::npos);
}

TEST_CASE("coherent scan increases from one") {
  const auto r = run({"scan", "--family", "coherent", "--m", "4", "--amp", "0:1:0.1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto rows = Json::parse(r.out);
  REQUIRE(rows.size() == 11);
  CHECK(rows[0]["K"].get<double>() == doctest::Approx(1.0));
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i]["K"].get<double>() > rows[i - 1]["K"].get<double>());
}

TEST_CASE("identical configurations give byte-identical output") {
  const std::vector<std::vector<std::string>> configs{
      {"verify", "--m", "2", "--modes", "2", "--seed", "11"},
      {"single", "--m", "4", "--seed", "5", "--with-oracle"},
      {"coherent", "--m", "3", "--amp", "0.7", "--phase", "0.2", "--with-oracle"},
      {"scan", "--family", "coherent", "--m", "1:3", "--amp", "0:2:0.5"},
  };
  for (const auto& c : configs) {
    const auto a = run(c);
    const auto b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("output file and formats") {
  const auto path = temp_file("out.csv");
  REQUIRE(run({"modes", "--m", "2", "--n", "2", "--format", "csv", "--output", path.string()}).code == 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "command,epsilon,m,n,K,S_nats");
  std::filesystem::remove(path);
  const auto table = run({"modes", "--m", "2", "--n", "2", "--format", "table"});
  CHECK(table.out.find("\nK ") != std::string::npos);
  CHECK(table.out.find(" 4.0\n") != std::string::npos);
}

TEST_CASE("grid parsing") {
  CHECK(cli::parse_int_grid("1:4") == std::vector<int>{1, 2, 3, 4});
  CHECK(cli::parse_int_grid("2,5,3") == std::vector<int>{2, 5, 3});
  CHECK(cli::parse_int_grid("1:9:4") == std::vector<int>{1, 5, 9});
  CHECK(cli::parse_int_grid("").empty());
  CHECK(cli::parse_real_grid("0:1:0.25").size() == 5);
  CHECK(cli::parse_real_grid("0:1:0.1")[3] == 0.3);
  CHECK_THROWS(cli::parse_int_grid("1:x"));
  CHECK_THROWS(cli::parse_real_grid("0:1:0"));
}
