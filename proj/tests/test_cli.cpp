#include "hyperhodge/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = hyperhodge::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

using Row = std::tuple<std::string, int, int, std::string, std::string>;

std::vector<Row> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  REQUIRE(line == "kind,i,k,num,den");
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string kind, i, k, num, den;
    std::getline(fields, kind, ',');
    std::getline(fields, i, ',');
    std::getline(fields, k, ',');
    std::getline(fields, num, ',');
    std::getline(fields, den, ',');
    rows.emplace_back(kind, std::stoi(i), std::stoi(k), num, den);
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::vector<Row> parse_json(const std::string& text) {
  std::vector<Row> rows;
  for (const auto& obj : nlohmann::json::parse(text))
    rows.emplace_back(obj.at("kind").get<std::string>(), obj.at("i").get<int>(), obj.at("k").get<int>(),
                      obj.at("num").get<std::string>(), obj.at("den").get<std::string>());
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace

TEST_CASE("table csv") {
  const auto r = run({"table", "--max-k", "4", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "kind,i,k,num,den\nD,0,4,1,2\nD,1,4,1,4\nd,0,4,1,2\nd,1,4,1,2\n");
}

TEST_CASE("table json") {
  const auto r = run({"table", "--max-k", "6", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find(R"({"kind":"D","i":1,"k":6,"num":"1","den":"1"})") != std::string::npos);
  CHECK(nlohmann::json::parse(r.out).size() == 10);
}

TEST_CASE("table text and decimals") {
  const auto r = run({"table", "--max-k", "8", "--decimal", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("23/8") != std::string::npos);
  CHECK(r.out.find("~2.875") != std::string::npos);

  const auto csv = run({"table", "--max-k", "4", "--format", "csv", "--decimal", "2"});
  CHECK(csv.out.rfind("kind,i,k,num,den,approx\nD,0,4,1,2,0.50\n", 0) == 0);

  const auto json = run({"table", "--max-k", "4", "--format", "json", "--decimal", "2"});
  CHECK(nlohmann::json::parse(json.out)[1]["approx"] == "0.25");
}

TEST_CASE("csv and json carry the same rows") {
  for (const char* max_k : {"4", "12", "20"}) {
    const auto csv = run({"table", "--max-k", max_k, "--format", "csv"});
    const auto json = run({"table", "--max-k", max_k, "--format", "json"});
    REQUIRE(csv.code == 0);
    REQUIRE(json.code == 0);
    CHECK(parse_csv(csv.out) == parse_json(json.out));
  }
}

TEST_CASE("output is byte deterministic") {
  const auto a = run({"table", "--max-k", "16", "--format", "json"});
  const auto b = run({"table", "--max-k", "16", "--format", "json"});
  CHECK(a.out == b.out);
}

TEST_CASE("--out writes the file") {
  const auto path = std::filesystem::temp_directory_path() / "hyperhodge_cli_test.csv";
  const auto r = run({"table", "--max-k", "4", "--format", "csv", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream contents;
  contents << in.rdbuf();
  CHECK(contents.str() == run({"table", "--max-k", "4", "--format", "csv"}).out);
  std::filesystem::remove(path);

  const auto bad = run({"table", "--out", "/nonexistent-dir/x.csv"});
  CHECK(bad.code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"table", "--max-k", "5"}).code == 2);
  CHECK(run({"table", "--max-k", "2"}).code == 2);
  CHECK(run({"verify", "--max-k", "7"}).code == 2);
  CHECK(run({"verify", "--max-g", "0"}).code == 2);
  CHECK(run({"table", "--format", "xml"}).code == 2);
  CHECK(run({"table", "--max-k", "abc"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"table", "--corrupt-base", "D,1,4"}).code == 2);
  CHECK(run({"table", "--corrupt-base", "D,1,5=1/3"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify passes at small bounds") {
  const auto r = run({"verify", "--max-k", "12", "--max-g", "20"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all checks passed") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("verify at g = 1 reports the skipped suite") {
  const auto r = run({"verify", "--max-g", "1", "--max-k", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("skipped for g=1 (out of theorem range)") != std::string::npos);
}

TEST_CASE("fault injection exits 1 and names the key") {
  const auto table = run({"table", "--max-k", "8", "--corrupt-base", "D,1,4=1/3"});
  CHECK(table.code == 1);
  CHECK(table.err.find("D(1,4)") != std::string::npos);

  const auto verify = run({"verify", "--max-k", "8", "--max-g", "3", "--corrupt-base", "D,1,4=1/3"});
  CHECK(verify.code == 1);
  CHECK(verify.err.find("D(1,4)") != std::string::npos);
  CHECK(verify.out.find("FAILED") != std::string::npos);

  const auto json = run({"verify", "--max-k", "8", "--max-g", "3", "--format", "json", "--corrupt-base", "D,1,4=1/3"});
  CHECK(json.code == 1);
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["ok"] == false);
  CHECK(doc["first_failure"]["parameters"] == "D(1,4)");
}

TEST_CASE("verify subcommands") {
  const auto loc = run({"verify-localization", "--max-k", "10", "--format", "csv"});
  CHECK(loc.code == 0);
  CHECK(loc.out.rfind("suite,passed,failed\n", 0) == 0);
  CHECK(loc.out.find("localization-vanishing") != std::string::npos);

  const auto ids = run({"verify-identities", "--max-g", "6", "--format", "json"});
  CHECK(ids.code == 0);
  const auto doc = nlohmann::json::parse(ids.out);
  CHECK(doc["ok"] == true);
  for (const auto& suite : doc["suites"]) CHECK(suite["failed"] == 0);
}

TEST_CASE("parse_base_override") {
  const auto [key, value] = hyperhodge::cli::parse_base_override("d,2,8=11/2");
  CHECK(key == hyperhodge::HodgeValueKey{hyperhodge::HodgeKind::Paired, 2, 8});
  CHECK(value == hyperhodge::Rational(hyperhodge::BigInt(11), hyperhodge::BigInt(2)));
  CHECK_THROWS(hyperhodge::cli::parse_base_override("q,1,4=1"));
  CHECK_THROWS(hyperhodge::cli::parse_base_override("D,1=1"));
}
