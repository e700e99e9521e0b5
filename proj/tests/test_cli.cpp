#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hhext/cli.hpp"
#include "hhext/error.hpp"

using namespace hhext;
using namespace hhext::cli;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "hhext");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const json* find_record(const json& report, const std::string& id, const json& params) {
  for (const auto& r : report["records"])
    if (r["id"] == id && r["params"] == params) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("json report shape") {
  const auto o = invoke({"dims", "--n", "2", "--m-max", "2", "--char", "0", "--no-timestamp"});
  REQUIRE(o.code == 0);
  const json j = json::parse(o.out);
  CHECK(j["version"] == kVersion);
  CHECK(j["schema"] == kSchema);
  CHECK_FALSE(j.contains("timestamp"));
  CHECK(j["config"]["command"] == "dims");
  CHECK(j["summary"]["fail"] == 0);
  for (const auto& r : j["records"]) {
    CHECK(r.contains("id"));
    CHECK(r["params"].is_object());
    CHECK(r.contains("expected"));
    CHECK(r.contains("computed"));
    CHECK(r["status"].is_string());
  }
}

TEST_CASE("dims rows for n = 2 and n = 3") {
  const auto o = invoke({"dims", "--n-max", "3", "--m-max", "2", "--char", "0", "--no-timestamp"});
  REQUIRE(o.code == 0);
  const json j = json::parse(o.out);
  const json* r = find_record(j, "dims.hh", {{"char", 0}, {"m", 1}, {"n", 2}});
  REQUIRE(r != nullptr);
  CHECK((*r)["expected"] == 4);
  CHECK((*r)["computed"] == 4);
  r = find_record(j, "dims.hhc", {{"char", 0}, {"m", 0}, {"n", 3}});
  REQUIRE(r != nullptr);
  CHECK((*r)["computed"] == 5);
  r = find_record(j, "dims.hh", {{"char", 0}, {"m", 2}, {"n", 3}});
  REQUIRE(r != nullptr);
  CHECK((*r)["computed"] == 24);
}

TEST_CASE("records are sorted") {
  const auto o = invoke({"verify", "--n", "2", "--m-max", "3", "--deg-max", "3", "--no-timestamp"});
  REQUIRE(o.code == 0);
  const json j = json::parse(o.out);
  const auto& recs = j["records"];
  for (std::size_t i = 1; i < recs.size(); ++i) {
    const auto& a = recs[i - 1];
    const auto& b = recs[i];
    const bool ordered = a["id"].get<std::string>() < b["id"].get<std::string>() ||
                         (a["id"] == b["id"] && !(b["params"] < a["params"]));
    CHECK(ordered);
  }
}

TEST_CASE("reports are deterministic without a timestamp") {
  const std::vector<std::string> args{"verify", "--n", "3", "--m-max", "3", "--deg-max", "3", "--no-timestamp"};
  const auto a = invoke(args), b = invoke(args);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
}

TEST_CASE("timestamp is included by default") {
  const auto o = invoke({"cyclic", "--n", "2", "--m-max", "2"});
  REQUIRE(o.code == 0);
  CHECK(json::parse(o.out).contains("timestamp"));
}

TEST_CASE("csv and text formats") {
  const auto csv = invoke({"cyclic", "--n", "2", "--m-max", "3", "--format", "csv", "--no-timestamp"});
  REQUIRE(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "id,params,expected,computed,status,note");
  std::size_t rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 5);
  const auto text = invoke({"cyclic", "--n", "2", "--m-max", "3", "--format", "text", "--no-timestamp"});
  REQUIRE(text.code == 0);
  CHECK(text.out.find("summary: 5 pass, 0 fail") != std::string::npos);
}

TEST_CASE("cyclic values for n = 2") {
  const auto o = invoke({"cyclic", "--n", "2", "--m-max", "4", "--no-timestamp"});
  REQUIRE(o.code == 0);
  const json j = json::parse(o.out);
  std::vector<long> got;
  for (const auto& r : j["records"])
    if (r["id"] == "cyclic.hc") got.push_back(r["computed"].get<long>());
  CHECK(got == std::vector<long>{3, 2, 5, 4, 7});
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({"dims", "--n", "1"}).code == 2);
  CHECK(invoke({"dims", "--char", "4"}).code == 2);
  CHECK(invoke({"dims", "--format", "xml"}).code == 2);
  CHECK(invoke({"verify", "--suite", "nothing"}).code == 2);
  const auto o = invoke({"dims", "--n", "1"});
  CHECK_FALSE(o.err.empty());
}

TEST_CASE("findings become failures when strict") {
  const std::vector<std::string> base{"ring", "--n", "3", "--deg-max", "2", "--no-timestamp"};
  const auto lenient = invoke(base);
  CHECK(lenient.code == 0);
  CHECK(json::parse(lenient.out)["summary"]["findings"].get<int>() > 0);
  auto strict_args = base;
  strict_args.push_back("--strict-findings");
  const auto strict = invoke(strict_args);
  CHECK(strict.code == 1);
  CHECK(json::parse(strict.out)["summary"]["fail"].get<int>() > 0);
}

TEST_CASE("oracle beyond the cap is skipped, not failed") {
  const auto o = invoke({"verify", "--suite", "oracle", "--n", "3", "--m-max", "3", "--oracle-cap", "1000",
                         "--char", "0", "--no-timestamp"});
  REQUIRE(o.code == 0);
  const json j = json::parse(o.out);
  CHECK(j["summary"]["skip"].get<int>() > 0);
  CHECK(j["summary"]["fail"] == 0);
}

TEST_CASE("report writes to a file") {
  const std::string path = "test_cli_report.json";
  const auto o = invoke({"cyclic", "--n", "2", "--m-max", "1", "--out", path, "--no-timestamp"});
  REQUIRE(o.code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  const json j = json::parse(in);
  CHECK(j["records"].size() == 3);
  std::remove(path.c_str());
}

TEST_CASE("config validation") {
  RunConfig c;
  c.command = "dims";
  CHECK_NOTHROW(c.validate());
  CHECK(c.n_values() == std::vector<unsigned>{2, 3, 4});
  c.n = 5;
  CHECK(c.n_values() == std::vector<unsigned>{5});
  c.characteristics = {6};
  CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("large integers serialize as strings") {
  CHECK(to_json(mpz_class(42)) == 42);
  CHECK(to_json(mpz_class("123456789012345678901234567890")) == "123456789012345678901234567890");
}
