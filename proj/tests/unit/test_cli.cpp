#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "chromabound/cli.hpp"
#include "chromabound/serialize.hpp"

using namespace chromabound;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::vector<const char*> argv{"chromabound"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err, in);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("chromatic") {
    const Outcome o = run({"--json", "chromatic", "C~"});
    REQUIRE(o.code == cli::kExitOk);
    const Json j = parse_json(o.out);
    CHECK(j["schema"] == kSchemaVersion);
    const Json& entry = j["results"][0];
    CHECK(entry["graph"]["order"] == 4);
    CHECK(entry["chromatic"]["coefficients"] == Json({"0/1", "-6/1", "11/1", "-6/1", "1/1"}));

    const Outcome piped = run({"--json", "chromatic", "-"}, "C~\nBw\n");
    REQUIRE(piped.code == cli::kExitOk);
    CHECK(parse_json(piped.out)["results"].size() == 2);

    CHECK(run({"chromatic", "C~"}).out.find("x^4") != std::string::npos);
    CHECK(run({"chromatic", "!!!"}).code == cli::kExitUsage);
  }

  TEST_CASE("family") {
    const Outcome o = run({"--json", "family", "theta", "--spec", R"({"s1":2,"s2":1,"s3":3})"});
    REQUIRE(o.code == cli::kExitOk);
    const Json j = parse_json(o.out);
    CHECK(j["family"]["kind"] == "theta");
    CHECK(run({"family", "theta", "--spec", R"({"s1":0,"s2":1,"s3":3})"}).code == cli::kExitUsage);
    CHECK(run({"family", "theta", "--spec", R"({"s1":1,"s2":1})"}).code == cli::kExitUsage);
    CHECK(run({"family", "theta", "--spec", "{not json"}).code == cli::kExitUsage);
    CHECK(run({"family", "sk4", "--spec", R"({"s1":1,"s2":1,"s3":1})"}).code == cli::kExitOk);
    CHECK(run({"family", "nope", "--spec", "{}"}).code == cli::kExitUsage);
  }

  TEST_CASE("bounds") {
    const Outcome o = run({"--json", "bounds", "theta", "--grid", R"({"max_s":2,"x":["1","3/2"]})"});
    REQUIRE(o.code == cli::kExitOk);
    const Json j = parse_json(o.out);
    CHECK(j["bounds"]["checked"] == 16);
    CHECK(j["bounds"]["holds"] == true);
    const Json& first = j["bounds"]["reports"][0];
    CHECK(first["lhs"].is_string());
    CHECK(first["x"] == "1/1");
    CHECK(run({"bounds", "theta", "--grid", R"({"x":["1/2"]})"}).code == cli::kExitUsage);
  }

  TEST_CASE("certify") {
    const Outcome o = run({"--json", "certify", "cactusson"});
    REQUIRE(o.code == cli::kExitOk);
    CHECK(parse_json(o.out)["certificate"]["certified"] == true);
    CHECK(run({"certify", "k33son", "--threshold", "29/10"}).code == cli::kExitCheckFailed);
    CHECK(run({"certify", "other"}).code == cli::kExitUsage);
  }

  TEST_CASE("verify") {
    const Outcome o = run({"--json", "verify", "conjecture", "--order", "6"});
    REQUIRE(o.code == cli::kExitOk);
    const Json j = parse_json(o.out);
    CHECK(j["report"]["checked"] == 26);
    CHECK(j["report"]["passed"] == true);
    CHECK(j["report"].contains("runtime_seconds") == false);
    CHECK(run({"verify", "conjecture", "--order", "3"}).code == cli::kExitUsage);
    CHECK(run({"verify", "conjecture", "--order", "10"}).code == cli::kExitUsage);
    CHECK(run({"verify", "cliquebound", "--order", "6", "--k", "3"}).code == cli::kExitOk);
    CHECK(run({"verify", "tomescu3", "--order", "5"}).code == cli::kExitOk);
    const Outcome timed = run({"--json", "verify", "tomescu3", "--order", "4", "--timing"});
    CHECK(parse_json(timed.out)["report"].contains("runtime_seconds"));
  }

  TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"--json", "verify", "conjecture", "--order", "7"};
    const Outcome a = run(args);
    const Outcome b = run(args);
    std::vector<std::string> parallel = args;
    parallel.insert(parallel.end(), {"--workers", "2"});
    const Outcome c = run(parallel);
    CHECK(a.code == cli::kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }

  TEST_CASE("remark and explore") {
    CHECK(run({"remark", "sk4"}).code == cli::kExitOk);
    const Outcome e = run({"--json", "explore", "k33", "--max-size", "1"});
    REQUIRE(e.code == cli::kExitOk);
    CHECK(parse_json(e.out)["exploration"]["samples"].size() >= 1);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"bogus"}).code == cli::kExitUsage);
    CHECK(run({"--help"}).code == cli::kExitOk);
  }
}
