#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "helpers.hpp"
#include "modgen/cli.hpp"

using namespace th;
using modgen::run_command;
using modgen::CliResult;
using modgen::ojson;
using modgen::kSchemaVersion;

static std::string tmpfile_name(const char* tag) {
  return std::string("cli_test_") + tag + ".json";
}

TEST_CASE("gb command") {
  CliResult r = run_command({"gb", "--ring", "Q[x,y]", "--ideal", "x^2-y; x^3-y*x"});
  REQUIRE(r.code == 0);
  CHECK(r.report["schema"] == kSchemaVersion);
  CHECK(r.report["command"] == "gb");
  CHECK(r.report["result"]["basis"].is_array());
  ojson echo = ojson::parse(r.output);  // output is the report itself
  CHECK(echo == r.report);
}

TEST_CASE("nf command") {
  CliResult r = run_command(
      {"nf", "--ring", "Q[x,y]", "--ideal", "x^2-y", "--poly", "x^2*y + y"});
  REQUIRE(r.code == 0);
  CHECK(r.report["result"]["normal_form"] == "y^2 + y");
}

TEST_CASE("resolve and ext commands") {
  CliResult r = run_command({"resolve", "--ring", "Q[x]/(x^2)", "--module",
                             "gens 1 relations [[x]]", "--length", "4"});
  REQUIRE(r.code == 0);
  auto& ranks = r.report["result"]["ranks"];
  REQUIRE(ranks.is_array());
  for (auto& v : ranks) CHECK(v.get<int>() == 1);  // periodic resolution

  CliResult e = run_command({"ext", "--ring", "Q[x]/(x^2)", "--module",
                             "gens 1 relations [[x]]", "--module2",
                             "gens 1 relations [[x]]", "--n", "3"});
  REQUIRE(e.code == 0);
  CHECK(!e.report["result"]["is_zero"].get<bool>());
}

TEST_CASE("locus commands") {
  CliResult s = run_command({"sing-locus", "--ring", "Q[x,y]/(y^2-x^3)"});
  REQUIRE(s.code == 0);
  CHECK(!s.report["result"]["is_empty"].get<bool>());
  auto ideal = s.report["result"]["defining_ideal"];
  CHECK(ideal.size() == 2);  // V(x, y)

  CliResult p = run_command({"perf-locus", "--ring", "Q[x,y]/(x*y)", "--module",
                             "gens 1 relations [[x]]"});
  REQUIRE(p.code == 0);
  CHECK(!p.report["result"]["is_all"].get<bool>());

  CliResult j = run_command({"j0", "--ring", "Q[x,y]/(y^2-x^3)", "--domain"});
  REQUIRE(j.code == 0);
  CHECK(j.report["result"]["j0"].get<bool>());
  CHECK(j.report["result"]["witness"] == "y");

  CliResult n = run_command(
      {"nagata", "--ring", "Q[x,y]/(x*y)", "--primes", "(x);(y)"});
  REQUIRE(n.code == 0);
  CHECK(n.report["result"]["ok"].get<bool>());
}

TEST_CASE("gen, certify, check round trip") {
  CliResult g = run_command({"gen", "--ring", "Q[x]/(x^2)"});
  REQUIRE(g.code == 0);
  CHECK(g.report["result"]["generator"]["kind"] == "split_step");

  CliResult c = run_command({"certify", "--ring", "Q[x]/(x^2)", "--module",
                             "gens 1 relations [[x]]"});
  REQUIRE(c.code == 0);
  REQUIRE(c.report["result"].contains("certificate"));

  std::string path = tmpfile_name("roundtrip");
  {
    std::ofstream out(path);
    out << c.output;
  }
  CliResult k = run_command({"check", path});
  CHECK(k.code == 0);
  CHECK(k.report["result"]["ok"].get<bool>());

  // tamper with the stored certificate: flip a projection entry
  ojson doc = ojson::parse(c.output);
  ojson& cert = doc["result"]["certificate"];
  bool tampered = false;
  for (auto& step : cert["steps"]) {
    if (step.contains("mats") && !step["mats"].empty()) {
      step["mats"][0][0][0] = "x + 1";
      tampered = true;
      break;
    }
  }
  if (tampered) {
    std::string bad = tmpfile_name("tampered");
    {
      std::ofstream out(bad);
      out << doc.dump();
    }
    CliResult kb = run_command({"check", bad});
    CHECK(kb.code == 1);
    CHECK(!kb.report["result"]["ok"].get<bool>());
    CHECK(kb.report["result"].contains("fail_step"));
    std::remove(bad.c_str());
  }
  std::remove(path.c_str());
}

TEST_CASE("error handling and exit codes") {
  SUBCASE("bad ring text") {
    CliResult r = run_command({"gb", "--ring", "Q[x,", "--ideal", "x"});
    CHECK(r.code == 2);
    CHECK(r.report["result"]["error_kind"] == "parse");
  }
  SUBCASE("unknown variable") {
    CliResult r = run_command({"gb", "--ring", "Q[x]", "--ideal", "z"});
    CHECK(r.code == 2);
  }
  SUBCASE("missing certificate file") {
    CliResult r = run_command({"check", "no_such_file_here.json"});
    CHECK(r.code == 2);
  }
  SUBCASE("cutoff maps to its own exit code") {
    CliResult r = run_command({"resolve", "--ring", "Q[x,y]/(x^2)", "--module",
                               "gens 1 relations [[x]]", "--length", "4",
                               "--max-resolution", "2"});
    CHECK(r.code == 3);
  }
  SUBCASE("usage errors") {
    CHECK(run_command({"gb", "--ring", "Q[x]"}).code == 2);  // missing --ideal
    CHECK(run_command({"frobnicate"}).code == 2);
  }
}

TEST_CASE("text format") {
  CliResult r = run_command(
      {"sing-locus", "--ring", "Q[x,y]/(y^2-x^3)", "--format", "text"});
  REQUIRE(r.code == 0);
  CHECK(r.output.find("sing-locus") != std::string::npos);
  CHECK(r.output.find("defining_ideal") != std::string::npos);
}

TEST_CASE("byte determinism") {
  std::vector<std::string> args{"certify", "--ring", "Q[x,y]/(x*y)", "--module",
                                "gens 1 relations [[x],[y]]"};
  CliResult a = run_command(args);
  CliResult b = run_command(args);
  REQUIRE(a.code == 0);
  CHECK(a.output == b.output);
}
