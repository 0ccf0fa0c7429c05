#include <catch_amalgamated.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "ilattice/io.hpp"

namespace {
  struct Run {
    int         code;
    std::string out;
  };

  Run run(std::string const& args) {
    std::string const cmd = std::string(ILATTICE_CLI) + " " + args + " 2>&1";
    FILE*             pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    char        buf[4096];
    while (auto n = fread(buf, 1, sizeof buf, pipe)) {
      out.append(buf, n);
    }
    int const status = pclose(pipe);
    return {WEXITSTATUS(status), out};
  }

  std::string data(char const* name) {
    return std::string(ILATTICE_DATA) + "/" + name;
  }

  bool has(std::string const& text, std::string const& part) {
    return text.find(part) != std::string::npos;
  }
}  // namespace

TEST_CASE("check reports orthomodularity as holding") {
  auto const r = run("check --universe " + data("one_block.json")
                     + " --law orthomodularity --mode literal --exhaustive --format json");
  REQUIRE(r.code == 0);
  auto const doc = ilattice::Json::parse(r.out);
  CHECK(ilattice::validate_report(doc).empty());
  CHECK(doc["command"] == "check");
  REQUIRE(doc["rows"].size() == 1);
  CHECK(doc["rows"][0]["status"] == "holds");
  CHECK(doc["rows"][0]["cases_checked"] == 16);
}

TEST_CASE("search finds the distributivity failure on one block of two") {
  auto const r = run("search --law distributivity-meet-over-join --mode literal --max-atoms 4"
                     " --format json");
  REQUIRE(r.code == 0);
  auto const doc = ilattice::Json::parse(r.out);
  CHECK(ilattice::validate_report(doc).empty());
  REQUIRE(doc["rows"].size() == 1);
  CHECK(doc["rows"][0]["universe_digest"] == "[[x1,x2]]");
  CHECK(doc["rows"][0]["status"] == "fails");

  auto const none = run("search --law orthomodularity --max-atoms 3");
  CHECK(none.code == 0);
  CHECK(has(none.out, "none found"));
}

TEST_CASE("valid, eval and consequence") {
  auto const v = run("valid --universe " + data("mixed.json") + " --formula \"a -> a\"");
  CHECK(v.code == 0);
  CHECK(has(v.out, "literal  valid"));
  CHECK(has(v.out, "closure  valid"));

  auto const e = run("eval --universe " + data("mixed.json") + " --valuation "
                     + data("valuation.json") + " --formula \"a & b\" --mode literal");
  CHECK(e.code == 0);
  CHECK(has(e.out, "{}"));

  auto const c = run("consequence --universe " + data("classical.json") + " --gamma "
                     + data("gamma.txt") + " --formula b --format json");
  CHECK(c.code == 0);
  auto const doc = ilattice::Json::parse(c.out);
  CHECK(doc["results"][0]["verdict"] == true);

  auto const cn = run("consequence --universe " + data("one_block.json") + " --depth 1");
  CHECK(cn.code == 0);
  CHECK(has(cn.out, "a -> a"));
}

TEST_CASE("probe and the default audit") {
  auto const p = run("probe --universe " + data("classical.json") + " --depth 1");
  CHECK(p.code == 0);
  CHECK(has(p.out, "none found"));

  auto const a = run("");
  CHECK(a.code == 0);
  CHECK(a.out.starts_with("universe [[x1,x2]]"));
  CHECK(has(a.out, "meet-associativity"));
}

TEST_CASE("exit codes and diagnostics") {
  auto const unknown = run("check --bogus");
  CHECK(unknown.code == 1);
  CHECK(has(unknown.out, "--bogus"));

  auto const law = run("check --law no-such-law");
  CHECK(law.code == 1);
  CHECK(has(law.out, "no-such-law"));

  auto const file = run("audit --universe /nonexistent.json");
  CHECK(file.code == 1);
  CHECK(has(file.out, "/nonexistent.json"));

  auto const formula = run("valid --formula \"a &\"");
  CHECK(formula.code == 1);
  CHECK(has(formula.out, "position 3"));

  auto const mode = run("audit --mode sideways");
  CHECK(mode.code == 1);

  auto const both = run("audit --exhaustive --samples 5");
  CHECK(both.code == 1);

  auto const budget = run("consequence --depth 4");
  CHECK(budget.code == 2);
  CHECK(has(budget.out, "budget"));
}

TEST_CASE("identical invocations are byte identical") {
  for (auto const* args : {"audit --samples 200 --seed 9 --format json",
                           "probe --format json",
                           "valid --formula \"a & b -> a\" --samples 50 --seed 3"}) {
    auto const a = run(args);
    auto const b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
  }
}
