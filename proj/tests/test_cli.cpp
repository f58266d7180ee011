#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "toruscover/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = toruscover::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify command matches the documented output") {
  const Result r = run({"classify", "--kernel", "[[2,0],[0,3]]", "--dim", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"s\":1,\"m\":[6],\"r\":0,\"min_inducing_dim\":1}\n");
}

TEST_CASE("radical mindim matches the documented output") {
  const Result r =
      run({"radical", "--vars", "2", "--radical", "1,0:2", "--radical", "0,1:2", "mindim"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");

  const Result one =
      run({"radical", "--vars", "2", "--radical", "1,0:2", "--radical", "0,1:3", "mindim"});
  CHECK(one.out == "1\n");
}

TEST_CASE("universal bounds") {
  const Result r = run({"universal", "--degree", "5"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["bound"] == 2);
  CHECK(doc["certificate"]["vars"] == 5);
  CHECK(doc["certificate"]["radicals"].size() == 2);

  const Result d = run({"universal-disc", "--degree", "4"});
  CHECK(d.code == 0);
  const json ddoc = json::parse(d.out);
  CHECK(ddoc["bound"] == 2);
  CHECK(ddoc["even_only"] == true);
  CHECK(ddoc["generators"] == json::parse("[[1,0,3,2],[2,3,0,1]]"));
}

TEST_CASE("smith and hermite outputs certify themselves") {
  const Result r = run({"snf", "--matrix", "[[2,4],[6,8]]"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  // Entry gcd 2 and determinant -8 force invariant factors 2 and 4.
  CHECK(doc["D"] == json::parse("[[2,0],[0,4]]"));

  const Result h = run({"hnf", "--matrix", "[[2,0],[1,1]]"});
  REQUIRE(h.code == 0);
  CHECK(json::parse(h.out)["H"] == json::parse("[[1,1],[0,2]]"));
}

TEST_CASE("equivalence, domination, pullback, tower bound") {
  CHECK(run({"equivalent", "--kernel1", "[[2,0],[0,2]]", "--kernel2", "[[2,0],[2,2]]", "--dim",
             "2"})
            .out == "true\n");
  CHECK(run({"dominates", "--kernel1", "[[6]]", "--kernel2", "[[2]]", "--dim", "1"}).out ==
        "true\n");
  CHECK(run({"dominates", "--kernel1", "[[2]]", "--kernel2", "[[3]]", "--dim", "1"}).out ==
        "false\n");

  const Result p = run({"pullback", "--kernel", "[[4]]", "--dim", "1", "--sublattice", "[[2]]"});
  REQUIRE(p.code == 0);
  const json pulled = json::parse(p.out);
  CHECK(pulled["kernel"] == json::parse("[[2]]"));
  // The emitted kernel re-parses as a kernel input (round trip).
  const Result again =
      run({"classify", "--kernel", pulled["kernel"].dump(), "--dim", pulled["dim"].dump()});
  CHECK(again.code == 0);

  CHECK(run({"tower-bound", "--rank", "5", "--dims", "1,2"}).out == "2\n");
  CHECK(run({"tower-bound", "--rank", "3", "--dims", "3"}).out == "0\n");
}

TEST_CASE("obstruction class output") {
  const Result r = run({"charclass", "--kernel", "[[3,0],[0,3]]", "--dim", "2"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["modulus"] == 3);
  CHECK(doc["degree"] == 2);
  REQUIRE(doc["coefficients"].size() == 1);
  CHECK(doc["coefficients"][0]["subset"] == json::parse("[1,2]"));
  const int value = doc["coefficients"][0]["value"];
  CHECK((value == 1 || value == 2));

  // Trivial covering: validation error, exit 2.
  const Result trivial = run({"charclass", "--kernel", "[[1,0],[0,1]]", "--dim", "2"});
  CHECK(trivial.code == 2);
}

TEST_CASE("flag commands") {
  const Result stab = run({"flag", "--pairing", "4", "stabilizer"});
  REQUIRE(stab.code == 0);
  const json doc = json::parse(stab.out);
  CHECK(doc["order"] == 4);
  CHECK(doc["elements"] == json::parse("[[0,1,2,3],[0,1,3,2],[1,0,2,3],[1,0,3,2]]"));

  const Result rank = run({"flag", "--quadruple", "4", "rank"});
  CHECK(json::parse(rank.out) == json::parse("{\"rank\":2,\"even_only\":true}"));

  // Steps output round-trips through --steps input.
  const Result steps = run({"flag", "--quadruple", "4", "steps"});
  REQUIRE(steps.code == 0);
  const json sdoc = json::parse(steps.out);
  const Result stab2 = run({"flag", "--n", sdoc["n"].dump(), "--steps", sdoc["steps"].dump(),
                            "stabilizer"});
  REQUIRE(stab2.code == 0);
  CHECK(json::parse(stab2.out)["elements"] ==
        json::parse("[[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]"));
}

TEST_CASE("exit codes and machine-parsable errors") {
  SUBCASE("malformed JSON is a validation error") {
    const Result r = run({"classify", "--kernel", "[[2,0],[0,3]", "--dim", "2"});
    CHECK(r.code == 2);
    const json err = json::parse(r.err);
    CHECK(err["error"] == "validation");
  }
  SUBCASE("wrong row length is a validation error") {
    const Result r = run({"classify", "--kernel", "[[2,0,0]]", "--dim", "2"});
    CHECK(r.code == 2);
  }
  SUBCASE("unknown command is a validation error") {
    const Result r = run({"frobnicate"});
    CHECK(r.code == 2);
  }
  SUBCASE("cap exhaustion is a computation error") {
    const Result r = run({"--cap", "1", "universal-disc", "--degree", "4"});
    CHECK(r.code == 3);
    CHECK(json::parse(r.err)["error"] == "computation");
  }
  SUBCASE("the flag search cap is a computation error") {
    const Result r = run({"flag", "--pairing", "9", "rank"});
    CHECK(r.code == 3);
    CHECK(json::parse(r.err)["error"] == "computation");
  }
  SUBCASE("the environment cap is honored and --cap overrides it") {
    setenv("TORUSCOVER_CAP", "1", 1);
    CHECK(run({"universal-disc", "--degree", "4"}).code == 3);
    CHECK(run({"--cap", "1000000", "universal-disc", "--degree", "4"}).code == 0);
    unsetenv("TORUSCOVER_CAP");
  }
}

TEST_CASE("output is deterministic byte for byte") {
  const std::vector<std::string> cmd{"charclass", "--kernel", "[[2,0,0],[0,4,0]]", "--dim", "3"};
  const Result a = run(cmd);
  const Result b = run(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("integers beyond 2^53 are rendered as decimal strings") {
  const Result r = run({"hnf", "--matrix", "[[\"36893488147419103232\"]]"});  // 2^65
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc["H"][0][0].is_string());
  CHECK(doc["H"][0][0] == "36893488147419103232");
  // And string-encoded integers parse back in.
  const Result round = run({"hnf", "--matrix", doc["H"].dump()});
  CHECK(round.code == 0);
  CHECK(json::parse(round.out)["H"] == doc["H"]);
}

TEST_CASE("human output mode") {
  const Result r = run({"--output", "human", "mindim", "--kernel", "[[2,0],[0,2]]", "--dim", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  const Result c = run({"--output", "human", "classify", "--kernel", "[[2,0],[0,3]]", "--dim",
                        "2"});
  CHECK(c.code == 0);
  CHECK(c.out.find("min_inducing_dim") != std::string::npos);
}
