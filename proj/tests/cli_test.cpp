#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "softtopo/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = softtopo::cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("softtopo_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("classify FIX-EX") {
  const auto r = run({"classify", "FIX-EX", "--set", R"({"e1":["h1","h2"],"e2":["h1","h2"]})"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "# softtopo 0.1.0\n"
        "set={\"e1\":[\"h1\",\"h2\"],\"e2\":[\"h1\",\"h2\"]}\n"
        "open=false\n"
        "closed=false\n"
        "semiopen=true\n"
        "semiclosed=false\n"
        "semiopen_witness={\"e1\":[\"h1\",\"h2\"],\"e2\":[\"h1\"]}\n"
        "semiclosed_witness=-\n");
  CHECK(r.err.empty());

  const auto oracle = run({"--no-banner", "classify", "FIX-EX", "--mode", "oracle", "--set",
                           R"({"e1":["h1","h2"],"e2":["h1","h2"]})"});
  CHECK(oracle.out.find("semiopen=true\n") != std::string::npos);
  CHECK(oracle.out.rfind("set=", 0) == 0);
}

TEST_CASE("operators and @file sets") {
  const auto dir = scratch("ops");
  softtopo::io::write_file(dir / "g0.json", R"({"e1":["h1"],"e2":[]})");
  const std::string at = "@" + (dir / "g0.json").string();
  CHECK(run({"sscl", "FIX-EX", "--set", at, "--no-banner"}).out ==
        "{\"e1\":[\"h1\",\"h2\",\"h3\"],\"e2\":[\"h1\",\"h2\",\"h3\"]}\n");
  CHECK(run({"ssint", "FIX-EX", "--set", at, "--no-banner", "--mode", "oracle"}).out ==
        "{\"e1\":[],\"e2\":[]}\n");
  CHECK(run({"closure", "FIX-EX", "--no-banner", "--set",
             R"({"e1":["h1","h2"],"e2":["h1"]})"})
            .out == "{\"e1\":[\"h1\",\"h2\",\"h3\"],\"e2\":[\"h1\",\"h2\",\"h3\"]}\n");
  CHECK(run({"interior", "FIX-EX", "--no-banner", "--set",
             R"({"e1":["h3"],"e2":["h2","h3"]})"})
            .out == "{\"e1\":[],\"e2\":[]}\n");
  const auto js = run({"--format", "json", "ssint", "FIX-EX", "--set", at});
  CHECK(js.out == R"({"operator":"ssint","set":{"e1":["h1"],"e2":[]},"result":{"e1":[],"e2":[]}})"
                  "\n");
}

TEST_CASE("validate reports the violated axiom") {
  const auto dir = scratch("validate");
  softtopo::io::write_file(dir / "bad.json", R"({
    "signature": {"universe": ["h1", "h2", "h3"], "parameters": ["e1"]},
    "opens": [{"e1": []}, {"e1": ["h1", "h2", "h3"]}, {"e1": ["h1"]}, {"e1": ["h2"]}]
  })");
  const auto bad = run({"validate", (dir / "bad.json").string(), "--no-banner"});
  CHECK(bad.code == 2);
  CHECK(bad.out ==
        "valid=false\naxiom=union-closure\nwitness={\"e1\":[\"h1\"]}\n"
        "witness={\"e1\":[\"h2\"]}\n");
  CHECK(bad.err.rfind("error: invalid-topology: ", 0) == 0);
  CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);

  const auto good = run({"validate", "FIX-EX", "--no-banner"});
  CHECK(good.code == 0);
  CHECK(good.out == "valid=true\nopens=3\n");
}

TEST_CASE("error paths") {
  auto r = run({"classify", "FIX-EX", "--set", R"({"e1":["h9"],"e2":[]})"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.rfind("error: invalid-input: ", 0) == 0);

  r = run({"classify", "nowhere.json", "--set", "{}"});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("error: invalid-input: ", 0) == 0);

  r = run({"frobnicate"});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("error: usage: ", 0) == 0);

  r = run({"suite", "FIX-EX", "--claims", "X.1"});
  CHECK(r.code == 2);

  r = run({"axioms", "FIX-EX", "--axiom", "T9"});
  CHECK(r.code == 2);

  r = run({"gen", "--universe", "2", "--params", "1"});
  CHECK(r.code == 2);
}

TEST_CASE("axioms") {
  const auto r = run({"axioms", "FIX-IND", "--no-banner"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("semi_T0\tfalse\tp={\"e1\":[\"h1\"]} q={\"e1\":[\"h2\"]}\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 9);
  CHECK(run({"axioms", "FIX-DIS", "--axiom", "semi_T2"}).code == 0);
  CHECK(run({"axioms", "FIX-IND", "--axiom", "semi_T0"}).code == 1);
}

TEST_CASE("map-check with relative references") {
  const auto dir = scratch("map");
  softtopo::io::write_file(dir / "target.json", softtopo::io::format_space(
                                                    softtopo::io::load_space("FIX-DIS")));
  softtopo::io::write_file(dir / "f.json", R"({
    "source": "FIX-IND", "target": "target.json",
    "point_map": {"h1": "h2", "h2": "h1"}, "param_map": {"e1": "e1"}
  })");
  const auto r = run({"map-check", (dir / "f.json").string(), "--no-banner"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("surjective\ttrue\t-\ncontinuous\tfalse\t", 0) == 0);
}

TEST_CASE("gen, suite and replay") {
  const auto dir = scratch("suite");
  const auto corpus = (dir / "corpus").string();
  auto g = run({"gen", "--universe", "2", "--params", "2", "--exhaustive", "--max-bits", "3",
                "-o", corpus, "--no-banner"});
  REQUIRE(g.code == 0);
  CHECK(g.out.rfind("instances=9\nfingerprint=", 0) == 0);

  const auto a = run({"suite", corpus, "--tier", "A", "--no-banner"});
  CHECK(a.code == 0);
  CHECK(a.out.find("asserted-failures 0  coverage complete") != std::string::npos);
  CHECK(a.out.find("\tB\t") == std::string::npos);

  const auto b = run({"suite", corpus, "--claims", "T2.11.xii.literal", "--no-banner"});
  CHECK(b.code == 0);
  CHECK(b.out.find("T2.11.xii.literal\tB\trefuted\t") != std::string::npos);
  const auto bundle = fs::path(corpus) / "witnesses" / "T2.11.xii.literal" / "0";
  REQUIRE(fs::exists(bundle / "witness.json"));

  const auto rep = run({"replay", bundle.string(), "--no-banner"});
  CHECK(rep.code == 1);
  CHECK(rep.out.find("T2.11.xii.literal\tB\trefuted\t") != std::string::npos);

  const auto empty = (dir / "empty").string();
  REQUIRE(run({"gen", "--universe", "1", "--params", "1", "--count", "1", "-o", empty}).code ==
          0);
  const auto js = run({"suite", "FIX-EX", "--format", "json", "--claims", "R2.3.conv.so"});
  CHECK(js.code == 0);
  CHECK(js.out.find("\"status\": \"refuted\"") != std::string::npos);
}
