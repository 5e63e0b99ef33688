#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixpoint/cli.hpp"
#include "fixpoint/fixtures.hpp"
#include "fixpoint/instance_format.hpp"
#include "fixpoint/report.hpp"

using namespace fixpoint;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

/// RAII temp file under the system temp directory.
struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path(std::filesystem::temp_directory_path() / name) {
    std::ofstream(path) << content;
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
};

}  // namespace

TEST_CASE("verify reports violations and exits nonzero") {
  const auto r = run({"verify", "--example", "ex3_2"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "instance ex3_2: 6 sample points, 36 ordered pairs"));
  CHECK(contains(r.out, "class generalized-ZG: violated"));
  CHECK(contains(r.out, "witness x=(4, 5) y=(5, 4) lhs=-4"));
  CHECK(contains(r.out, "witness x=(5, 4) y=(4, 5) lhs=-4"));
  CHECK(contains(r.out, "class suzuki-generalized-ZG: satisfied-on-sample"));
  CHECK(contains(r.out, "class suzuki-rational: violated [experimental]"));
  CHECK(contains(r.out, "range-inclusion: pass"));
}

TEST_CASE("verify restricted to a satisfied class exits zero") {
  const auto r =
      run({"verify", "--example", "ex3_2", "--class", "suzuki-generalized-ZG"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "class suzuki-generalized-ZG: satisfied-on-sample"));
  CHECK_FALSE(contains(r.out, "class ZG:"));
}

TEST_CASE("verify rejects an unknown class id") {
  const auto r = run({"verify", "--example", "ex3_2", "--class", "banach"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "unknown contraction class"));
}

TEST_CASE("verify surfaces the range defect and caps grid witnesses") {
  const auto r = run({"verify", "--example", "ex3_1", "--resolution", "300"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "class ZG: violated"));
  CHECK(contains(r.out, "(witness list capped at 10)"));
  CHECK(contains(r.out, "range-inclusion: FAIL (f value 0.16 unmatched by g)"));
}

TEST_CASE("verify exits zero when every class is satisfied on the sample") {
  const auto r = run({"verify", "--example", "ex4_1", "--resolution", "200"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "class rational: satisfied-on-sample"));
  CHECK(contains(r.out, "range-inclusion: pass"));
}

TEST_CASE("solve converges on ex4_1 and reports the limit in the envelope") {
  const auto r = run({"solve", "--example", "ex4_1", "--start", "0", "--format",
                      "structured"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["tool"] == "fixpoint");
  CHECK(j["command"] == "solve");
  CHECK(j["instance"] == "ex4_1");
  CHECK(j["flags"]["tol"] == 1e-9);  // solve defaults to the convergence tolerance
  CHECK(j["flags"]["start"] == "0");
  CHECK(j["payload"]["orbit"]["termination"] == "converged");
  const double limit = j["payload"]["orbit"]["limit"].get<double>();
  CHECK(limit == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(j["payload"]["orbit"]["iterations"].get<int>() <= 60);
}

TEST_CASE("solve reports a missing preimage in-band") {
  const auto r = run({"solve", "--example", "ex3_1", "--start", "0.7"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "termination: no-preimage after 0 steps"));
  CHECK(contains(r.out, "last value: 0.16"));
}

TEST_CASE("solve accepts fraction start points") {
  const auto r = run({"solve", "--example", "ex3_1", "--start", "3/10"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "termination: converged after 2 steps"));
  CHECK(contains(r.out, "last value: 0"));
}

TEST_CASE("solve requires a start point") {
  const auto r = run({"solve", "--example", "ex4_1"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "--start"));
}

TEST_CASE("solve rejects a start outside the domain") {
  const auto r = run({"solve", "--example", "ex3_1", "--start", "1.5"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "error:"));
  CHECK(contains(r.err, "outside the domain"));
}

TEST_CASE("coincidence locates the agreement point and the common fixed point") {
  const auto r = run({"coincidence", "--example", "ex3_1", "--common"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1 coincidence point(s)"));
  CHECK(contains(r.out, "v=0 u=0 residual=0 (unique on sample)"));
  CHECK(contains(r.out, "common fixed point: 0 (maps weakly compatible)"));
}

TEST_CASE("coincidence without --common stops at the agreement points") {
  const auto r = run({"coincidence", "--example", "ex3_2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "v=(0, 0) u=(0, 0) residual=0 (unique on sample)"));
  CHECK_FALSE(contains(r.out, "common fixed point"));
}

TEST_CASE("axioms checks the space and the control set together") {
  const auto r = run({"axioms", "--example", "ex3_1"});
  CHECK(r.code == 0);
  for (const char* line :
       {"non-negativity: pass", "symmetry: pass", "identity: pass",
        "triangle: pass", "c-class: pass", "threshold-property: pass",
        "simulation-conditions: pass"}) {
    CHECK(contains(r.out, line));
  }
}

TEST_CASE("example writes a parseable instance file to stdout") {
  const auto r = run({"example", "ex3_2"});
  CHECK(r.code == 0);
  const auto inst = parse_instance(r.out);
  CHECK(inst.id == "ex3_2");
}

TEST_CASE("example writes to a file with --out") {
  const auto path =
      (std::filesystem::temp_directory_path() / "fixpoint_example_out.txt")
          .string();
  const auto r = run({"example", "ex4_1", "--out", path});
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(parse_instance(buf.str()).id == "ex4_1");
  std::remove(path.c_str());
}

TEST_CASE("example rejects unknown instance ids") {
  const auto r = run({"example", "ex9_9"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "error:"));
}

TEST_CASE("instance files load through --file like built-ins through --example") {
  const TempFile file("fixpoint_cli_roundtrip.txt",
                      serialize_instance(load_example("ex3_2")));
  const auto from_file =
      run({"verify", "--file", file.path.string(), "--class", "ZG"});
  const auto from_example = run({"verify", "--example", "ex3_2", "--class", "ZG"});
  CHECK(from_file.code == 1);
  // Identical analysis output; only the source of the instance differed.
  CHECK(from_file.out == from_example.out);
}

TEST_CASE("exactly one instance source must be given") {
  const auto neither = run({"verify"});
  CHECK(neither.code == 2);
  CHECK(contains(neither.err, "exactly one of --example or --file"));

  const TempFile file("fixpoint_cli_both.txt", "id x\n");
  const auto both =
      run({"verify", "--example", "ex3_1", "--file", file.path.string()});
  CHECK(both.code == 2);
}

TEST_CASE("an unreadable instance file is a clean error") {
  const auto r = run({"verify", "--file", "/definitely/not/here.txt"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "cannot read instance file"));
}

TEST_CASE("a malformed instance file surfaces the parser position") {
  const TempFile file("fixpoint_cli_bad.txt",
                      "id bad\n"
                      "domain interval [0, 1] resolution 20\n"
                      "metric chebyshev\n");
  const auto r = run({"verify", "--file", file.path.string()});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "line 3:8"));
}

TEST_CASE("structured reports are identical across runs except for timing") {
  auto strip = [](const std::string& text) {
    json j = json::parse(text);
    j.erase("timing_ms");
    return j.dump();
  };
  const auto a = run({"verify", "--example", "ex3_2", "--format", "structured"});
  const auto b = run({"verify", "--example", "ex3_2", "--format", "structured"});
  CHECK(a.code == 1);
  CHECK(b.code == 1);
  CHECK(strip(a.out) == strip(b.out));
  CHECK(a.out.size() > 2);
}

TEST_CASE("the envelope identifies the tool, command, and flags") {
  const auto r =
      run({"coincidence", "--example", "ex3_2", "--format", "structured"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["tool"] == "fixpoint");
  CHECK(j["version"] == "0.1.0");
  CHECK(j["command"] == "coincidence");
  CHECK(j["instance"] == "ex3_2");
  CHECK(j["flags"]["common"] == false);
  CHECK(j["payload"]["coincidences"].size() == 1);
}

TEST_CASE("bad invocations exit with the usage code") {
  CHECK(run({}).code == 2);                                      // no subcommand
  CHECK(run({"frobnicate"}).code == 2);                          // unknown subcommand
  CHECK(run({"verify", "--example", "ex3_1", "--format", "yaml"}).code == 2);
  CHECK(run({"verify", "--example", "ex3_1", "--resolution", "-5"}).code == 2);
  CHECK(run({"verify", "--nope"}).code == 2);                    // unknown flag
}

TEST_CASE("help exits zero") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "verify"));
  CHECK(contains(r.out, "solve"));
}
