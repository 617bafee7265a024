#include "lfq/report.hpp"
#include "lfq/triangulation.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace lfq;

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs the tool with stderr discarded and returns its exit status and stdout.
Run run(const std::string& args) {
  const std::string cmd = std::string(LFQ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

json run_json(const std::string& args, int expected_status = 0) {
  const Run r = run(args);
  CAPTURE(args);
  CHECK(r.status == expected_status);
  json doc = json::parse(r.out);
  CHECK(validate_report(doc).empty());
  return doc;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("lfq_cli_test_" + name);
}

}  // namespace

TEST_CASE("cli derive: 5_2 report") {
  const json d = run_json("derive --knot 5_2");
  CHECK(d["command"] == "derive");
  CHECK(d["ok"] == true);
  const json& g = d["result"]["gluing"];
  CHECK(d["result"]["kinematics"]["Q"] == json::parse("[[0,-2,1],[-2,-4,3],[1,3,-2]]"));
  CHECK(g["sigma"] == json::parse("[1,1,1]"));
  CHECK(g["m"] == json::parse("[0,1,-1]"));
  CHECK(g["N"] == d["result"]["kinematics"]["Q"]);
  CHECK(g["t"] == "-a1 + a2");
}

TEST_CASE("cli real: 4_1 constant") {
  const json d = run_json("real --knot 4_1");
  CHECK(std::abs(d["result"]["value"].get<double>() - 5.60241216) < 1e-6);
  for (const char* method : {"period", "alt-period"}) {
    const json e = run_json(std::string("real --knot 4_1 --method ") + method);
    CHECK(std::abs(e["result"]["value"].get<double>() - d["result"]["value"].get<double>()) < 1e-9);
  }
  // An evaluation budget below what the quadrature needs is a computation failure.
  CHECK(run("real --knot 4_1 --max-evals 10").status == 1);
  CHECK(run("real --knot 4_1 --mu-dot 0.9 --method period").status == 1);
}

TEST_CASE("cli count: 4_1 at p = 5") {
  const json d = run_json("count --knot 4_1 --p 5 --all-eps --histogram --cross-check");
  const json& run0 = d["result"]["runs"][0];
  CHECK(run0["p"] == 5);
  CHECK(run0["invariant"] == 0);
  CHECK(run0["total_nondegenerate"] == 0);
  CHECK(run0["degenerate_points"].size() == 1);
  CHECK(run0["degenerate_points"][0]["eps"] == 4);
  const json e = run_json("count --knot 4_1 --p 5 --eps 4");
  CHECK(e["result"]["runs"][0]["fibers"].size() == 1);
  const json r = run_json("count --knot 3_1 --p-range 5:13");
  CHECK(r["result"]["runs"].size() == 4);
}

TEST_CASE("cli verify: exit status follows the checks") {
  const json d = run_json("verify --suite residue --samples 200");
  CHECK(d["result"]["suites"][0]["ok"] == true);
  CHECK(run_json("verify --suite inversion")["ok"] == true);
  // The finite pentagon fails on x + y = 1; the tool reports it and exits 1.
  const json f = run_json("verify --suite pentagon-finite", 1);
  CHECK(f["ok"] == false);
  CHECK(run_json("verify-real --samples 50")["ok"] == true);
}

TEST_CASE("cli igusa") {
  const json d = run_json("igusa --p 3 --s 1,2 --n 4 --poly 'x*(x-1)'");
  CHECK(d["ok"] == true);
  CHECK(d["result"]["rows"].size() == 2);
}

TEST_CASE("cli usage errors exit 2") {
  CHECK(run("").status == 2);
  CHECK(run("count --knot 4_1").status == 2);
  CHECK(run("count --knot 9_9 --p 5").status == 2);
  CHECK(run("count --knot 4_1 --p 6").status == 2);
  CHECK(run("count --knot 4_1 --p 5 --p-range 3:7").status == 2);
  CHECK(run("derive --knot 4_1 --free-order q7").status == 2);
  CHECK(run("frobnicate").status == 2);
}

TEST_CASE("cli output options and file input") {
  const auto out = temp_file("out.json");
  std::filesystem::remove(out);
  const Run r = run("--out " + out.string() + " derive --knot 4_1");
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(validate_report(json::parse(ss.str())).empty());
  std::filesystem::remove(out);

  const Run text = run("--format text derive --knot 4_1");
  CHECK(text.status == 0);
  CHECK(text.out.find("command: derive") != std::string::npos);

  const auto tri = temp_file("5_2.json");
  {
    std::ofstream f(tri);
    f << serialize_triangulation(*builtin("5_2"));
  }
  const json from_file = run_json("derive --knot " + tri.string());
  const json bundled = run_json("derive --knot 5_2");
  CHECK(from_file["result"]["gluing"] == bundled["result"]["gluing"]);
  std::filesystem::remove(tri);
}

TEST_CASE("cli reports are deterministic apart from timings") {
  for (const char* args : {"count --knot 5_2 --p 11 --threads 1", "verify --suite angled --samples 100",
                           "real --knot 5_2-hks", "derive --knot m237"}) {
    json a = run_json(args), b = run_json(args);
    a.erase("timings");
    b.erase("timings");
    CAPTURE(args);
    CHECK(a == b);
  }
  json one = run_json("count --knot 5_2 --p 11 --threads 1"), three = run_json("count --knot 5_2 --p 11 --threads 3");
  CHECK(one["result"] == three["result"]);
}
