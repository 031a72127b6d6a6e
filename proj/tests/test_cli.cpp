#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "maglab/io.hpp"

namespace fs = std::filesystem;
using maglab::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "maglab");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "maglab_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream os(p);
  os << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream is(p);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("gen writes graph files") {
  const auto r = call({"gen", "wheel", "5", "--faces"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("graph 6 10 5\n", 0) == 0);
  CHECK(call({"gen", "nosuch", "3"}).code == 2);
  CHECK(call({"gen", "petersen", "4", "2"}).code == 2);
  CHECK(call({"gen", "complete"}).code == 2);
}

TEST_CASE("solve on Petersen finds constant 29 and verify accepts the file") {
  const auto file = scratch("petersen.lab");
  const auto r = call({"solve", "--gen", "petersen", "5", "2", "--v", "--e", "--super",
                       "--target", "edges", "--kind", "magic", "--seed", "13", "--max-iters",
                       "3000000", "-o", file.string()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "result: solved"));
  CHECK(contains(r.out, "magic constant 29"));
  CHECK(contains(r.out, "mt19937_64+lemire53-v1 seed 13"));

  const auto v = call({"verify", "--gen", "petersen", "5", "2", "-l", file.string()});
  CHECK(v.code == 0);
  CHECK(contains(v.out, "magic constant 29"));
  CHECK(contains(v.out, "attestation: reproduced"));

  // Swap two edge labels by hand.
  auto text = read_file(file);
  const auto p1 = text.find("\ne 1 ");
  const auto p2 = text.find("\ne 2 ");
  REQUIRE(p1 != std::string::npos);
  REQUIRE(p2 != std::string::npos);
  const auto l1 = text.substr(p1 + 5, text.find('\n', p1 + 1) - p1 - 5);
  const auto l2 = text.substr(p2 + 5, text.find('\n', p2 + 1) - p2 - 5);
  text.replace(p2 + 5, l2.size(), l1);
  text.replace(p1 + 5, l1.size(), l2);
  const auto swapped = scratch("swapped.lab");
  write_file(swapped, text);
  const auto bad = call({"verify", "--gen", "petersen", "5", "2", "-l", swapped.string()});
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "weights differ: wt(edge"));

  // A repeated label is a bijection failure, reported before weights.
  auto rep = read_file(file);
  const auto q = rep.find("\ne 3 ");
  rep.replace(q + 5, rep.find('\n', q + 1) - q - 5, l1);
  const auto repeated = scratch("repeated.lab");
  write_file(repeated, rep);
  const auto r2 = call({"verify", "--gen", "petersen", "5", "2", "-l", repeated.string()});
  CHECK(r2.code == 1);
  CHECK(contains(r2.out, "bijection: violated"));
  CHECK_FALSE(contains(r2.out, "kind:"));
}

TEST_CASE("solve on a K2 graph file is immediate") {
  const auto g = scratch("k2.txt");
  write_file(g, "graph 2 1 0\ne 1 2\n");
  const auto r = call({"solve", "--graph", g.string(), "--v", "--e", "--target", "edges",
                       "--kind", "magic", "--max-iters", "10"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "magic constant 6"));
  CHECK(contains(r.out, "iterations: 0"));
}

TEST_CASE("solve reports unsolved at the cap") {
  const auto r = call({"solve", "--gen", "complete", "2", "--e", "--target", "vertices", "--kind",
                       "antimagic", "--max-iters", "1000"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "result: unsolved"));
}

TEST_CASE("solve on the 24-vertex grid product") {
  const auto r = call({"solve", "--gen", "grid-p2p3", "3", "1", "--e", "--target", "vertices",
                       "--kind", "antimagic", "--max-iters", "1000000"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "24 vertices, 52 edges"));
}

TEST_CASE("detect-ad sweep") {
  const auto r = call({"solve", "--gen", "cycle", "4", "--v", "--e", "--target", "vertices",
                       "--kind", "ad", "--detect-ad", "--max-iters", "20000"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "weights form progression"));
  CHECK(call({"solve", "--gen", "cycle", "4", "--v", "--e", "--kind", "ad", "--detect-ad"}).code ==
        2);
  CHECK(call({"solve", "--gen", "cycle", "4", "--v", "--e", "--kind", "ad"}).code == 2);
}

TEST_CASE("oracle census through the CLI") {
  const auto g = scratch("c3.txt");
  write_file(g, "graph 3 3 0\ne 1 2\ne 2 3\ne 1 3\n");
  const auto r = call({"oracle", "--graph", g.string(), "--v", "--e", "--target", "edges",
                       "--kind", "magic", "--mode", "count"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "count: 24"));
  CHECK(contains(r.out, "  9 6\n  10 6\n  11 6\n  12 6\n"));

  const auto none = call({"oracle", "--gen", "complete", "2", "--e", "--target", "vertices",
                          "--kind", "antimagic"});
  CHECK(none.code == 1);
  CHECK(contains(none.out, "exhausted-with-none"));

  const auto budget = call({"oracle", "--gen", "complete", "5", "--v", "--e", "--kind",
                            "antimagic", "--budget", "50"});
  CHECK(budget.code == 4);
}

TEST_CASE("export-ilp") {
  const auto r = call({"export-ilp", "--gen", "complete", "3", "--v", "--e", "--target", "edges",
                       "--K", "12"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "x_6_6"));
  CHECK_FALSE(contains(r.out, "x_7_1"));
  const auto prefix = scratch("k3").string();
  const auto s = call({"export-ilp", "--gen", "complete", "3", "--v", "--e", "--target", "edges",
                       "--sweep", "-o", prefix});
  CHECK(s.code == 0);
  CHECK(fs::exists(prefix + ".K12.lp"));
  CHECK(call({"export-ilp", "--gen", "complete", "3", "--v", "--e", "--kind", "antimagic", "--K",
              "3"})
            .code == 2);
}

TEST_CASE("bench output is reproducible without wall time") {
  const std::vector<std::string> args{"bench", "--family", "kn-super-vmt", "--points", "6,7",
                                      "--runs", "2", "--no-wall-time", "--max-iters", "2000000"};
  const auto a = call(args);
  const auto b = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind(maglab::io::kBenchHeader, 0) == 0);
  std::istringstream is(a.out);
  CHECK(maglab::io::read_bench_csv(is).size() == 4);
  CHECK(contains(a.err, "linear fit"));
  CHECK(call({"bench", "--family", "kn-super-vmt", "--points", "40"}).code == 2);
  CHECK(call({"bench", "--family", "nope"}).code == 2);
}

TEST_CASE("usage and input errors map to exit codes") {
  CHECK(call({}).code == 2);
  CHECK(call({"solve", "--bogus"}).code == 2);
  CHECK(call({"solve", "--gen", "cycle", "4", "--target", "edges"}).code == 2);
  CHECK(call({"solve", "--graph", "/nonexistent.txt", "--e"}).code == 3);
  const auto bad = scratch("bad.txt");
  write_file(bad, "graph 2 1 0\ne 1 1\n");
  CHECK(call({"solve", "--graph", bad.string(), "--e"}).code == 3);
  const auto junk = scratch("junk.lab");
  write_file(junk, "not a labelling\n");
  CHECK(call({"verify", "--gen", "cycle", "3", "-l", junk.string()}).code == 3);
  CHECK(call({"solve", "--help"}).code == 0);
  CHECK(call({"--version"}).code == 0);
}
