#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sgcolor/cli.hpp"

namespace {

const std::string kData = SGCOLOR_DATA_DIR;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "sgcolor");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = sgcolor::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return kData + "/" + name; }

std::string temp_file(const char* name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / (std::string("sgcolor_test_") + name);
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST_CASE("poly prints census and both polynomials") {
  const Result r = run({"poly", data("unbalanced_triangle.sg")});
  CHECK(r.code == 0);
  CHECK(r.out == "c: 1 3 3 1\nc*: 1 3 3\nP1: 1 -3 3 -1\nP0: 1 -3 3 0\n");

  CHECK(run({"poly", data("balanced_triangle.sg")}).out == "c: 1 3 2 0\nc*: 1 3 2\nP1: 1 -3 2 0\nP0: 1 -3 2 0\n");
  CHECK(run({"poly", data("unbalanced_digon.sg")}).out == "c: 1 2 1\nc*: 1 2\nP1: 1 -2 1\nP0: 1 -2 0\n");
  CHECK(run({"poly", data("double_digon.sg"), "--order", "3,2,1,0"}).out.starts_with("c: 1 4 6 3\nc*: 1 4 4\n"));
}

TEST_CASE("count agrees across methods") {
  for (const char* method : {"brute", "ie", "nbc"}) {
    CHECK(run({"count", data("unbalanced_triangle.sg"), "-k", "2", "--method", method}).out == "2\n");
    CHECK(run({"count", data("unbalanced_triangle.sg"), "-k", "5", "--method", method}).out == "64\n");
    CHECK(run({"count", data("unbalanced_triangle.sg"), "--list", data("zero_free_pairs.lst"), "--method", method})
              .out == "2\n");
    CHECK(run({"count", data("k2_positive.sg"), "-k", "0", "--method", method}).out == "0\n");
  }
}

TEST_CASE("circuits lists barbells and broken circuits") {
  const Result r = run({"circuits", data("digon_barbell_path.sg")});
  CHECK(r.code == 0);
  CHECK(r.out.find("barbells: 1\n  {0 1 2 3 4}") != std::string::npos);
  CHECK(r.out.find("broken circuits: 1\n  {0 1 2 3} removed 4") != std::string::npos);
}

TEST_CASE("switch negates crossing edges") {
  CHECK(run({"switch", data("k2_positive.sg"), "--at", "0"}).out == "2 1\n0 1 -\n");
  CHECK(run({"switch", data("k4_signed.sg"), "--at", "0,1,2,3"}).out ==
        "4 6\n0 1 -\n0 2 +\n0 3 +\n1 2 +\n1 3 +\n2 3 -\n");
}

TEST_CASE("verify passes on the fixtures") {
  for (const char* name : {"k4_signed.sg", "double_digon.sg", "unbalanced_triangle.sg"}) {
    const Result r = run({"verify", data(name), "--trials", "5"});
    CHECK(r.code == sgcolor::cli::kOk);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
}

TEST_CASE("minimize reports the outcome") {
  const Result r = run({"minimize", data("unbalanced_triangle.sg"), "-k", "4", "--mode", "zero-free"});
  CHECK(r.code == 0);
  CHECK(r.out.find("minCount: 28\ncanonicalCount: 28\ncounterexampleFound: false\n") != std::string::npos);

  const Result rnd = run({"minimize", data("unbalanced_triangle.sg"), "-k", "3", "--mode", "any", "--random", "50",
                          "--seed", "9"});
  CHECK(rnd.code == 0);
  CHECK(rnd.out.find("strategy: random seed=9\ntrials: 50\n") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::vector<std::string>> commands = {
      {"poly", data("k4_signed.sg")},
      {"circuits", data("k4_signed.sg")},
      {"verify", data("k4_signed.sg")},
      {"minimize", data("k4_signed.sg"), "-k", "2", "--mode", "any", "--random", "200", "--seed", "3"},
  };
  for (const auto& c : commands) {
    const Result a = run(c);
    const Result b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("exit codes") {
  using namespace sgcolor::cli;
  CHECK(run({}).code == kUsage);
  CHECK(run({"bogus"}).code == kUsage);
  CHECK(run({"count", data("k2_positive.sg")}).code == kUsage);
  CHECK(run({"count", data("k2_positive.sg"), "-k", "2", "--list", data("zero_free_pairs.lst")}).code == kUsage);
  CHECK(run({"poly", data("k2_positive.sg"), "--order", "0,0"}).code == kUsage);
  CHECK(run({"minimize", data("k2_positive.sg"), "-k", "3", "--mode", "zero-free"}).code == kUsage);
  CHECK(run({"poly", "--help"}).code == kOk);

  CHECK(run({"poly", data("missing.sg")}).code == kParse);
  const Result loop = run({"poly", temp_file("loop.sg", "1 1\n0 0 +\n")});
  CHECK(loop.code == kParse);
  CHECK(loop.err.find("line 2") != std::string::npos);
  CHECK(run({"count", data("k2_positive.sg"), "--list", data("zero_free_pairs.lst")}).code == kParse);

  CHECK(run({"poly", data("k4_signed.sg"), "--max-edges", "5"}).code == kResource);
  CHECK(run({"circuits", data("k4_signed.sg"), "--max-circuits", "2"}).code == kResource);
  CHECK(run({"minimize", data("k4_signed.sg"), "-k", "4", "--mode", "any", "--budget", "10"}).code == kResource);

  CHECK(kMismatch == 4);
}
