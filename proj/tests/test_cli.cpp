#include <cstdlib>
#include <filesystem>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "cubix/cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult cli(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"cubix"};
  storage.insert(storage.end(), args);
  std::vector<const char*> argv;
  for (const auto& a : storage) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cubix::run_cli(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Scratch directory for generated documents, shared across cases.
const std::string& workdir() {
  static const std::string dir = [] {
    auto d = std::filesystem::temp_directory_path() / "cubix-cli-tests";
    std::filesystem::create_directories(d);
    return d.string();
  }();
  return dir;
}

const std::string& pair2_path() {
  static const std::string path = [] {
    std::string p = workdir() + "/pair2.json";
    REQUIRE(cli({"gen", "--base", "pair_groupoid:2", "--dim", "2",
                 "--connections", "-o", p})
                .code == 0);
    return p;
  }();
  return path;
}

const std::string& chain2_path() {
  static const std::string path = [] {
    std::string p = workdir() + "/chain2.json";
    REQUIRE(cli({"gen", "--base", "chain_poset:2", "--dim", "2",
                 "--connections", "-o", p})
                .code == 0);
    return p;
  }();
  return path;
}

}  // namespace

TEST_CASE("generation reports the written carrier") {
  auto r = cli({"gen", "--base", "discrete:2", "--dim", "2", "--connections",
                "-o", workdir() + "/d2.json"});
  CHECK(r.code == 0);
  CHECK(r.out == "wrote " + workdir() + "/d2.json: single-set dim 2, 2 cells\n");
}

TEST_CASE("checking a clean document exits zero") {
  auto r = cli({"check", pair2_path(), "--suite", "all"});
  CHECK(r.code == 0);
  CHECK(r.out.find("suite category: 864 checks, 0 violations") !=
        std::string::npos);
  CHECK(r.out.find("total: 2368 checks, 0 violations") != std::string::npos);
}

TEST_CASE("divisibility violations exit one and are printed") {
  auto r = cli({"check", chain2_path(), "--suite", "np:0"});
  CHECK(r.code == 1);
  CHECK(r.out.find("V [INV.np] k=1 i=1 x=(a,a,b,b)") != std::string::npos);
}

TEST_CASE("the json report is versioned and machine readable") {
  auto r = cli({"check", chain2_path(), "--suite", "np:0", "--json"});
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["report_version"] == 1);
  CHECK(j["kind"] == "single-set");
  CHECK(j["passed"] == false);
  CHECK(j["suites"]["np:0"]["violations"][0]["axiom_id"] == "INV.np");
}

TEST_CASE("output does not depend on the thread count") {
  auto serial = cli({"check", pair2_path(), "--threads", "1"});
  auto parallel = cli({"check", pair2_path(), "--threads", "4"});
  CHECK(serial.code == parallel.code);
  CHECK(serial.out == parallel.out);
}

TEST_CASE("translation and round trips pass on generated nerves") {
  std::string cpath = workdir() + "/pair2-classical.json";
  auto t = cli({"translate", pair2_path(), "--to", "classical", "-o", cpath});
  CHECK(t.code == 0);
  CHECK(t.out == "wrote " + cpath +
                     ": classical dim 2, cells per level: 2 4 16\n");
  CHECK(cli({"check", cpath, "--suite", "all"}).code == 0);
  auto mu = cli({"roundtrip", pair2_path()});
  CHECK(mu.code == 0);
  CHECK(mu.out.find("suite mu: 272 checks, 0 violations") != std::string::npos);
  auto eta = cli({"roundtrip", cpath});
  CHECK(eta.code == 0);
  CHECK(eta.out.find("suite eta: 305 checks, 0 violations") !=
        std::string::npos);

  std::string spath = workdir() + "/pair2-back.json";
  CHECK(cli({"translate", cpath, "--to", "single-set", "-o", spath}).code == 0);
  CHECK(cli({"check", spath, "--suite", "all"}).code == 0);
}

TEST_CASE("inversion prints a certificate, none, or a lookup error") {
  auto hit = cli({"invert", pair2_path(), "--direction", "2", "--cell",
                  "(a,b,a,b)"});
  CHECK(hit.code == 0);
  CHECK(hit.out.find("inverse(2, (a,b,a,b)) = (b,a,b,a)") !=
        std::string::npos);
  auto built = cli({"invert", pair2_path(), "--direction", "2", "--cell",
                    "(a,b,a,b)", "--constructive"});
  CHECK(built.out == hit.out);

  auto miss = cli({"invert", chain2_path(), "--direction", "1", "--cell",
                   "(a,a,b,b)"});
  CHECK(miss.code == 0);
  CHECK(miss.out == "none\n");

  auto bad = cli({"invert", pair2_path(), "--direction", "1", "--cell", "zz"});
  CHECK(bad.code == 3);
  CHECK(bad.err.find("unknown cell id") != std::string::npos);
}

TEST_CASE("word normalization prints the normal form") {
  auto id = cli({"normalize", "--word", "d1- e1", "--level", "1"});
  CHECK(id.code == 0);
  CHECK(id.out == "id\n");
  auto shifted = cli({"normalize", "--word", "d1- e2", "--level", "2"});
  CHECK(shifted.out == "e1 d1-\n");
  CHECK(cli({"normalize", "--word", "qq", "--level", "1"}).code == 3);
  CHECK(cli({"normalize", "--word", "d1- d1-", "--level", "1"}).code == 3);
  CHECK(cli({"normalize", "--word", "d1-", "--level", "1", "--rules", "x"})
            .code == 2);
}

TEST_CASE("the lattice lists fixed point sets with inclusions") {
  auto r = cli({"lattice", pair2_path()});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "S^{}: 16 cells\n"
        "S^{1}: 4 cells\n"
        "S^{2}: 4 cells\n"
        "S^{1,2}: 2 cells\n"
        "S^{1} <= S^{}\n"
        "S^{2} <= S^{}\n"
        "S^{1,2} <= S^{1}\n"
        "S^{1,2} <= S^{2}\n");
}

TEST_CASE("usage and parse failures map to distinct exit codes") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"gen", "--base", "octahedron:2", "--dim", "2", "-o",
             workdir() + "/x.json"})
            .code == 2);
  CHECK(cli({"check", workdir() + "/missing.json"}).code == 3);
  CHECK(cli({"check", pair2_path(), "--suite", "wat"}).code == 2);
  std::string out_path = workdir() + "/y.json";
  CHECK(cli({"translate", pair2_path(), "--to", "single-set", "-o", out_path})
            .code == 2);
  std::string cpath = workdir() + "/lattice-wrong.json";
  REQUIRE(cli({"translate", pair2_path(), "--to", "classical", "-o", cpath})
              .code == 0);
  CHECK(cli({"lattice", cpath}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("oversized generation respects the budget env override") {
  setenv("CUBIX_CELL_BUDGET", "10", 1);
  auto r = cli({"gen", "--base", "pair_groupoid:2", "--dim", "2",
                "-o", workdir() + "/never.json"});
  unsetenv("CUBIX_CELL_BUDGET");
  CHECK(r.code == 3);
  CHECK(r.err.find("budget") != std::string::npos);
}
