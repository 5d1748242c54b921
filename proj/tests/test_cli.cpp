#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ivcat/cli.hpp"

using namespace ivcat;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST_CASE("count") {
  CHECK(invoke({"count", "--n", "1", "--ops", "QSCKE"}).out == "2\n");
  CHECK(invoke({"count", "--n", "5", "--ops", "Q"}).out == "720\n");
  CHECK(invoke({"count", "--n", "4", "--ops", "e", "--algorithm", "brute"}).out == "199\n");
  CHECK(invoke({"count", "--n", "5", "--ops", "E", "--shards", "4"}).out == "1308\n");
  CHECK(invoke({"count", "--n", "3", "--ops", "", "--verify"}).out == "64\n");
  CHECK(invoke({"count", "--n", "3", "--ops", "none"}).out == "64\n");
}

TEST_CASE("validation errors produce no output") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"count", "--n", "0", "--ops", "Q"},
           {"count", "--n", "3", "--ops", "QZ"},
           {"count", "--n", "3"},
           {"count", "--n", "3", "--ops", "Q", "--shards", "0"},
           {"count", "--n", "3", "--ops", "Q", "--algorithm", "dfs"},
           {"sequence", "--ops", "Q", "--n-max", "3", "--format", "xml"},
           {"check", "--n", "2", "--ops", "Q", "--set", "1,3"},
           {"bogus"},
           {}}) {
    const auto r = invoke(args);
    CHECK(r.code == cli::kExitValidation);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("caps") {
  const auto big = invoke({"count", "--n", "11", "--ops", "Q"});
  CHECK(big.code == cli::kExitCap);
  CHECK(big.out.empty());
  CHECK(invoke({"count", "--n", "7", "--ops", "Q", "--algorithm", "brute"}).code == cli::kExitCap);
  CHECK(invoke({"sequence", "--ops", "Q", "--n-max", "7", "--algorithm", "brute"}).code == cli::kExitCap);
  CHECK(invoke({"list", "--n", "4", "--ops", "", "--cap", "5"}).code == cli::kExitCap);
}

TEST_CASE("sequence formats") {
  CHECK(invoke({"sequence", "--ops", "QSE", "--n-max", "4", "--format", "oeis"}).out == "1 2\n2 4\n3 8\n4 16\n");
  CHECK(invoke({"sequence", "--ops", "QE", "--n-max", "3", "--format", "csv", "--compare"}).out ==
        "n,count,reference,match\n1,2,2,true\n2,5,5,true\n3,14,14,true\n");
  const auto table = invoke({"sequence", "--ops", "Q", "--n-max", "3"});
  CHECK(table.code == 0);
  CHECK(table.out.rfind("#(Q) [next_closure]\n", 0) == 0);
  const auto json = invoke({"sequence", "--ops", "C", "--n-max", "2", "--format", "json"});
  CHECK(json.out.find("\"spec\": \"C\"") != std::string::npos);
  const auto verified = invoke({"sequence", "--ops", "CK", "--n-max", "4", "--verify", "--shards", "3"});
  CHECK(verified.code == 0);
  const auto a = invoke({"sequence", "--ops", "E", "--n-max", "5", "--format", "csv", "--shards", "1"});
  const auto b = invoke({"sequence", "--ops", "E", "--n-max", "5", "--format", "csv", "--shards", "4"});
  CHECK(a.out == b.out);
}

TEST_CASE("list, lattice and check") {
  CHECK(invoke({"list", "--n", "2", "--ops", "QSE"}).out == "\n2,2\n1,1\n1,1;1,2;2,2\n");
  CHECK(invoke({"list", "--n", "2", "--ops", "QSE", "--format", "indices"}).out == "\n2\n0\n0,1,2\n");
  CHECK(invoke({"list", "--n", "2", "--ops", "QSE", "--format", "bitmask"}).out == "000\n001\n100\n111\n");
  CHECK(invoke({"list", "--n", "2", "--ops", "QSE", "--format", "json"}).out == "[[],[2],[0],[0,1,2]]\n");
  const auto dot = invoke({"lattice", "--n", "2", "--ops", "QSE"});
  CHECK(dot.out.find("rankdir=BT") != std::string::npos);
  CHECK(invoke({"lattice", "--n", "2", "--ops", "QSE", "--format", "json"}).out.find("\"covers\"") !=
        std::string::npos);
  CHECK(invoke({"check", "--n", "3", "--ops", "Q", "--set", "2,3;3,3"}).out == "closed\n");
  CHECK(invoke({"check", "--n", "3", "--ops", "Q", "--set", "1,3"}).out == "not closed\nmissing: 2,3;3,3\n");
  CHECK(invoke({"check", "--n", "3", "--ops", "", "--set", ""}).out == "closed\n");
}

TEST_CASE("poset") {
  const auto chain = temp_file("ivcat_chain3.txt", "elements: a b c\na <= b\nb <= c\n");
  const auto r = invoke({"poset", "--file", chain});
  CHECK(r.code == 0);
  CHECK(r.out.find("elements=3\n") != std::string::npos);
  CHECK(r.out.find("ideals=4\n") != std::string::npos);
  CHECK(r.out.find("distributive=true\n") != std::string::npos);
  CHECK(r.out.find("subfunctors_match=true\n") != std::string::npos);
  CHECK(r.out.find("incidence_associative=true\n") != std::string::npos);
  CHECK(r.out.find("coherent=true\n") != std::string::npos);
  const auto only = invoke({"poset", "--file", chain, "--checks", "ideals"});
  CHECK(only.out == "elements=3\nideals=4\n");
  CHECK(invoke({"poset", "--chain-check", "3"}).out.find("chain_equivalence[3]=true") != std::string::npos);

  const auto cycle = temp_file("ivcat_cycle.txt", "elements: a b\na <= b\nb <= a\n");
  const auto bad = invoke({"poset", "--file", cycle});
  CHECK(bad.code == cli::kExitValidation);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("cycle") != std::string::npos);
  CHECK(invoke({"poset", "--file", chain, "--checks", "nope"}).code == cli::kExitValidation);
  CHECK(invoke({"poset", "--file", "/nonexistent/poset.txt"}).code == cli::kExitValidation);
  CHECK(invoke({"poset"}).code == cli::kExitValidation);
  std::remove(chain.c_str());
  std::remove(cycle.c_str());
}

TEST_CASE("help") {
  const auto r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("#(Q,S,E)") != std::string::npos);
}
