#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = etaq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(ETAQ_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GoldenCase {
  const char* file;
  std::vector<std::string> args;
};

const std::vector<GoldenCase> kGolden = {
    {"enumerate_11_2.json", {"enumerate", "--level", "11", "--weight", "2"}},
    {"enumerate_5_2.json", {"enumerate", "--level", "5", "--weight", "2"}},
    {"enumerate_15_2.json", {"enumerate", "--level", "15", "--weight", "2"}},
    {"qexp_delta.json", {"qexp", "--eta", "1:24", "--terms", "5"}},
    {"qexp_empty.json", {"qexp", "--eta", "", "--terms", "3"}},
    {"qexp_11.json", {"qexp", "--eta", "1:2,11:2", "--terms", "12"}},
    {"dims_11_4.json", {"dims", "--level", "11", "--weight", "4", "--character", "trivial"}},
    {"dims_level1_12.json", {"dims", "--level", "1", "--weight", "12"}},
    {"count_11_6.json", {"count", "--prime", "11", "--weight", "6"}},
    {"verify_11_2.json", {"verify", "--level", "11", "--weight", "2"}},
    {"lift_11_6_1.json", {"lift", "--prime", "11", "--weight", "6", "--v1", "1"}},
    {"ratio_11_24.json", {"ratio", "--prime", "11", "--kmax", "24"}},
    {"sweep_13_6.csv", {"sweep", "--pmax", "13", "--kmax", "6", "--format", "csv"}},
};

}  // namespace

TEST_CASE("golden outputs") {
  for (const auto& g : kGolden) {
    CAPTURE(g.file);
    const Run r = run(g.args);
    CHECK(r.code == 0);
    CHECK(r.out == golden(g.file));
  }
}

TEST_CASE("JSON output round-trips byte for byte") {
  for (const auto& g : kGolden) {
    const std::string text = golden(g.file);
    if (text.front() != '{') continue;
    CAPTURE(g.file);
    const auto parsed = nlohmann::json::parse(text);
    CHECK(parsed.dump(2) + "\n" == text);
    CHECK(parsed.contains("command"));
    CHECK(parsed.contains("params"));
    CHECK(parsed.contains("result"));
    CHECK(parsed["diagnostics"].is_array());
  }
}

TEST_CASE("enumerate") {
  const auto j = nlohmann::json::parse(run({"enumerate", "--level", "11", "--weight", "2"}).out);
  CHECK(j["result"]["cusp"] == nlohmann::json::array({"1:2,11:2"}));
  for (const char* key : {"level", "weight", "admissible", "h", "d", "c", "L", "cusp", "noncusp", "formula_count",
                          "oracle_count"})
    CHECK(j["result"].contains(key));

  const auto five = nlohmann::json::parse(run({"enumerate", "--level", "5", "--weight", "2"}).out);
  CHECK(five["result"]["cusp"].empty());
  CHECK(five["result"]["noncusp"].size() == 2);

  const auto three = nlohmann::json::parse(run({"enumerate", "--level", "11", "--weight", "3"}).out);
  CHECK(three["result"]["admissible"] == true);
  CHECK(three["result"]["h"] == 1);
  CHECK(three["result"]["formula_count"] == three["result"]["cusp"].size());

  const Run zero = run({"enumerate", "--level", "11", "--weight", "0"});
  CHECK(zero.code == 2);
  CHECK(zero.err.find("weight") != std::string::npos);
  CHECK(run({"enumerate", "--level", "12", "--weight", "2"}).code == 2);
}

TEST_CASE("qexp") {
  const Run text = run({"qexp", "--eta", "1:24", "--terms", "5", "--format", "text"});
  CHECK(text.out == "q - 24*q^2 + 252*q^3 - 1472*q^4 + 4830*q^5\n");
  CHECK(run({"qexp", "--eta", "", "--terms", "3", "--format", "text"}).out == "1\n");
  const Run bad = run({"qexp", "--eta", "1:1", "--terms", "3"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("FractionalLeadingPower") != std::string::npos);
  CHECK(run({"qexp", "--eta", "1:x"}).code == 2);
  const Run csv = run({"qexp", "--eta", "1:24", "--terms", "3", "--format", "csv"});
  CHECK(csv.out == "n,coefficient\n1,1\n2,-24\n3,252\n");
}

TEST_CASE("qexp emits big coefficients as strings") {
  const auto j = nlohmann::json::parse(run({"qexp", "--eta", "1:-240", "--terms", "40"}).out);
  const auto& c = j["result"]["coeffs"];
  REQUIRE(c.size() == 40);
  CHECK(c[0] == 1);
  CHECK(c[39].is_string());
}

TEST_CASE("dims") {
  const auto j = nlohmann::json::parse(run({"dims", "--level", "11", "--weight", "4", "--character", "trivial"}).out);
  CHECK(j["result"]["dim_cusp"] == 2);
  CHECK(j["result"]["dim_eisenstein"] == 2);
  const Run bad = run({"dims", "--level", "7", "--weight", "3", "--character", "quadratic"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("TableInconsistency") != std::string::npos);
  CHECK(run({"dims", "--level", "11", "--weight", "4", "--character", "other"}).code == 2);
}

TEST_CASE("verify exits nonzero on dependence") {
  CHECK(run({"verify", "--level", "11", "--weight", "2"}).code == 0);
  const Run dep = run({"verify", "--level", "15", "--weight", "2"});
  CHECK(dep.code == 1);
  CHECK(nlohmann::json::parse(dep.out)["result"]["independent"] == false);
}

TEST_CASE("ratio and lift") {
  const auto j = nlohmann::json::parse(run({"ratio", "--prime", "11", "--kmax", "240"}).out);
  const auto& last = j["result"]["rows"].back();
  CHECK(last["k"] == 240);
  CHECK(last["ratio"] == "47/238");
  const Run text = run({"ratio", "--prime", "11", "--kmin", "240", "--kmax", "240", "--format", "text"});
  CHECK(text.out.find("0.197479") != std::string::npos);

  const auto lift = nlohmann::json::parse(run({"lift", "--prime", "11", "--weight", "6", "--v1", "1"}).out);
  CHECK(lift["result"]["power"] == 5);
  CHECK(lift["result"]["lifted"] == "1:54,11:6");
  CHECK(run({"lift", "--prime", "11", "--weight", "6", "--v1", "3"}).code == 2);
}

TEST_CASE("sweep CSV schema and thread cap") {
  const Run r = run({"sweep", "--pmax", "11", "--kmax", "4", "--format", "csv", "--threads", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("p,k,count_cusp,count_noncusp,dim_S,ratio,rank,independent\n", 0) == 0);
  ::setenv("ETAQ_THREADS", "1", 1);
  const Run capped = run({"sweep", "--pmax", "11", "--kmax", "4", "--format", "csv", "--threads", "4"});
  ::unsetenv("ETAQ_THREADS");
  CHECK(capped.out == r.out);
}

TEST_CASE("config file supplies defaults") {
  const std::string path = std::string(ETAQ_BINARY_DIR) + "/etaq_test.conf";
  {
    std::ofstream conf(path);
    conf << "format=csv\n[sweep]\npmax=11\nkmax=4\n";
  }
  const Run r = run({"--config", path, "sweep"});
  CHECK(r.code == 0);
  CHECK(r.out == run({"sweep", "--pmax", "11", "--kmax", "4", "--format", "csv"}).out);
  const Run override = run({"--config", path, "sweep", "--kmax", "2"});
  CHECK(override.out == run({"sweep", "--pmax", "11", "--kmax", "2", "--format", "csv"}).out);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"count", "--prime", "11"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
