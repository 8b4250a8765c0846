#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fcadepth/context_io.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using fcadepth::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "fcadepth");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "fcadepth_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::vector<std::string> verdicts(const std::string& out) {
  const auto j = nlohmann::json::parse(out);
  std::vector<std::string> v;
  for (const auto& r : j["reports"]) v.push_back(r["verdict"]);
  return v;
}

const std::vector<std::string> kTitanic{"--data", "data/titanic.csv", "--spec", "data/titanic_spec.json"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

TEST_CASE("scale reports sizes on stderr and the context on stdout") {
  const auto r = call(with({"scale"}, kTitanic));
  CHECK(r.code == 0);
  CHECK(r.err.find("attributes: 15") != std::string::npos);
  CHECK(r.err.find("extents: 20") != std::string::npos);
  CHECK(fcadepth::read_cxt_string(r.out).object_count() == 5);

  CHECK(call({"scale", "--data", "data/hierarchical.csv", "--spec", "data/hierarchical_spec.json"}).err.find(
            "attributes: 6") != std::string::npos);
  CHECK(call({"scale", "--posets", "data/posets.json"}).err.find("attributes: 4") != std::string::npos);
  CHECK(call({"scale", "--points", "data/points.json"}).code == 0);
}

TEST_CASE("scale output re-ingests to the same context") {
  const auto base = scratch("titanic");
  REQUIRE(call(with({"scale", "--out", base.string()}, kTitanic)).code == 0);
  const auto from_cxt = fcadepth::load_context(base.string() + ".cxt");
  const auto from_json = fcadepth::load_context(base.string() + ".json");
  CHECK(from_cxt == from_json);
  const auto again = call({"scale", "--context", base.string() + ".cxt"});
  std::ifstream in(base.string() + ".cxt", std::ios::binary);
  std::stringstream original;
  original << in.rdbuf();
  CHECK(again.out == original.str());
}

TEST_CASE("depth table") {
  const auto r = call(with({"depth"}, kTitanic));
  CHECK(r.code == 0);
  CHECK(r.out.find("g1\t2/5\t1\t1\n") != std::string::npos);
  CHECK(r.out.find("g3\t1/5\t4\t2\n") != std::string::npos);

  const auto j = nlohmann::json::parse(call(with({"depth", "--format", "json"}, kTitanic)).out);
  CHECK(j["objects"][4]["depth"] == "2/5");

  const auto sample = scratch("sample.txt");
  write(sample, "g2 g3\n");
  const auto e = call({"depth", "--context", "data/table5_right.cxt", "--sample", sample.string()});
  CHECK(e.out.find("g2\t1/2\t") != std::string::npos);
  CHECK(e.out.find("g3\t1/1\t") != std::string::npos);

  const auto single = scratch("single.cxt");
  fcadepth::save_context(fcadepth::FormalContext::from_cross_strings({"X"}), single);
  CHECK(call({"depth", "--context", single.string()}).out.find("g1\t1/1\t") != std::string::npos);

  const auto hier = call({"depth", "--data", "data/hierarchical.csv", "--spec", "data/hierarchical_spec.json",
                          "--depth", "hier-free"});
  CHECK(hier.code == 0);
  CHECK(hier.out.find("\t1/2\t") != std::string::npos);
}

TEST_CASE("explicit weights") {
  const auto w = scratch("weights.json");
  write(w, R"({"g1": "1/2", "g2": 0, "g3": "1/2"})");
  const auto r = call({"depth", "--context", "data/table5_right.cxt", "--weights", w.string()});
  CHECK(r.code == 0);
  write(w, R"({"g1": "1/2"})");
  CHECK(call({"depth", "--context", "data/table5_right.cxt", "--weights", w.string()}).code == 2);
}

TEST_CASE("check exit codes follow the verdicts") {
  const auto ok = call(with({"check"}, kTitanic));
  CHECK(ok.code == 0);
  for (const auto& v : verdicts(ok.out)) CHECK((v == "holds" || v == "premise-not-met"));

  CHECK(call({"check", "--context", "data/table4_left.cxt", "--check", "C_notP8"}).code == 0);
  CHECK(call({"check", "--context", "data/table4_left.cxt", "--check", "P8"}).code == 1);

  const auto sample = scratch("sample3.txt");
  write(sample, R"(["g1", "g2", "g3"])");
  const auto p10 = call({"check", "--context", "data/table5_right.cxt", "--check", "P10", "--outlier", "g1",
                         "--sample", sample.string()});
  CHECK(p10.code == 1);
  CHECK(verdicts(p10.out) == std::vector<std::string>{"fails"});
}

TEST_CASE("check ranges collapse the order basics into one report") {
  const auto r = call(with({"check", "--check", "P3-P5,P2"}, kTitanic));
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["reports"].size() == 2);
  CHECK(j["reports"][0]["property"] == "P3-P5");
  CHECK_FALSE(j["reports"][0].contains("runtime_ms"));
  const auto timed = nlohmann::json::parse(call(with({"check", "--check", "P2", "--timing"}, kTitanic)).out);
  CHECK(timed["reports"][0].contains("runtime_ms"));
}

TEST_CASE("consistency output is reproducible") {
  const auto args = with({"check", "--check", "P11", "--seed", "9", "--trials", "5", "--sizes", "10,50"}, kTitanic);
  const auto a = call(args), b = call(args);
  CHECK(a.out == b.out);
  CHECK(call(with({"check", "--check", "P11"}, kTitanic)).code == 2);
}

TEST_CASE("symmetry and weakly free checks") {
  const auto r = call({"check", "--data", "data/hierarchical.csv", "--spec", "data/hierarchical_spec.json", "--check",
                       "SYM,WFREE", "--involution", "a1a2:a1b2,b1a2:b1b2", "--center", "a1a2"});
  CHECK(r.code == 0);
  CHECK(verdicts(r.out) == std::vector<std::string>{"premise-not-met", "holds"});
}

TEST_CASE("input errors exit with 2") {
  CHECK(call({"depth", "--context", "missing.cxt"}).code == 2);
  CHECK(call({"depth"}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call(with({"check", "--check", "P99"}, kTitanic)).code == 2);
  CHECK(call(with({"depth", "--measure", "fancy"}, kTitanic)).code == 2);
  CHECK(call(with({"depth", "--depth", "nope"}, kTitanic)).code == 2);
  const auto bad = scratch("bad.cxt");
  write(bad, "B\n\n2\n1\n\ng1\ng2\nm\nX\n");
  const auto r = call({"depth", "--context", bad.string()});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(call({"--help"}).code == 0);
}
