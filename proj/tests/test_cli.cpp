#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "gkm/charpair.hpp"
#include "gkm/io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = gkm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_charpair(const gkm::CharPair& cp, const std::string& name) {
  nlohmann::json j;
  j["dim"] = cp.polytope.dim;
  j["facets"] = cp.polytope.nfacets;
  j["lambda"] = cp.lambda;
  auto verts = nlohmann::json::array();
  for (const auto& v : cp.polytope.vertices) verts.push_back(v);
  j["vertices"] = verts;
  auto path = std::filesystem::temp_directory_path() /
              (std::string("cli_test_") + name + ".json");
  std::ofstream f(path);
  f << j;
  return path.string();
}

}  // namespace

TEST_CASE("family export in all formats") {
  auto text = run({"family", "bf", "1"});
  CHECK(text.code == 0);
  CHECK(text.out.find("0") != std::string::npos);

  auto js = run({"family", "bf", "1", "--format", "json"});
  CHECK(js.code == 0);
  auto j = nlohmann::json::parse(js.out);
  CHECK(j["vertices"].size() == 2);
  CHECK(j["rank"] == 1);

  auto dot = run({"family", "br", "3", "2", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("graph") != std::string::npos);
}

TEST_CASE("deterministic output") {
  auto a = run({"family", "br", "3", "2", "--format", "json"});
  auto b = run({"family", "br", "3", "2", "--format", "json"});
  CHECK(a.out == b.out);
}

TEST_CASE("obstruction verdicts and exit codes") {
  auto hit = run({"obstruct", "br", "3", "2"});
  CHECK(hit.code == 0);
  CHECK(hit.out.find("NOT TORIC (obstruction found)") != std::string::npos);

  auto miss = run({"obstruct", "r", "2", "2"});
  CHECK(miss.code == 1);
  CHECK(miss.out.find("no obstruction found") != std::string::npos);

  // json twin carries the same verdict
  auto jhit = run({"obstruct", "br", "3", "2", "--format", "json"});
  CHECK(jhit.code == 0);
  auto j = nlohmann::json::parse(jhit.out);
  CHECK(j["verdict"] == "NOT TORIC (obstruction found)");

  // the rank-2 action on the (2,3) member has fixed curves: parameter error
  auto swapped = run({"obstruct", "br", "2", "3"});
  CHECK(swapped.code == 2);
}

TEST_CASE("betti output") {
  auto br = run({"betti", "br", "3", "2"});
  CHECK(br.code == 0);
  CHECK(br.out == "1 4 7 4 1\n");
  auto r = run({"betti", "r", "2", "2"});
  CHECK(r.out == "1 4 4 1\n");
}

TEST_CASE("cohomology presentation") {
  auto res = run({"cohomology", "r", "2", "2", "--relations"});
  CHECK(res.code == 0);
  CHECK(res.out.find("1 4 4 1") != std::string::npos);
  CHECK(res.out.find("relations") != std::string::npos);
}

TEST_CASE("toric check") {
  auto ok = run({"toric", "check", write_charpair(gkm::charpair_br21(),
                                                  "br21")});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("valid") != std::string::npos);

  gkm::CharPair bad = gkm::charpair_br21();
  bad.lambda[0][0] = 2;
  auto fail = run({"toric", "check", write_charpair(bad, "bad")});
  CHECK(fail.code == 2);

  auto missing = run({"toric", "check", "does_not_exist.json"});
  CHECK(missing.code == 2);
}

TEST_CASE("reproduction harness") {
  auto r12 = run({"reproduce", "thm1.2", "3", "2"});
  CHECK(r12.code == 0);
  CHECK(r12.out.find("NOT TORIC") != std::string::npos);
  auto r13 = run({"reproduce", "thm1.3", "3", "2"});
  CHECK(r13.code == 0);
  auto bad = run({"reproduce", "thm9.9", "3", "2"});
  CHECK(bad.code == 2);
}

TEST_CASE("bad parameters exit with 2") {
  CHECK(run({"family", "bf", "-3"}).code == 2);
  CHECK(run({"family", "zz", "1"}).code == 2);
  CHECK(run({"betti", "br"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("help goes to stdout") {
  auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("family") != std::string::npos);
}

TEST_CASE("thread cap validation") {
  setenv("GKM_THREADS", "4", 1);
  CHECK(run({"betti", "br", "3", "2"}).code == 0);
  setenv("GKM_THREADS", "zero", 1);
  CHECK(run({"betti", "br", "3", "2"}).code == 2);
  unsetenv("GKM_THREADS");
}
