#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "gkm/errors.hpp"
#include "gkm/families.hpp"
#include "gkm/hodge.hpp"
#include "gkm/iso.hpp"
#include "gkm/weight.hpp"

using namespace gkm;

namespace {

// compare a paper weight list against weights_at: singleton direction
// classes must match exactly, classes of two or more only up to sign
// (a dim-2 hyperedge carries its weight up to sign)
bool weights_match(const std::vector<Weight>& got,
                   const std::vector<Weight>& want) {
  if (got.size() != want.size()) return false;
  auto classify = [](const std::vector<Weight>& ws) {
    std::map<std::string, std::vector<Weight>> by_line;
    for (const Weight& w : ws)
      by_line[weight_str(sign_canonical(w))].push_back(w);
    return by_line;
  };
  auto a = classify(got), b = classify(want);
  if (a.size() != b.size()) return false;
  for (auto& [line, ga] : a) {
    auto it = b.find(line);
    if (it == b.end() || it->second.size() != ga.size()) return false;
    if (ga.size() == 1 && ga[0] != it->second[0]) return false;
  }
  return true;
}

unsigned bits(const std::string& s) {
  unsigned u = 0;
  for (size_t q = 0; q < s.size(); ++q)
    if (s[q] == '1') u |= 1u << q;
  return u;
}

}  // namespace

TEST_CASE("bf_graph basics") {
  auto g = bf_graph(3);
  CHECK(g.num_vertices() == 8);
  CHECK(g.rank == 3);
  CHECK(g.valence == 3);
  CHECK(validate_axial(g).ok());
  for (const auto& rec : g.records) CHECK(rec.dim == 1);
  // tangent weights at the top vertex 111: e_q - e_{q-1}
  auto ws = g.weights_at(g.vertex("111"));
  std::vector<Weight> want = {{-1, 0, 0}, {1, -1, 0}, {0, 1, -1}};
  std::sort(ws.begin(), ws.end());
  std::sort(want.begin(), want.end());
  CHECK(ws == want);
}

TEST_CASE("family graphs satisfy the axial axioms") {
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= i && i + j <= 8; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(validate_axial(br_graph(i, j)).ok());
      CHECK(validate_axial(r_graph(i, j)).ok());
    }
}

TEST_CASE("vertex counts agree with the Euler characteristics") {
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= i && i + j <= 8; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(Int((long long)br_graph(i, j).num_vertices()) ==
            poly_eval_one(hd_br(i, j)));
      CHECK(Int((long long)r_graph(i, j).num_vertices()) ==
            poly_eval_one(hd_r(i, j)));
    }
}

TEST_CASE("parameters outside the action's domain are rejected") {
  CHECK_THROWS_WITH_AS(br_graph(2, 3),
                       doctest::Contains("NonIsolatedFixedPoints"),
                       const Error&);
  CHECK_THROWS_AS(br_graph(0, 0), const Error&);
  CHECK_THROWS_AS(r_graph(0, 0), const Error&);
}

TEST_CASE("closed-formula weights match the graph stars") {
  auto g = br_graph(3, 2);
  for (unsigned u = 0; u < 8; ++u)
    for (int k = 0; k <= 2; ++k) {
      if (a_idx(u, 3) == k + 1) continue;
      auto want = br_vertex_weights(3, 2, u, k);
      auto got = g.weights_at(g.vertex(bits_label(u, 3) + "," +
                                       std::to_string(k)));
      CAPTURE(u);
      CAPTURE(k);
      CHECK(weights_match(got, want));
    }
}

TEST_CASE("weight regression at the four recorded fixed points") {
  auto g = br_graph(3, 2);
  auto at = [&](const std::string& l) { return g.weights_at(g.vertex(l)); };
  CHECK(weights_match(at("111,0"),
                      {{1, -1, 0}, {-1, 0, 0}, {1, -1, 0}, {0, 1, -1}}));
  CHECK(weights_match(at("111,1"),
                      {{-1, 0, 0}, {1, -1, 0}, {0, 1, -1}, {-1, 1, 0}}));
  CHECK(weights_match(at("101,0"),
                      {{1, -1, 0}, {-1, 0, 0}, {-1, 1, 0}, {1, 0, -1}}));
  CHECK(weights_match(at("101,1"),
                      {{-1, 0, 0}, {-1, 1, 0}, {1, 0, -1}, {-1, 1, 0}}));
}

TEST_CASE("dependent weight pairs become 2-dimensional strata") {
  // regression: the smallest square case carries exactly one such stratum
  auto g = br_graph(2, 2);
  std::vector<const Hyperedge*> hs;
  for (const auto& rec : g.records)
    if (rec.dim == 2) hs.push_back(&rec);
  REQUIRE(hs.size() == 1);
  std::vector<std::string> members;
  for (int v : hs[0]->vertices) members.push_back(g.label(v));
  std::sort(members.begin(), members.end());
  CHECK(members ==
        std::vector<std::string>{"01,0", "01,1", "11,0", "11,1"});
  CHECK(sign_canonical(hs[0]->weight) == Weight{1, 0});
}

TEST_CASE("the two parameter orders of the rational family agree") {
  auto a = r_graph(2, 3);
  auto b = r_graph(3, 2);
  CHECK(a.rank == b.rank);
  CHECK(a.num_vertices() == b.num_vertices());
  CHECK(exact_isomorphism(a, b).has_value());
}

TEST_CASE("degenerate rational parameters reduce to the tower") {
  CHECK(exact_isomorphism(r_graph(3, 0), bf_graph(2)).has_value());
  CHECK(exact_isomorphism(r_graph(0, 3), bf_graph(2)).has_value());
}

TEST_CASE("bilinear hypersurface graph") {
  auto g = hij_graph(1, 2);
  CHECK(g.num_vertices() == 4);  // pairs (a,b), a != b
  CHECK(g.valence == 2);
  CHECK(validate_axial(g).ok());
}

TEST_CASE("triangle monodromy replay, base case") {
  auto r = reproduce_thm12(3, 2);
  CHECK(r.contradiction);
  REQUIRE(r.steps.size() >= 3);
  // the chain moves the external edge E[000,0->010,0] around the triangle
  // and returns it as E[000,0->001,0]
  CHECK(r.steps.front().before == "E[000,0->010,0]");
  CHECK(r.steps[2].after == "E[000,0->001,0]");
}

TEST_CASE("face closure replay, base case") {
  auto r = reproduce_thm13(3, 2);
  CHECK(r.contradiction);
  CHECK(r.conclusion.find("000,11") != std::string::npos);
}

TEST_CASE("replays succeed across the theorem range") {
  for (auto [i, j] : std::vector<std::pair<int, int>>{
           {4, 2}, {4, 3}, {5, 2}, {5, 3}, {5, 4}}) {
    CAPTURE(i);
    CAPTURE(j);
    CHECK(reproduce_thm12(i, j).contradiction);
    CHECK(reproduce_thm13(i, j).contradiction);
  }
}

TEST_CASE("flag index bookkeeping") {
  // {a_k, b_k} = {a_{k-1}, k} at every k
  for (unsigned u = 0; u < 16; ++u)
    for (int k = 1; k <= 4; ++k) {
      std::pair<int, int> lhs = std::minmax(a_idx(u, k), b_idx(u, k));
      std::pair<int, int> rhs = std::minmax(a_idx(u, k - 1), k);
      CHECK(lhs == rhs);
    }
  CHECK(bits("101") == 5u);
  CHECK(bits_label(5, 3) == "101");
}
