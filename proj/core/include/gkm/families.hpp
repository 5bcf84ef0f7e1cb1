#pragma once

#include <string>
#include <vector>

#include "gkm/connection.hpp"
#include "gkm/hypergraph.hpp"

namespace gkm {

// Flag-index bookkeeping for bit tuples u in F_2^n, bits numbered 1..n
// (bit q of u is (u >> (q-1)) & 1).
int a_idx(unsigned u, int k);            // largest set index <= k, else 0
int b_idx(unsigned u, int k);            // partner: {a_k, b_k} = {a_{k-1}, k}
std::string bits_label(unsigned u, int n);

// Bott tower stage graph: vertices F_2^n, edges u -- u+1_q with weight
// e_{b_q(u)} - e_{a_q(u)} at u; rank n.
WeightHypergraph bf_graph(int n);

// Fiberwise projective compactification over the tower: vertices x_{u,k}
// with a_i(u) != k+(i-j); rank i. Defined for i >= j >= 0, i >= 1
// (for i < j the rank-i action acquires fixed curves).
WeightHypergraph br_graph(int i, int j);

// Rational-curve family: vertices x_{u,v} with a_i(u) != a_j(v)+(i-j);
// rank max(i,j); (i,j) and (j,i) give the same space.
WeightHypergraph r_graph(int i, int j);

// Hypersurface of bidegree (1,1) in P^i x P^j under the rank-j action;
// requires 1 <= i <= j.
WeightHypergraph hij_graph(int i, int j);

// Tangent weight multiset at x_{u,k} straight from the closed formula
// (signed values, before any sign canonicalization).
std::vector<Weight> br_vertex_weights(int i, int j, unsigned u, int k);

// Connection on the fiber edges E_{u,k}^{u,r} over tuples with
// a_i(u) < i-j; empty when i <= j.
Connection br_partial_connection(const WeightHypergraph& g, int i, int j);

// Connection on the four distinguished edges (and their reverses) used by
// the rational-curve obstruction; requires i > j >= 2.
Connection r_partial_connection(const WeightHypergraph& g, int i, int j);

struct ReplayStep {
  std::string along;    // edge transported along
  std::string before;   // star element before
  std::string after;    // star element after
};

struct ReplayReport {
  std::vector<ReplayStep> steps;
  std::string conclusion;
  bool contradiction = false;  // a toric graph could not do this
};

// Replays the triangle monodromy on the fiber edges of br_graph(i,j),
// i > j >= 2, checking every forced transport against the hand-derived
// connection (StepMismatch on disagreement). The monodromy moves an
// external edge, certifying non-toricness.
ReplayReport reproduce_thm12(int i, int j);

// Replays the face-closure argument on r_graph(i,j), i > j >= 2: the
// 3-face seeded at x_{0,1_j} is forced to contain the excluded vertex
// x_{0,1_{j-1}+1_j}.
ReplayReport reproduce_thm13(int i, int j);

}  // namespace gkm
