#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gkm/hypergraph.hpp"

namespace gkm {

// Partial connection: for some directed edges e, a bijection between the
// star at i(e) and the star at t(e), stored as record id -> record id.
struct Connection {
  std::map<int, std::map<int, int>> maps;

  bool covers(int edge_rec) const { return maps.count(edge_rec) > 0; }
  const std::map<int, int>& at(int edge_rec) const { return maps.at(edge_rec); }
};

// Directed edges, composable head to tail.
using EdgePath = std::vector<int>;

// An edge is definite when the affine lines alpha(e') + R*alpha(e), over the
// star elements e' != e at i(e), are pairwise distinct (hyperedge weights are
// taken up to sign, so both offset lines count).
bool is_definite_at(const WeightHypergraph& g, int edge_rec);

// The unique star bijection along a definite edge compatible with
// alpha(transport(e')) = +-alpha(e') + c*alpha(e), c integral.
// Throws NotAnEdge / NotDefinite / NoAdmissibleMatching.
std::map<int, int> forced_transport(const WeightHypergraph& g, int edge_rec);

// Checks a partial connection: domain edges only, bijectivity between the
// right stars, e -> reverse(e), inverse pairing for reversed edges, and
// integrality of the difference coefficients.
ValidationReport validate_connection(const WeightHypergraph& g,
                                     const Connection& c);

// Transports a star element along a path; every path edge must be covered.
int parallel_transport(const WeightHypergraph& g, const Connection& c,
                       const EdgePath& path, int rec);

struct Subgraph {
  std::set<int> vertices;
  std::set<int> edges;  // directed edge records, closed under reversal
};

// Full subgraph spanned by a vertex set: all records with every vertex inside.
Subgraph induced_subgraph(const WeightHypergraph& g, const std::set<int>& vs);

// Invariance of a subgraph under a (partial) connection: along every covered
// subgraph edge, star elements lying in the subgraph map into the subgraph.
bool is_invariant_subgraph(const WeightHypergraph& g, const Connection& c,
                           const Subgraph& s);

}  // namespace gkm
