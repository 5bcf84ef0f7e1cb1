#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gkm/weight.hpp"

namespace gkm {

// One record of the star structure.
//
// dim == 1: a directed edge; vertices = {origin, end}, weight oriented
//           origin -> end, `reverse` points at the opposite record.
// dim >= 2: an undirected hyperedge stored once; vertices sorted by id,
//           weight sign-canonical (well defined only up to sign).
struct Hyperedge {
  std::vector<int> vertices;
  int dim = 1;
  Weight weight;
  int reverse = -1;
};

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

class WeightHypergraph {
 public:
  int rank = 0;
  int valence = 0;
  std::vector<std::string> labels;              // sorted, index = vertex id
  std::map<std::string, int> index;             // label -> id
  std::vector<Hyperedge> records;
  std::vector<std::vector<int>> star;           // vertex id -> record ids

  int vertex(const std::string& label) const;
  const std::string& label(int v) const { return labels[v]; }
  size_t num_vertices() const { return labels.size(); }

  bool is_edge(int rec) const { return records[rec].dim == 1; }
  int origin(int rec) const { return records[rec].vertices[0]; }
  int end(int rec) const { return records[rec].vertices[1]; }
  int reverse(int rec) const { return records[rec].reverse; }

  // Signed weight of a star element seen from vertex v; for hyperedges the
  // canonical representative (meaningful up to sign only).
  const Weight& weight_from(int rec, int v) const;

  // Directed edge v -> w, or -1.
  int edge_between(int v, int w) const;

  // Tangent weight multiset at v: edges contribute their signed weight,
  // a hyperedge contributes dim copies of its canonical weight.
  std::vector<Weight> weights_at(int v) const;

  std::string edge_name(int rec) const;
};

// Incremental construction; finalization fixes deterministic order
// (vertices sorted by label, stars sorted by dim then far labels).
class HypergraphBuilder {
 public:
  HypergraphBuilder(int rank, int valence) : rank_(rank), valence_(valence) {}
  void add_vertex(const std::string& label);
  // weight oriented u -> v
  void add_edge(const std::string& u, const std::string& v, const Weight& w);
  void add_hyperedge(const std::vector<std::string>& vertices, int dim,
                     const Weight& w);
  WeightHypergraph build() const;

 private:
  int rank_, valence_;
  std::vector<std::string> vertices_;
  struct E { std::string u, v; Weight w; };
  struct H { std::vector<std::string> vs; int dim; Weight w; };
  std::vector<E> edges_;
  std::vector<H> hypers_;
};

// Checks the axial-function axioms plus structural invariants
// (clutter, no hyperloops, no multiple hyperedges, constant valence,
// sign conventions, rank condition at every vertex).
ValidationReport validate_axial(const WeightHypergraph& g);

}  // namespace gkm
