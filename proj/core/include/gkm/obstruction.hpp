#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkm/connection.hpp"
#include "gkm/hypergraph.hpp"

namespace gkm {

struct TransportStep {
  std::string along;
  std::string before;
  std::string after;
};

// Certificate that no toric structure is compatible with the graph.
struct ObstructionWitness {
  std::string kind;                     // "cycle" | "face-exclusion"
  std::string base_vertex;
  std::vector<std::string> seed_edges;  // face seed (face-exclusion)
  std::vector<std::string> path;        // cycle edges in order (cycle)
  std::string external_edge;            // moved external edge (cycle)
  std::string external_image;
  std::string excluded_vertex;          // forced forbidden vertex (face-exclusion)
  std::string reaching_edge;
  std::vector<TransportStep> transcript;
};

// An edge is safe for obstruction searches when it is definite and the
// weights at both endpoints are pairwise 2-linearly independent; along such
// edges the forced transport agrees with any geometric connection.
bool safe_edge(const WeightHypergraph& g, int edge_rec);

// Searches invariant cycles of safe edges (length 3..max_len) whose
// monodromy moves an external edge; returns the lexicographically least
// witness (base label, then successive edge targets) or nothing.
std::optional<ObstructionWitness> cycle_obstruction(const WeightHypergraph& g,
                                                    int max_len = 6);

// Grows the would-be r-face spanned by each r-subset of edges at each
// vertex (transport closure plus chords, at most max_growth additions);
// a witness is found when the closure captures a vertex excluded by the
// chord rule. Deterministic, lexicographic enumeration.
std::optional<ObstructionWitness> face_exclusion_obstruction(
    const WeightHypergraph& g, int r = 3, int max_growth = 64);

}  // namespace gkm
