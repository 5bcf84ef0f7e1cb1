#pragma once

#include "gkm/connection.hpp"
#include "gkm/hypergraph.hpp"
#include "gkm/polytope.hpp"

namespace gkm {

// Characteristic matrix: one column per facet, dim rows.
using CharMatrix = std::vector<std::vector<long long>>;

struct CharPair {
  SimplePolytope polytope;
  CharMatrix lambda;
};

// Every vertex minor must have determinant +-1 (MinorNotUnimodular).
void validate_charpair(const CharPair& cp);

// GKM graph of the toric variety of a characteristic pair: vertices are the
// polytope vertices, the edge dropping facet f carries the dual-basis row
// of the inverse vertex minor attached to f.
WeightHypergraph gkm_from_charpair(const CharPair& cp);

// Forced transport along every directed edge (all edges of such graphs are
// definite).
Connection unique_connection(const WeightHypergraph& g);

// Smallest invariant subgraph through `base` whose edge set at base contains
// `seed_edges`, grown by transports along covered internal edges and by
// chords between captured vertices. `r` bounds the expected valence; growth
// past it raises Internal.
Subgraph span_face(const WeightHypergraph& g, const Connection& c, int base,
                   const std::vector<int>& seed_edges, int r);

// Characteristic pairs of the four toric members of the families, with
// facet numbering matching polytope_cube (facet 2q is x_q = 0, facet
// 2q + 1 is x_q = 1; a truncation facet comes last).
CharPair charpair_br21();
CharPair charpair_br22();
CharPair charpair_r22();
CharPair charpair_r13();

// True when every closed walk in the face of length <= max_cycle_len, based
// anywhere, keeps each external star element fixed (and externals stay
// external along the way). On failure *diagnostic describes the first
// violation found.
bool check_external_monodromy(const WeightHypergraph& g, const Connection& c,
                              const Subgraph& face, int max_cycle_len,
                              std::string* diagnostic = nullptr);

}  // namespace gkm
