#pragma once

#include <map>
#include <optional>
#include <string>

#include "gkm/hypergraph.hpp"
#include "gkm/restrict.hpp"

namespace gkm {

// Vertex bijection matching directed edge weights exactly and hyperedges
// by member set, dimension and canonical weight. Labels of g map to labels
// of h; the lexicographically least bijection is returned.
std::optional<std::map<std::string, std::string>> exact_isomorphism(
    const WeightHypergraph& g, const WeightHypergraph& h);

struct RestrictionMatch {
  CocharacterMap map;
  std::map<std::string, std::string> vertex_map;
};

// Searches for a surjective lattice map f with restrict_action(g, f)
// isomorphic to h on the nose. Candidates for f are pinned down by sending
// the star basis at one vertex of g to signed tangent weights of h.
std::optional<RestrictionMatch> restriction_isomorphism(
    const WeightHypergraph& g, const WeightHypergraph& h);

}  // namespace gkm
