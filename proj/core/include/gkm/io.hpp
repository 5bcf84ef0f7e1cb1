#pragma once

#include <json.hpp>
#include <string>

#include "gkm/charpair.hpp"
#include "gkm/hypergraph.hpp"
#include "gkm/obstruction.hpp"

namespace gkm {

// {rank, valence, vertices, edges (one per unordered pair, weight oriented
// from -> to), hyperedges (one per class)}
nlohmann::json hypergraph_to_json(const WeightHypergraph& g);
WeightHypergraph hypergraph_from_json(const nlohmann::json& j);

// {facets, dim, vertices: [[facet ids]], lambda: dim x facets}
CharPair charpair_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const ObstructionWitness& w);
std::string witness_text(const ObstructionWitness& w);

// Graphviz output; hyperedges appear as point nodes joined to their members.
std::string hypergraph_to_dot(const WeightHypergraph& g);

}  // namespace gkm
