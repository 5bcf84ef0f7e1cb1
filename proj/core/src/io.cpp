#include "gkm/io.hpp"

#include <sstream>

#include "gkm/errors.hpp"

namespace gkm {

using nlohmann::json;

json hypergraph_to_json(const WeightHypergraph& g) {
  json j;
  j["rank"] = g.rank;
  j["valence"] = g.valence;
  j["vertices"] = g.labels;
  json edges = json::array();
  json hypers = json::array();
  for (size_t r = 0; r < g.records.size(); ++r) {
    const Hyperedge& e = g.records[r];
    if (e.dim == 1) {
      if (e.vertices[0] > e.vertices[1]) continue;  // reverse carries the rest
      edges.push_back({{"from", g.label(e.vertices[0])},
                       {"to", g.label(e.vertices[1])},
                       {"weight", e.weight}});
    } else {
      std::vector<std::string> members;
      for (int v : e.vertices) members.push_back(g.label(v));
      hypers.push_back(
          {{"vertices", members}, {"dim", e.dim}, {"weight", e.weight}});
    }
  }
  j["edges"] = edges;
  j["hyperedges"] = hypers;
  return j;
}

WeightHypergraph hypergraph_from_json(const json& j) {
  if (!j.contains("rank") || !j.contains("valence") || !j.contains("vertices"))
    fail("InvalidParams", "graph json needs rank, valence and vertices");
  HypergraphBuilder b(j["rank"].get<int>(), j["valence"].get<int>());
  for (const auto& v : j["vertices"]) b.add_vertex(v.get<std::string>());
  if (j.contains("edges"))
    for (const auto& e : j["edges"])
      b.add_edge(e["from"].get<std::string>(), e["to"].get<std::string>(),
                 e["weight"].get<Weight>());
  if (j.contains("hyperedges"))
    for (const auto& h : j["hyperedges"])
      b.add_hyperedge(h["vertices"].get<std::vector<std::string>>(),
                      h["dim"].get<int>(), h["weight"].get<Weight>());
  return b.build();
}

CharPair charpair_from_json(const json& j) {
  if (!j.contains("facets") || !j.contains("dim") || !j.contains("vertices") ||
      !j.contains("lambda"))
    fail("InvalidParams", "characteristic pair json needs facets, dim, vertices, lambda");
  CharPair cp;
  cp.polytope.nfacets = j["facets"].get<int>();
  cp.polytope.dim = j["dim"].get<int>();
  for (const auto& v : j["vertices"]) {
    std::set<int> fs;
    for (const auto& f : v) fs.insert(f.get<int>());
    cp.polytope.vertices.push_back(std::move(fs));
  }
  cp.lambda = j["lambda"].get<CharMatrix>();
  return cp;
}

json witness_to_json(const ObstructionWitness& w) {
  json j;
  j["kind"] = w.kind;
  j["base_vertex"] = w.base_vertex;
  if (w.kind == "cycle") {
    j["path"] = w.path;
    j["external_edge"] = w.external_edge;
    j["external_image"] = w.external_image;
  } else {
    j["seed_edges"] = w.seed_edges;
    j["excluded_vertex"] = w.excluded_vertex;
    j["reaching_edge"] = w.reaching_edge;
  }
  json steps = json::array();
  for (const TransportStep& s : w.transcript)
    steps.push_back({{"along", s.along}, {"before", s.before}, {"after", s.after}});
  j["transcript"] = steps;
  return j;
}

std::string witness_text(const ObstructionWitness& w) {
  std::ostringstream os;
  if (w.kind == "cycle") {
    os << "invariant cycle at " << w.base_vertex << " moves an external edge\n";
    os << "  cycle:";
    for (const std::string& e : w.path) os << " " << e;
    os << "\n  external " << w.external_edge << " returns as "
       << w.external_image << "\n";
  } else {
    os << "face spanned at " << w.base_vertex
       << " captures an excluded vertex\n";
    os << "  seed edges:";
    for (const std::string& e : w.seed_edges) os << " " << e;
    os << "\n  excluded vertex " << w.excluded_vertex << " reached via "
       << w.reaching_edge << "\n";
  }
  os << "  transport steps:\n";
  for (const TransportStep& s : w.transcript)
    os << "    along " << s.along << ": " << s.before << " -> " << s.after
       << "\n";
  return os.str();
}

std::string hypergraph_to_dot(const WeightHypergraph& g) {
  std::ostringstream os;
  os << "graph {\n";
  for (const std::string& l : g.labels) os << "  \"" << l << "\";\n";
  int haux = 0;
  for (size_t r = 0; r < g.records.size(); ++r) {
    const Hyperedge& e = g.records[r];
    if (e.dim == 1) {
      if (e.vertices[0] > e.vertices[1]) continue;
      os << "  \"" << g.label(e.vertices[0]) << "\" -- \""
         << g.label(e.vertices[1]) << "\" [label=\"" << weight_str(e.weight)
         << "\"];\n";
    } else {
      std::string hub = "h" + std::to_string(haux++);
      os << "  " << hub << " [shape=point, label=\"\"];\n";
      for (int v : e.vertices)
        os << "  " << hub << " -- \"" << g.label(v) << "\" [style=dashed];\n";
      os << "  " << hub << " [xlabel=\"dim " << e.dim << ", "
         << weight_str(e.weight) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace gkm
