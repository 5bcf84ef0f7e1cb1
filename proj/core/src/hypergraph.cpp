#include "gkm/hypergraph.hpp"

#include <algorithm>
#include <set>

#include "gkm/errors.hpp"

namespace gkm {

int WeightHypergraph::vertex(const std::string& label) const {
  auto it = index.find(label);
  if (it == index.end()) fail("InvalidParams", "unknown vertex label '" + label + "'");
  return it->second;
}

const Weight& WeightHypergraph::weight_from(int rec, int v) const {
  const Hyperedge& h = records[rec];
  if (h.dim == 1 && h.vertices[0] != v) {
    if (h.vertices[1] != v) fail("Internal", "weight_from: vertex not on edge");
    return records[h.reverse].weight;
  }
  return h.weight;
}

int WeightHypergraph::edge_between(int v, int w) const {
  for (int rec : star[v])
    if (records[rec].dim == 1 && records[rec].vertices[1] == w) return rec;
  return -1;
}

std::vector<Weight> WeightHypergraph::weights_at(int v) const {
  std::vector<Weight> out;
  for (int rec : star[v]) {
    const Hyperedge& h = records[rec];
    for (int t = 0; t < h.dim; ++t) out.push_back(h.weight);
  }
  return out;
}

std::string WeightHypergraph::edge_name(int rec) const {
  const Hyperedge& h = records[rec];
  if (h.dim == 1)
    return "E[" + labels[h.vertices[0]] + "->" + labels[h.vertices[1]] + "]";
  std::string s = "H[";
  for (size_t i = 0; i < h.vertices.size(); ++i) {
    if (i) s += ",";
    s += labels[h.vertices[i]];
  }
  return s + "]";
}

void HypergraphBuilder::add_vertex(const std::string& label) {
  vertices_.push_back(label);
}

void HypergraphBuilder::add_edge(const std::string& u, const std::string& v,
                                 const Weight& w) {
  edges_.push_back({u, v, w});
}

void HypergraphBuilder::add_hyperedge(const std::vector<std::string>& vs, int dim,
                                      const Weight& w) {
  hypers_.push_back({vs, dim, sign_canonical(w)});
}

WeightHypergraph HypergraphBuilder::build() const {
  WeightHypergraph g;
  g.rank = rank_;
  g.valence = valence_;
  g.labels = vertices_;
  std::sort(g.labels.begin(), g.labels.end());
  g.labels.erase(std::unique(g.labels.begin(), g.labels.end()), g.labels.end());
  for (size_t i = 0; i < g.labels.size(); ++i) g.index[g.labels[i]] = (int)i;

  struct DirE { int u, v; Weight w; };
  std::map<std::pair<int, int>, Weight> dir_w;
  for (const E& e : edges_) {
    int u = g.vertex(e.u), v = g.vertex(e.v);
    for (auto [a, b, w] : {std::tuple{u, v, e.w}, std::tuple{v, u, neg(e.w)}}) {
      auto it = dir_w.find({a, b});
      if (it == dir_w.end())
        dir_w[{a, b}] = w;
      else if (it->second != w)
        fail("Internal", "conflicting weights for edge " + g.labels[a] + "->" +
                             g.labels[b]);
    }
  }
  std::vector<DirE> dir;
  for (const auto& [key, w] : dir_w) dir.push_back({key.first, key.second, w});
  std::sort(dir.begin(), dir.end(), [&](const DirE& a, const DirE& b) {
    return std::make_pair(g.labels[a.u], g.labels[a.v]) <
           std::make_pair(g.labels[b.u], g.labels[b.v]);
  });

  std::map<std::pair<int, int>, int> rec_of;
  for (const DirE& e : dir) {
    Hyperedge h;
    h.vertices = {e.u, e.v};
    h.dim = 1;
    h.weight = e.w;
    rec_of[{e.u, e.v}] = (int)g.records.size();
    g.records.push_back(h);
  }
  for (auto& [key, rec] : rec_of)
    g.records[rec].reverse = rec_of.at({key.second, key.first});

  std::vector<H> hs = hypers_;
  for (H& h : hs) std::sort(h.vs.begin(), h.vs.end());
  std::sort(hs.begin(), hs.end(),
            [](const H& a, const H& b) { return a.vs < b.vs; });
  for (size_t i = 1; i < hs.size(); ++i)
    if (hs[i].vs == hs[i - 1].vs &&
        (hs[i].dim != hs[i - 1].dim || hs[i].w != hs[i - 1].w))
      fail("Internal", "conflicting duplicate hyperedge");
  hs.erase(std::unique(hs.begin(), hs.end(),
                       [](const H& a, const H& b) { return a.vs == b.vs; }),
           hs.end());
  for (const H& h : hs) {
    Hyperedge r;
    for (const std::string& s : h.vs) r.vertices.push_back(g.vertex(s));
    std::sort(r.vertices.begin(), r.vertices.end());
    r.dim = h.dim;
    r.weight = h.w;
    g.records.push_back(r);
  }

  g.star.assign(g.labels.size(), {});
  for (size_t rec = 0; rec < g.records.size(); ++rec) {
    const Hyperedge& h = g.records[rec];
    if (h.dim == 1) {
      g.star[h.vertices[0]].push_back((int)rec);
    } else {
      for (int v : h.vertices) g.star[v].push_back((int)rec);
    }
  }
  auto star_key = [&](int rec, int at) {
    const Hyperedge& h = g.records[rec];
    std::string key = h.dim == 1 ? "0" : "1";
    for (int v : h.vertices)
      if (v != at) key += "|" + g.labels[v];
    return key;
  };
  for (size_t v = 0; v < g.star.size(); ++v)
    std::sort(g.star[v].begin(), g.star[v].end(), [&](int a, int b) {
      return star_key(a, (int)v) < star_key(b, (int)v);
    });
  return g;
}

ValidationReport validate_axial(const WeightHypergraph& g) {
  ValidationReport rep;
  auto issue = [&](const std::string& s) { rep.issues.push_back(s); };

  for (size_t rec = 0; rec < g.records.size(); ++rec) {
    const Hyperedge& h = g.records[rec];
    std::set<int> uniq(h.vertices.begin(), h.vertices.end());
    if (uniq.size() != h.vertices.size())
      issue("hyperloop: repeated vertex in " + g.edge_name((int)rec));
    if ((int)h.weight.size() != g.rank)
      issue("weight length mismatch in " + g.edge_name((int)rec));
    if (is_zero(h.weight))
      issue("zero weight on " + g.edge_name((int)rec));
    if (h.dim == 1) {
      if (h.vertices.size() != 2)
        issue("edge with vertex count != 2: " + g.edge_name((int)rec));
      int r = h.reverse;
      if (r < 0 || g.records[r].dim != 1 ||
          g.records[r].vertices[0] != h.vertices[1] ||
          g.records[r].vertices[1] != h.vertices[0])
        issue("missing reversed edge for " + g.edge_name((int)rec));
      else if (g.records[r].weight != neg(h.weight))
        issue("axiom (1) violated: alpha(reverse) != -alpha on " +
              g.edge_name((int)rec));
    } else {
      if ((int)h.vertices.size() < 2)
        issue("hyperedge with fewer than 2 vertices: " + g.edge_name((int)rec));
      if (!is_sign_canonical(h.weight))
        issue("axiom (2) violated: non-canonical hyperedge weight on " +
              g.edge_name((int)rec));
    }
  }

  // clutter + no multiple hyperedges: distinct underlying vertex sets,
  // no containment, and no two records sharing two or more vertices
  std::vector<std::pair<std::set<int>, int>> sets;
  for (size_t rec = 0; rec < g.records.size(); ++rec) {
    const Hyperedge& h = g.records[rec];
    if (h.dim == 1 && h.vertices[0] > h.vertices[1]) continue;  // one per class
    sets.push_back({std::set<int>(h.vertices.begin(), h.vertices.end()), (int)rec});
  }
  for (size_t a = 0; a < sets.size(); ++a)
    for (size_t b = a + 1; b < sets.size(); ++b) {
      std::vector<int> inter;
      std::set_intersection(sets[a].first.begin(), sets[a].first.end(),
                            sets[b].first.begin(), sets[b].first.end(),
                            std::back_inserter(inter));
      if (inter.size() >= 2)
        issue("multiple hyperedges through " + g.label(inter[0]) + "," +
              g.label(inter[1]) + ": " + g.edge_name(sets[a].second) + " and " +
              g.edge_name(sets[b].second));
    }

  for (size_t v = 0; v < g.num_vertices(); ++v) {
    int val = 0;
    for (int rec : g.star[v]) val += g.records[rec].dim;
    if (val != g.valence)
      issue("valence " + std::to_string(val) + " != " +
            std::to_string(g.valence) + " at " + g.label((int)v));
    if (lattice_rank(g.weights_at((int)v)) != g.rank)
      issue("axiom (3) violated: weight span rank < " +
            std::to_string(g.rank) + " at " + g.label((int)v));
  }
  return rep;
}

}  // namespace gkm
