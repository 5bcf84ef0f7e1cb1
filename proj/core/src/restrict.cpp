#include "gkm/restrict.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gkm/errors.hpp"
#include "gkm/intmat.hpp"

namespace gkm {

Weight CocharacterMap::apply(const Weight& w) const {
  Weight out(rows(), 0);
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) out[i] += m[i][j] * w[j];
  return out;
}

bool CocharacterMap::surjective() const {
  IntMat im(rows(), IntVec(cols()));
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) im[i][j] = m[i][j];
  return surjective_over_z(im);
}

namespace {

Weight primitive_direction(const Weight& w) {
  long long g = 0;
  for (long long c : w) g = std::gcd(g, c < 0 ? -c : c);
  Weight r(w.size());
  for (size_t i = 0; i < w.size(); ++i) r[i] = w[i] / g;
  return sign_canonical(r);
}

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

WeightHypergraph restrict_action(const WeightHypergraph& g,
                                 const CocharacterMap& f) {
  if (f.cols() != g.rank)
    fail("InvalidParams", "cocharacter map source rank mismatch");
  if (!f.surjective())
    fail("InvalidParams", "cocharacter map is not surjective");

  // undirected classes: every dim>=2 record, one direction of each edge
  std::vector<int> classes;
  std::vector<int> class_of(g.records.size(), -1);
  for (size_t rec = 0; rec < g.records.size(); ++rec) {
    const Hyperedge& h = g.records[rec];
    if (h.dim == 1 && h.vertices[0] > h.vertices[1]) {
      class_of[rec] = class_of[h.reverse];
      continue;
    }
    class_of[rec] = (int)classes.size();
    classes.push_back((int)rec);
  }

  std::vector<Weight> image(classes.size());
  std::vector<Weight> dir(classes.size());
  for (size_t c = 0; c < classes.size(); ++c) {
    image[c] = f.apply(g.records[classes[c]].weight);
    if (is_zero(image[c]))
      fail("NonIsolatedFixedPoints",
           "weight of " + g.edge_name(classes[c]) + " maps to zero");
    dir[c] = primitive_direction(image[c]);
  }

  // merge classes sharing a vertex and a direction (up to sign)
  UF uf((int)classes.size());
  for (size_t v = 0; v < g.num_vertices(); ++v) {
    std::map<Weight, int> first;
    for (int rec : g.star[v]) {
      int c = class_of[rec];
      auto [it, fresh] = first.try_emplace(dir[c], c);
      if (!fresh) uf.unite(c, it->second);
    }
  }

  std::map<int, std::vector<int>> comps;
  for (size_t c = 0; c < classes.size(); ++c)
    comps[uf.find((int)c)].push_back((int)c);

  HypergraphBuilder b(f.rows(), g.valence);
  for (const std::string& l : g.labels) b.add_vertex(l);
  for (const auto& [root, members] : comps) {
    if (members.size() == 1 && g.records[classes[members[0]]].dim == 1) {
      const Hyperedge& h = g.records[classes[members[0]]];
      b.add_edge(g.label(h.vertices[0]), g.label(h.vertices[1]),
                 image[members[0]]);
      continue;
    }
    std::set<int> vs;
    int dim = 0;
    int v0 = -1;
    bool same_weight = true;
    for (int c : members) {
      const Hyperedge& h = g.records[classes[c]];
      for (int v : h.vertices) vs.insert(v);
      if (v0 == -1) v0 = h.vertices[0];
      if (sign_canonical(image[c]) != sign_canonical(image[members[0]]))
        same_weight = false;
    }
    // tangent dimension at any member vertex
    for (int c : members) {
      const Hyperedge& h = g.records[classes[c]];
      if (std::find(h.vertices.begin(), h.vertices.end(), v0) != h.vertices.end())
        dim += h.dim;
    }
    std::vector<std::string> labels;
    for (int v : vs) labels.push_back(g.label(v));
    Weight w = same_weight ? sign_canonical(image[members[0]]) : dir[members[0]];
    b.add_hyperedge(labels, dim, w);
  }
  return b.build();
}

}  // namespace gkm
