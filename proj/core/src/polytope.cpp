#include "gkm/polytope.hpp"

#include <algorithm>

#include "gkm/errors.hpp"

namespace gkm {

std::string SimplePolytope::vertex_label(int v) const {
  std::string s;
  for (int f : vertices[v]) {
    if (!s.empty()) s += ".";
    s += std::to_string(f);
  }
  return s;
}

std::vector<int> SimplePolytope::vertices_on(const std::set<int>& face) const {
  std::vector<int> out;
  for (size_t v = 0; v < vertices.size(); ++v)
    if (std::includes(vertices[v].begin(), vertices[v].end(), face.begin(),
                      face.end()))
      out.push_back((int)v);
  return out;
}

bool SimplePolytope::adjacent(int v, int w) const {
  std::vector<int> inter;
  std::set_intersection(vertices[v].begin(), vertices[v].end(),
                        vertices[w].begin(), vertices[w].end(),
                        std::back_inserter(inter));
  return (int)inter.size() == dim - 1;
}

SimplePolytope polytope_cube(int n) {
  if (n < 1) fail("InvalidParams", "cube dimension must be positive");
  SimplePolytope p;
  p.nfacets = 2 * n;
  p.dim = n;
  for (unsigned b = 0; b < (1u << n); ++b) {
    std::set<int> v;
    for (int q = 0; q < n; ++q) v.insert(2 * q + ((b >> q) & 1u));
    p.vertices.push_back(v);
  }
  return p;
}

SimplePolytope polytope_simplex(int n) {
  if (n < 1) fail("InvalidParams", "simplex dimension must be positive");
  SimplePolytope p;
  p.nfacets = n + 1;
  p.dim = n;
  for (int skip = 0; skip <= n; ++skip) {
    std::set<int> v;
    for (int f = 0; f <= n; ++f)
      if (f != skip) v.insert(f);
    p.vertices.push_back(v);
  }
  return p;
}

SimplePolytope polytope_product(const SimplePolytope& p,
                                const SimplePolytope& q) {
  SimplePolytope out;
  out.nfacets = p.nfacets + q.nfacets;
  out.dim = p.dim + q.dim;
  for (const auto& a : p.vertices)
    for (const auto& b : q.vertices) {
      std::set<int> v = a;
      for (int f : b) v.insert(p.nfacets + f);
      out.vertices.push_back(v);
    }
  return out;
}

SimplePolytope polytope_truncate(const SimplePolytope& p,
                                 const std::set<int>& face) {
  if (face.empty() || (int)face.size() > p.dim)
    fail("InvalidParams", "truncation face must be a nonempty proper face");
  std::vector<int> on = p.vertices_on(face);
  if (on.empty()) fail("InvalidParams", "facet set cuts out no face");
  int cut = p.nfacets;
  SimplePolytope out;
  out.nfacets = p.nfacets + 1;
  out.dim = p.dim;
  std::set<int> removed(on.begin(), on.end());
  for (size_t v = 0; v < p.vertices.size(); ++v)
    if (!removed.count((int)v)) out.vertices.push_back(p.vertices[v]);
  for (int v : on)
    for (int f : face) {
      std::set<int> nv = p.vertices[v];
      nv.erase(f);
      nv.insert(cut);
      out.vertices.push_back(nv);
    }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

std::vector<std::set<int>> proper_faces(const SimplePolytope& p, int min_dim) {
  // meet-closure of the vertex facet sets; each face is represented by the
  // full set of facets containing it, so its dimension is dim - |set|
  std::set<std::set<int>> closed(p.vertices.begin(), p.vertices.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::set<int>> cur(closed.begin(), closed.end());
    for (size_t a = 0; a < cur.size(); ++a)
      for (size_t b = a + 1; b < cur.size(); ++b) {
        std::set<int> inter;
        std::set_intersection(cur[a].begin(), cur[a].end(), cur[b].begin(),
                              cur[b].end(),
                              std::inserter(inter, inter.begin()));
        if (!inter.empty() && !closed.count(inter)) {
          closed.insert(inter);
          grew = true;
        }
      }
  }
  std::vector<std::set<int>> out;
  for (const auto& s : closed) {
    int d = p.dim - (int)s.size();
    if (d >= min_dim && d < p.dim) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gkm
