#pragma once

#include <set>
#include <string>
#include <vector>

namespace gkm {

// Combinatorial simple polytope: facets 0..nfacets-1, each vertex the set of
// the dim facets through it; edges join vertices sharing dim-1 facets.
struct SimplePolytope {
  int nfacets = 0;
  int dim = 0;
  std::vector<std::set<int>> vertices;

  std::string vertex_label(int v) const;
  // vertices containing every facet of `face` (a partial facet set)
  std::vector<int> vertices_on(const std::set<int>& face) const;
  bool adjacent(int v, int w) const;
};

SimplePolytope polytope_cube(int n);     // facets 2q (x_q=0), 2q+1 (x_q=1)
SimplePolytope polytope_simplex(int n);  // n+1 facets, all n-subsets
SimplePolytope polytope_product(const SimplePolytope& p,
                                const SimplePolytope& q);

// Truncation along the face defined by a facet subset; the cut introduces
// facet index nfacets.
SimplePolytope polytope_truncate(const SimplePolytope& p,
                                 const std::set<int>& face);

// Nonempty proper faces of dimension >= min_dim, each given by the facet
// subset cutting it out (maximal such subset), deduplicated by vertex set.
std::vector<std::set<int>> proper_faces(const SimplePolytope& p, int min_dim);

}  // namespace gkm
