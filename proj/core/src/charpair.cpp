#include "gkm/charpair.hpp"

#include <algorithm>

#include "gkm/errors.hpp"
#include "gkm/intmat.hpp"

namespace gkm {

namespace {

IntMat vertex_minor(const CharPair& cp, const std::set<int>& v) {
  int n = cp.polytope.dim;
  IntMat m(n, IntVec(n));
  int col = 0;
  for (int f : v) {
    for (int r = 0; r < n; ++r) m[r][col] = cp.lambda[r][f];
    ++col;
  }
  return m;
}

// inverse of a matrix with det +-1, via the adjugate
IntMat unimodular_inverse(const IntMat& m) {
  int n = (int)m.size();
  Int d = det(m);
  if (d != 1 && d != -1) fail("Internal", "inverse of non-unimodular matrix");
  IntMat inv(n, IntVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMat sub;
      for (int r = 0; r < n; ++r) {
        if (r == j) continue;
        IntVec row;
        for (int c = 0; c < n; ++c)
          if (c != i) row.push_back(m[r][c]);
        sub.push_back(row);
      }
      Int cof = det(sub);
      if ((i + j) % 2) cof = -cof;
      inv[i][j] = cof / d;
    }
  return inv;
}

}  // namespace

void validate_charpair(const CharPair& cp) {
  int n = cp.polytope.dim;
  if ((int)cp.lambda.size() != n)
    fail("InvalidParams", "characteristic matrix must have dim rows");
  for (const auto& row : cp.lambda)
    if ((int)row.size() != cp.polytope.nfacets)
      fail("InvalidParams", "characteristic matrix must have one column per facet");
  for (size_t v = 0; v < cp.polytope.vertices.size(); ++v) {
    Int d = det(vertex_minor(cp, cp.polytope.vertices[v]));
    if (d != 1 && d != -1)
      fail("MinorNotUnimodular",
           "vertex " + cp.polytope.vertex_label((int)v) + " has minor det " +
               d.str());
  }
}

WeightHypergraph gkm_from_charpair(const CharPair& cp) {
  validate_charpair(cp);
  const SimplePolytope& p = cp.polytope;
  int n = p.dim;
  HypergraphBuilder b(n, n);
  for (size_t v = 0; v < p.vertices.size(); ++v)
    b.add_vertex(p.vertex_label((int)v));
  for (size_t v = 0; v < p.vertices.size(); ++v) {
    IntMat inv = unimodular_inverse(vertex_minor(cp, p.vertices[v]));
    int pos = 0;
    for (int f : p.vertices[v]) {
      // the edge dropping facet f: the unique other vertex over v \ {f}
      std::set<int> rest = p.vertices[v];
      rest.erase(f);
      int other = -1;
      for (int w : p.vertices_on(rest))
        if (w != (int)v) other = w;
      if (other < 0)
        fail("InvalidParams",
             "not a simple polytope edge graph at " + p.vertex_label((int)v));
      Weight wt(n);
      for (int c = 0; c < n; ++c) wt[c] = (long long)inv[pos][c];
      b.add_edge(p.vertex_label((int)v), p.vertex_label(other), wt);
      ++pos;
    }
  }
  return b.build();
}

Connection unique_connection(const WeightHypergraph& g) {
  Connection c;
  for (size_t rec = 0; rec < g.records.size(); ++rec)
    if (g.records[rec].dim == 1) c.maps[(int)rec] = forced_transport(g, (int)rec);
  return c;
}

Subgraph span_face(const WeightHypergraph& g, const Connection& c, int base,
                   const std::vector<int>& seed_edges, int r) {
  Subgraph s;
  s.vertices.insert(base);
  auto add_edge = [&](int rec) {
    s.edges.insert(rec);
    s.edges.insert(g.reverse(rec));
    s.vertices.insert(g.records[rec].vertices[0]);
    s.vertices.insert(g.records[rec].vertices[1]);
  };
  for (int rec : seed_edges) {
    if (g.records[rec].dim != 1 || g.origin(rec) != base)
      fail("InvalidParams", "seed edges must start at the base vertex");
    add_edge(rec);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    size_t ne = s.edges.size(), nv = s.vertices.size();
    // chords
    std::vector<int> vs(s.vertices.begin(), s.vertices.end());
    for (int a : vs)
      for (int b2 : vs) {
        int e = g.edge_between(a, b2);
        if (e >= 0 && !s.edges.count(e)) add_edge(e);
      }
    // transports of internal edges along internal edges
    std::vector<int> es(s.edges.begin(), s.edges.end());
    for (int e : es) {
      if (!c.covers(e)) continue;
      const auto& m = c.at(e);
      for (int x : es)
        if (g.origin(x) == g.origin(e)) {
          int y = m.at(x);
          if (!s.edges.count(y)) add_edge(y);
        }
    }
    grew = s.edges.size() != ne || s.vertices.size() != nv;
  }
  for (int v : s.vertices) {
    int val = 0;
    for (int e : s.edges)
      if (g.origin(e) == v) ++val;
    if (val > r)
      fail("Internal", "face span exceeds expected valence at " + g.label(v));
  }
  return s;
}

bool check_external_monodromy(const WeightHypergraph& g, const Connection& c,
                              const Subgraph& face, int max_cycle_len,
                              std::string* diagnostic) {
  auto internal = [&](int rec) {
    const Hyperedge& h = g.records[rec];
    if (h.dim == 1) return face.edges.count(rec) > 0;
    for (int v : h.vertices)
      if (!face.vertices.count(v)) return false;
    return true;
  };
  for (int base : face.vertices) {
    std::vector<int> externals;
    for (int x : g.star[base])
      if (!internal(x)) externals.push_back(x);
    // walk images of all externals together
    struct State { int at; std::vector<int> img; int len; EdgePath path; };
    std::vector<State> stack = {{base, externals, 0, {}}};
    while (!stack.empty()) {
      State st = stack.back();
      stack.pop_back();
      if (st.len > 0 && st.at == base) {
        for (size_t k = 0; k < externals.size(); ++k)
          if (st.img[k] != externals[k]) {
            if (diagnostic) {
              *diagnostic = "cycle at " + g.label(base) + " moves " +
                            g.edge_name(externals[k]) + " to " +
                            g.edge_name(st.img[k]);
            }
            return false;
          }
      }
      if (st.len == max_cycle_len) continue;
      for (int e : g.star[st.at]) {
        if (g.records[e].dim != 1 || !face.edges.count(e)) continue;
        if (!c.covers(e)) continue;
        const auto& m = c.at(e);
        State nx;
        nx.at = g.end(e);
        nx.len = st.len + 1;
        nx.path = st.path;
        nx.path.push_back(e);
        bool ok = true;
        for (int img : st.img) {
          int y = m.at(img);
          if (internal(y)) {
            if (diagnostic)
              *diagnostic = "external element becomes internal along " +
                            g.edge_name(e);
            ok = false;
            break;
          }
          nx.img.push_back(y);
        }
        if (!ok) return false;
        stack.push_back(std::move(nx));
      }
    }
  }
  return true;
}

CharPair charpair_br21() {
  return {polytope_truncate(polytope_cube(2), {1, 2}),
          {{1, -1, 0, 0, -1}, {0, 0, 1, -1, 1}}};
}

CharPair charpair_br22() {
  return {polytope_cube(3),
          {{1, -1, 0, 0, 0, 0}, {0, 1, 1, -1, 0, 0}, {0, -2, 0, 1, 1, -1}}};
}

CharPair charpair_r22() {
  return {polytope_truncate(polytope_cube(3), {3, 5}),
          {{1, -1, 0, 0, 0, 0, 0},
           {0, 1, 1, -1, 0, 0, -1},
           {0, -2, 0, 1, 1, -1, 0}}};
}

CharPair charpair_r13() {
  return {polytope_truncate(polytope_cube(3), {3, 4}),
          {{1, -1, 0, 0, 0, 0, 0},
           {0, 1, 1, -1, 0, 0, -1},
           {0, 0, 0, 0, 1, -1, 1}}};
}

}  // namespace gkm
