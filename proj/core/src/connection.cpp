#include "gkm/connection.hpp"

#include <algorithm>

#include "gkm/errors.hpp"

namespace gkm {

namespace {

// Same affine line alpha + R*d, with hyperedge offsets taken up to sign.
bool lines_meet(const WeightHypergraph& g, int a, int b, const Weight& d) {
  const Hyperedge& ha = g.records[a];
  const Hyperedge& hb = g.records[b];
  bool sa = ha.dim >= 2, sb = hb.dim >= 2;
  const Weight& wa = ha.weight;
  const Weight& wb = hb.weight;
  if (proportional(sub(wb, wa), d)) return true;
  if ((sa || sb) && proportional(add(wb, wa), d)) return true;
  return false;
}

// wa at the origin star, wb candidate at the far star; true when
// wb = +-wa + c*d with integral c (sign only free for hyperedges).
bool admissible(const WeightHypergraph& g, int a, const Weight& wa, int b,
                const Weight& wb, const Weight& d) {
  if (g.records[a].dim != g.records[b].dim) return false;
  if (integer_ratio(sub(wb, wa), d)) return true;
  if (g.records[a].dim >= 2 && integer_ratio(add(wb, wa), d)) return true;
  return false;
}

}  // namespace

bool is_definite_at(const WeightHypergraph& g, int edge_rec) {
  const Hyperedge& e = g.records[edge_rec];
  if (e.dim != 1) fail("NotAnEdge", "definiteness is defined for edges only");
  int u = e.vertices[0];
  const Weight& d = e.weight;
  const std::vector<int>& st = g.star[u];
  for (size_t i = 0; i < st.size(); ++i) {
    if (st[i] == edge_rec) continue;
    for (size_t j = i + 1; j < st.size(); ++j) {
      if (st[j] == edge_rec) continue;
      if (lines_meet(g, st[i], st[j], d)) return false;
    }
  }
  return true;
}

std::map<int, int> forced_transport(const WeightHypergraph& g, int edge_rec) {
  const Hyperedge& e = g.records[edge_rec];
  if (e.dim != 1) fail("NotAnEdge", "transport is indexed by edges");
  if (!is_definite_at(g, edge_rec))
    fail("NotDefinite", "edge " + g.edge_name(edge_rec) + " is not definite");
  int u = e.vertices[0], v = e.vertices[1];
  int rev = e.reverse;
  const Weight& d = e.weight;

  std::map<int, int> out;
  out[edge_rec] = rev;
  std::set<int> used = {rev};
  for (int s : g.star[u]) {
    if (s == edge_rec) continue;
    const Weight& ws = g.weight_from(s, u);
    int match = -1;
    for (int t : g.star[v]) {
      if (t == rev) continue;
      if (admissible(g, s, ws, t, g.weight_from(t, v), d)) {
        if (match != -1)
          fail("NoAdmissibleMatching",
               "ambiguous transport of " + g.edge_name(s) + " along " +
                   g.edge_name(edge_rec));
        match = t;
      }
    }
    if (match == -1)
      fail("NoAdmissibleMatching", "no admissible image for " + g.edge_name(s) +
                                       " along " + g.edge_name(edge_rec));
    if (used.count(match))
      fail("NoAdmissibleMatching",
           "transport along " + g.edge_name(edge_rec) + " is not injective");
    used.insert(match);
    out[s] = match;
  }
  if (used.size() != g.star[v].size())
    fail("NoAdmissibleMatching",
         "transport along " + g.edge_name(edge_rec) + " is not surjective");
  return out;
}

ValidationReport validate_connection(const WeightHypergraph& g,
                                     const Connection& c) {
  ValidationReport rep;
  auto issue = [&](const std::string& s) { rep.issues.push_back(s); };

  for (const auto& [erec, m] : c.maps) {
    const Hyperedge& e = g.records[erec];
    if (e.dim != 1) {
      issue("connection indexed by non-edge " + g.edge_name(erec));
      continue;
    }
    int u = e.vertices[0], v = e.vertices[1];
    const Weight& d = e.weight;
    std::set<int> domain(g.star[u].begin(), g.star[u].end());
    std::set<int> codomain(g.star[v].begin(), g.star[v].end());
    std::set<int> image;
    for (const auto& [s, t] : m) {
      if (!domain.count(s)) issue("map at " + g.edge_name(erec) + " leaves star");
      if (!codomain.count(t)) issue("image at " + g.edge_name(erec) + " leaves star");
      image.insert(t);
      if (g.records[s].dim != g.records[t].dim)
        issue("dimension change along " + g.edge_name(erec));
      else if (!admissible(g, s, g.weight_from(s, u), t, g.weight_from(t, v), d))
        issue("non-integral difference coefficient for " + g.edge_name(s) +
              " along " + g.edge_name(erec));
    }
    if (m.size() != domain.size() || image.size() != codomain.size())
      issue("map along " + g.edge_name(erec) + " is not a star bijection");
    auto it = m.find(erec);
    if (it == m.end() || it->second != e.reverse)
      issue("map along " + g.edge_name(erec) + " does not send e to its reverse");
    if (c.covers(e.reverse)) {
      const auto& back = c.at(e.reverse);
      for (const auto& [s, t] : m) {
        auto bt = back.find(t);
        if (bt == back.end() || bt->second != s) {
          issue("reverse map along " + g.edge_name(erec) + " is not the inverse");
          break;
        }
      }
    } else {
      issue("reverse edge of " + g.edge_name(erec) + " is not covered");
    }
  }
  return rep;
}

int parallel_transport(const WeightHypergraph& g, const Connection& c,
                       const EdgePath& path, int rec) {
  int cur = rec;
  int at = -1;
  for (int erec : path) {
    const Hyperedge& e = g.records[erec];
    if (e.dim != 1) fail("NotAnEdge", "path contains a non-edge");
    if (at != -1 && e.vertices[0] != at)
      fail("InvalidParams", "path is not composable at " + g.label(at));
    if (!c.covers(erec))
      fail("PathNotCovered", "no transport along " + g.edge_name(erec));
    const auto& m = c.at(erec);
    auto it = m.find(cur);
    if (it == m.end())
      fail("Internal", "star element missing from transport along " +
                           g.edge_name(erec));
    cur = it->second;
    at = e.vertices[1];
  }
  return cur;
}

Subgraph induced_subgraph(const WeightHypergraph& g, const std::set<int>& vs) {
  Subgraph s;
  s.vertices = vs;
  for (int v : vs)
    for (int rec : g.star[v])
      if (g.records[rec].dim == 1 && vs.count(g.records[rec].vertices[1]))
        s.edges.insert(rec);
  return s;
}

bool is_invariant_subgraph(const WeightHypergraph& g, const Connection& c,
                           const Subgraph& s) {
  auto inside = [&](int rec) {
    const Hyperedge& h = g.records[rec];
    if (h.dim == 1) return s.edges.count(rec) > 0;
    for (int v : h.vertices)
      if (!s.vertices.count(v)) return false;
    return true;
  };
  for (int erec : s.edges) {
    if (!c.covers(erec)) continue;
    int u = g.records[erec].vertices[0];
    const auto& m = c.at(erec);
    for (int x : g.star[u])
      if (inside(x) && !inside(m.at(x))) return false;
  }
  return true;
}

}  // namespace gkm
