#include "gkm/families.hpp"

#include <algorithm>
#include <set>

#include "gkm/errors.hpp"

namespace gkm {

int a_idx(unsigned u, int k) {
  for (int r = k; r >= 1; --r)
    if ((u >> (r - 1)) & 1u) return r;
  return 0;
}

int b_idx(unsigned u, int k) {
  return ((u >> (k - 1)) & 1u) ? a_idx(u, k - 1) : k;
}

std::string bits_label(unsigned u, int n) {
  if (n == 0) return "e";
  std::string s(n, '0');
  for (int q = 1; q <= n; ++q)
    if ((u >> (q - 1)) & 1u) s[q - 1] = '1';
  return s;
}

namespace {

// e_b - e_a with the convention e_m = 0 for m <= 0
Weight wdiff(int rank, int b, int a) {
  return sub(basis_vector(rank, b), basis_vector(rank, a));
}

std::string brl(int i, unsigned u, int k) {
  return bits_label(u, i) + "," + std::to_string(k);
}

}  // namespace

WeightHypergraph bf_graph(int n) {
  if (n < 0) fail("InvalidParams", "bf_graph needs n >= 0");
  HypergraphBuilder b(n, n);
  for (unsigned u = 0; u < (1u << n); ++u) b.add_vertex(bits_label(u, n));
  for (unsigned u = 0; u < (1u << n); ++u)
    for (int q = 1; q <= n; ++q)
      b.add_edge(bits_label(u, n), bits_label(u ^ (1u << (q - 1)), n),
                 wdiff(n, b_idx(u, q), a_idx(u, q)));
  return b.build();
}

WeightHypergraph br_graph(int i, int j) {
  if (i < 1 || j < 0) fail("InvalidParams", "br_graph needs i >= 1, j >= 0");
  if (i < j)
    fail("NonIsolatedFixedPoints",
         "br_graph(" + std::to_string(i) + "," + std::to_string(j) +
             "): the rank-i action has fixed curves for i < j");
  int shift = i - j;
  auto valid = [&](unsigned u, int k) { return a_idx(u, i) != k + shift; };
  HypergraphBuilder b(i, i + j - 1);
  for (unsigned u = 0; u < (1u << i); ++u)
    for (int k = 0; k <= j; ++k)
      if (valid(u, k)) b.add_vertex(brl(i, u, k));

  // dependent weight pairs span 2-dimensional strata; record them first
  std::set<std::pair<std::string, std::string>> covered;
  auto cover = [&](std::vector<std::string> vs) {
    std::sort(vs.begin(), vs.end());
    for (size_t x = 0; x < vs.size(); ++x)
      for (size_t y = x + 1; y < vs.size(); ++y)
        covered.insert({vs[x], vs[y]});
  };
  for (unsigned u = 0; u < (1u << i); ++u)
    for (int k = 0; k <= j; ++k) {
      if (!valid(u, k)) continue;
      for (int q = 1; q <= i; ++q)
        for (int r = 0; r <= j; ++r) {
          if (r == k) continue;
          // minmax by value: the reference pair would dangle
          std::pair<int, int> pr = std::minmax(a_idx(u, q), b_idx(u, q));
          std::pair<int, int> dep = std::minmax(k + shift, r + shift);
          std::pair<int, int> rem = std::minmax(k + shift, a_idx(u, i));
          if (pr != dep || pr == rem) continue;
          unsigned uq = u ^ (1u << (q - 1));
          std::vector<std::string> vs = {brl(i, u, k), brl(i, uq, k),
                                         brl(i, u, r), brl(i, uq, r)};
          b.add_hyperedge(vs, 2,
                          wdiff(i, b_idx(u, q), a_idx(u, q)));
          cover(vs);
        }
    }

  auto maybe_edge = [&](const std::string& x, const std::string& y,
                        const Weight& w) {
    auto key = std::minmax(x, y);
    if (covered.count({key.first, key.second})) return;
    b.add_edge(x, y, w);
  };
  for (unsigned u = 0; u < (1u << i); ++u)
    for (int k = 0; k <= j; ++k) {
      if (!valid(u, k)) continue;
      std::string at = brl(i, u, k);
      for (int r = 0; r <= j; ++r) {  // fiber spheres
        if (r == k || a_idx(u, i) == r + shift) continue;
        maybe_edge(at, brl(i, u, r), wdiff(i, k + shift, r + shift));
      }
      for (int q = 1; q <= i; ++q) {  // base spheres
        unsigned uq = u ^ (1u << (q - 1));
        if (a_idx(uq, i) == k + shift) continue;
        maybe_edge(at, brl(i, uq, k), wdiff(i, b_idx(u, q), a_idx(u, q)));
      }
      for (int q = 1; q <= i; ++q)  // castling spheres
        for (int r = 0; r <= j; ++r) {
          unsigned uq = u ^ (1u << (q - 1));
          if (a_idx(uq, i) != k + shift || a_idx(u, i) != r + shift) continue;
          maybe_edge(at, brl(i, uq, r), wdiff(i, b_idx(u, q), a_idx(u, q)));
        }
    }
  return b.build();
}

namespace {

WeightHypergraph r_graph_core(int i, int j, bool swap_labels) {
  int shift = i - j;
  auto lbl = [&](unsigned u, unsigned v) {
    std::string su = bits_label(u, i), sv = bits_label(v, j);
    return swap_labels ? sv + "," + su : su + "," + sv;
  };
  auto valid = [&](unsigned u, unsigned v) {
    return a_idx(u, i) != a_idx(v, j) + shift;
  };
  HypergraphBuilder b(i, i + j - 1);
  for (unsigned u = 0; u < (1u << i); ++u)
    for (unsigned v = 0; v < (1u << j); ++v)
      if (valid(u, v)) b.add_vertex(lbl(u, v));

  std::set<std::pair<std::string, std::string>> covered;
  auto cover = [&](std::vector<std::string> vs) {
    std::sort(vs.begin(), vs.end());
    for (size_t x = 0; x < vs.size(); ++x)
      for (size_t y = x + 1; y < vs.size(); ++y)
        covered.insert({vs[x], vs[y]});
  };
  for (unsigned u = 0; u < (1u << i); ++u)
    for (unsigned v = 0; v < (1u << j); ++v) {
      if (!valid(u, v)) continue;
      for (int q = 1; q <= i; ++q)
        for (int s = 1; s <= j; ++s) {
          std::pair<int, int> pu = std::minmax(a_idx(u, q), b_idx(u, q));
          std::pair<int, int> pv =
              std::minmax(a_idx(v, s) + shift, b_idx(v, s) + shift);
          std::pair<int, int> rem =
              std::minmax(a_idx(v, j) + shift, a_idx(u, i));
          if (pu != pv || pu == rem) continue;
          unsigned uq = u ^ (1u << (q - 1));
          unsigned vs = v ^ (1u << (s - 1));
          std::vector<std::string> four = {lbl(u, v), lbl(uq, v), lbl(u, vs),
                                           lbl(uq, vs)};
          b.add_hyperedge(four, 2, wdiff(i, b_idx(u, q), a_idx(u, q)));
          cover(four);
        }
    }

  auto maybe_edge = [&](const std::string& x, const std::string& y,
                        const Weight& w) {
    auto key = std::minmax(x, y);
    if (covered.count({key.first, key.second})) return;
    b.add_edge(x, y, w);
  };
  for (unsigned u = 0; u < (1u << i); ++u)
    for (unsigned v = 0; v < (1u << j); ++v) {
      if (!valid(u, v)) continue;
      std::string at = lbl(u, v);
      for (int r = 1; r <= i; ++r) {
        unsigned ur = u ^ (1u << (r - 1));
        if (!valid(ur, v)) continue;
        maybe_edge(at, lbl(ur, v), wdiff(i, b_idx(u, r), a_idx(u, r)));
      }
      for (int q = 1; q <= j; ++q) {
        unsigned vq = v ^ (1u << (q - 1));
        if (!valid(u, vq)) continue;
        maybe_edge(at, lbl(u, vq),
                   wdiff(i, a_idx(v, q) + shift, b_idx(v, q) + shift));
      }
      for (int q = 1; q <= i; ++q)
        for (int r = 1; r <= j; ++r) {
          unsigned uq = u ^ (1u << (q - 1));
          unsigned vr = v ^ (1u << (r - 1));
          if (a_idx(uq, i) != a_idx(v, j) + shift) continue;
          if (a_idx(u, i) != a_idx(vr, j) + shift) continue;
          maybe_edge(at, lbl(uq, vr),
                     wdiff(i, a_idx(v, j) + shift, a_idx(u, i)));
        }
    }
  return b.build();
}

}  // namespace

WeightHypergraph r_graph(int i, int j) {
  if (i < 0 || j < 0 || i + j == 0)
    fail("InvalidParams", "r_graph needs i, j >= 0, not both zero");
  if (j == 0) return i == 1 ? bf_graph(0) : bf_graph(i - 1);
  if (i == 0) return bf_graph(j - 1);
  if (i >= j) return r_graph_core(i, j, false);
  return r_graph_core(j, i, true);
}

WeightHypergraph hij_graph(int i, int j) {
  if (i < 1 || i > j) fail("InvalidParams", "hij_graph needs 1 <= i <= j");
  auto lbl = [](int a, int b) {
    return std::to_string(a) + "," + std::to_string(b);
  };
  HypergraphBuilder bld(j, i + j - 1);
  for (int a = 0; a <= i; ++a)
    for (int b = 0; b <= j; ++b)
      if (a != b) bld.add_vertex(lbl(a, b));
  for (int a = 0; a <= i; ++a)
    for (int b = 0; b <= j; ++b) {
      if (a == b) continue;
      for (int c = 0; c <= i; ++c) {
        if (c == a || c == b) continue;
        Weight w = wdiff(j, c, a);
        if (is_zero(w)) fail("NonIsolatedFixedPoints", "trivial direction");
        bld.add_edge(lbl(a, b), lbl(c, b), w);
      }
      for (int c = 0; c <= j; ++c) {
        if (c == b || c == a) continue;
        Weight w = wdiff(j, b, c);
        if (is_zero(w)) fail("NonIsolatedFixedPoints", "trivial direction");
        bld.add_edge(lbl(a, b), lbl(a, c), w);
      }
      if (b <= i && a < b)  // the diagonal sphere swapping the two factors
        bld.add_edge(lbl(a, b), lbl(b, a), wdiff(j, b, a));
    }
  return bld.build();
}

std::vector<Weight> br_vertex_weights(int i, int j, unsigned u, int k) {
  if (i < j) fail("InvalidParams", "br weights need i >= j");
  int shift = i - j;
  if (a_idx(u, i) == k + shift)
    fail("InvalidParams", "not a fixed point of br(i,j)");
  std::vector<Weight> out;
  for (int q = 1; q <= i; ++q)
    out.push_back(wdiff(i, b_idx(u, q), a_idx(u, q)));
  for (int r = 0; r <= j; ++r)
    if (r != k) out.push_back(wdiff(i, k + shift, r + shift));
  Weight removed = wdiff(i, k + shift, a_idx(u, i));
  auto it = std::find(out.begin(), out.end(), removed);
  if (it == out.end())
    fail("Internal", "normal weight missing from ambient multiset");
  out.erase(it);
  return out;
}

Connection br_partial_connection(const WeightHypergraph& g, int i, int j) {
  Connection c;
  if (i <= j) return c;
  int shift = i - j;
  auto rec = [&](unsigned u1, int k1, unsigned u2, int k2) {
    int r = g.edge_between(g.vertex(brl(i, u1, k1)), g.vertex(brl(i, u2, k2)));
    if (r < 0) fail("Internal", "expected edge missing in br graph");
    return r;
  };
  for (unsigned u = 0; u < (1u << i); ++u) {
    if (a_idx(u, i) >= shift) continue;
    for (int k = 0; k <= j; ++k)
      for (int r = 0; r <= j; ++r) {
        if (r == k) continue;
        int e = rec(u, k, u, r);
        std::map<int, int>& m = c.maps[e];
        m[e] = g.reverse(e);
        for (int a = 0; a <= j; ++a)
          if (a != k && a != r) m[rec(u, k, u, a)] = rec(u, r, u, a);
        for (int q = 1; q <= i; ++q) {
          if (q == k + shift) continue;  // no such sphere at x_{u,k}
          unsigned uq = u ^ (1u << (q - 1));
          if (q == r + shift)
            m[rec(u, k, uq, k)] = rec(u, r, u ^ (1u << (k + shift - 1)), r);
          else
            m[rec(u, k, uq, k)] = rec(u, r, uq, r);
        }
      }
  }
  return c;
}

Connection r_partial_connection(const WeightHypergraph& g, int i, int j) {
  if (!(i > j && j >= 2))
    fail("InvalidParams", "r_partial_connection needs i > j >= 2");
  unsigned u0 = 0, uim1 = 1u << (i - 2), ui = 1u << (i - 1);
  unsigned uimj = 1u << (i - j - 1);
  unsigned v0 = 0, vj = 1u << (j - 1), vjm1 = 1u << (j - 2);
  unsigned vjm1j = vjm1 | vj;
  auto lbl = [&](unsigned u, unsigned v) {
    return bits_label(u, i) + "," + bits_label(v, j);
  };
  auto rec = [&](unsigned ua, unsigned va, unsigned ub, unsigned vb) {
    int r = g.edge_between(g.vertex(lbl(ua, va)), g.vertex(lbl(ub, vb)));
    if (r < 0) fail("Internal", "expected edge missing in r graph");
    return r;
  };
  Connection c;
  auto put = [&](int e, std::map<int, int> m) {
    m[e] = g.reverse(e);
    c.maps[e] = std::move(m);
  };

  {
    int e = rec(u0, vj, u0, v0);
    std::map<int, int> m;
    for (int q = 1; q <= i - 1; ++q) {
      if (q == i - j) continue;
      unsigned b = 1u << (q - 1);
      m[rec(u0, vj, b, vj)] = rec(u0, v0, b, v0);
    }
    for (int r = 1; r <= j - 1; ++r) {
      unsigned b = 1u << (r - 1);
      m[rec(u0, vj, u0, b | vj)] = rec(u0, v0, u0, b);
    }
    m[rec(u0, vj, uimj, vj)] = rec(u0, v0, ui, v0);
    put(e, m);
  }
  {
    int e = rec(u0, v0, uim1, v0);
    std::map<int, int> m;
    for (int q = 1; q <= i; ++q) {
      if (q == i - j || q == i - 1 || q == i) continue;
      unsigned b = 1u << (q - 1);
      m[rec(u0, v0, b, v0)] = rec(uim1, v0, b | uim1, v0);
    }
    for (int r = 1; r <= j; ++r) {
      if (r == j - 1) continue;
      unsigned b = 1u << (r - 1);
      m[rec(u0, v0, u0, b)] = rec(uim1, v0, uim1, b);
    }
    m[rec(u0, v0, u0, vjm1)] = rec(uim1, v0, uimj | uim1, v0);
    m[rec(u0, v0, ui, v0)] = rec(uim1, v0, uim1 | ui, v0);
    put(e, m);
  }
  {
    int e = rec(uim1, v0, uim1, vj);
    std::map<int, int> m;
    for (int q = 1; q <= i - 2; ++q) {
      unsigned b = 1u << (q - 1);
      m[rec(uim1, v0, b | uim1, v0)] = rec(uim1, vj, b | uim1, vj);
    }
    for (int r = 1; r <= j - 2; ++r) {
      unsigned b = 1u << (r - 1);
      m[rec(uim1, v0, uim1, b)] = rec(uim1, vj, uim1, b | vj);
    }
    m[rec(uim1, v0, u0, v0)] = rec(uim1, vj, u0, vj);
    m[rec(uim1, v0, uim1 | ui, v0)] = rec(uim1, vj, uim1, vjm1j);
    put(e, m);
  }
  {
    int e = rec(uim1, vj, uim1, vjm1j);
    std::map<int, int> m;
    for (int q = 1; q <= i - 2; ++q) {
      unsigned b = 1u << (q - 1);
      m[rec(uim1, vj, b | uim1, vj)] = rec(uim1, vjm1j, b | uim1, vjm1j);
    }
    for (int r = 1; r <= j - 2; ++r) {
      unsigned b = 1u << (r - 1);
      m[rec(uim1, vj, uim1, b | vj)] = rec(uim1, vjm1j, uim1, b | vjm1j);
    }
    m[rec(uim1, vj, u0, vj)] = rec(uim1, vjm1j, u0, vjm1j);
    m[rec(uim1, vj, uim1, v0)] = rec(uim1, vjm1j, uim1 | ui, vjm1);
    put(e, m);
  }

  // reverse edges carry the inverse bijections
  std::vector<int> covered;
  for (const auto& [e, m] : c.maps) covered.push_back(e);
  for (int e : covered) {
    std::map<int, int> inv;
    for (const auto& [s, t] : c.maps[e]) inv[t] = s;
    c.maps[g.reverse(e)] = std::move(inv);
  }
  return c;
}

namespace {

ReplayStep step(const WeightHypergraph& g, int along, int before, int after) {
  return {g.edge_name(along), g.edge_name(before), g.edge_name(after)};
}

}  // namespace

ReplayReport reproduce_thm12(int i, int j) {
  if (!(i > j && j >= 2)) fail("InvalidParams", "needs i > j >= 2");
  WeightHypergraph g = br_graph(i, j);
  Connection c = br_partial_connection(g, i, j);
  int shift = i - j;
  ReplayReport rep;
  rep.contradiction = true;
  auto rec = [&](unsigned u1, int k1, unsigned u2, int k2) {
    return g.edge_between(g.vertex(brl(i, u1, k1)), g.vertex(brl(i, u2, k2)));
  };
  for (int k = 0; k + 2 <= j; ++k) {
    EdgePath path = {rec(0, k, 0, k + 1), rec(0, k + 1, 0, k + 2),
                     rec(0, k + 2, 0, k)};
    int cur = rec(0, k, 1u << (k + shift), k);  // u-sphere 1_{k+1+(i-j)}
    for (int e : path) {
      const auto forced = forced_transport(g, e);
      if (forced != c.at(e))
        fail("StepMismatch", "forced transport disagrees with the derived "
                             "connection along " + g.edge_name(e));
      int nxt = forced.at(cur);
      rep.steps.push_back(step(g, e, cur, nxt));
      cur = nxt;
    }
    int expect = rec(0, k, 1u << (k + 1 + shift), k);
    if (cur != expect)
      fail("StepMismatch", "monodromy image differs from the derived chain");
    if (cur == rec(0, k, 1u << (k + shift), k)) rep.contradiction = false;
  }
  rep.conclusion =
      "triangle monodromy moves an external edge at every base point "
      "x_{0,k}; a toric structure would fix it";
  return rep;
}

ReplayReport reproduce_thm13(int i, int j) {
  if (!(i > j && j >= 2)) fail("InvalidParams", "needs i > j >= 2");
  WeightHypergraph g = r_graph(i, j);
  Connection c = r_partial_connection(g, i, j);
  unsigned u0 = 0, uim1 = 1u << (i - 2), ui = 1u << (i - 1);
  unsigned uimj = 1u << (i - j - 1);
  unsigned vj = 1u << (j - 1), vjm1 = 1u << (j - 2);
  unsigned vjm1j = vjm1 | vj;
  auto lbl = [&](unsigned u, unsigned v) {
    return bits_label(u, i) + "," + bits_label(v, j);
  };
  auto rec = [&](unsigned ua, unsigned va, unsigned ub, unsigned vb) {
    return g.edge_between(g.vertex(lbl(ua, va)), g.vertex(lbl(ub, vb)));
  };
  ReplayReport rep;
  EdgePath path = {rec(u0, vj, u0, 0), rec(u0, 0, uim1, 0),
                   rec(uim1, 0, uim1, vj)};
  int cur = rec(u0, vj, uimj, vj);
  for (int e : path) {
    const auto forced = forced_transport(g, e);
    if (forced != c.at(e))
      fail("StepMismatch", "forced transport disagrees with the derived "
                           "connection along " + g.edge_name(e));
    int nxt = forced.at(cur);
    rep.steps.push_back(step(g, e, cur, nxt));
    cur = nxt;
  }
  int e4 = rec(uim1, vj, uim1, vjm1j);
  if (cur != e4)
    fail("StepMismatch", "transport chain does not reach the closing edge");
  const auto forced = forced_transport(g, e4);
  if (forced != c.at(e4))
    fail("StepMismatch", "forced transport disagrees with the derived "
                         "connection along " + g.edge_name(e4));
  int carried = rec(uim1, vj, u0, vj);
  int image = forced.at(carried);
  rep.steps.push_back(step(g, e4, carried, image));
  int excluded = g.vertex(lbl(u0, vjm1j));
  rep.contradiction = g.records[image].vertices[1] == excluded ||
                      g.records[image].vertices[0] == excluded;
  rep.conclusion =
      "the 3-face seeded at x_{" + lbl(u0, vj) +
      "} is forced to contain the excluded vertex x_{" + lbl(u0, vjm1j) + "}";
  return rep;
}

}  // namespace gkm
