#include "gkm/iso.hpp"

#include <algorithm>
#include <set>

#include "gkm/errors.hpp"
#include "gkm/intmat.hpp"

namespace gkm {

namespace {

using Signature = std::vector<std::pair<int, Weight>>;

Signature star_signature(const WeightHypergraph& g, int v) {
  Signature s;
  for (int rec : g.star[v])
    s.emplace_back(g.records[rec].dim, g.weight_from(rec, v));
  std::sort(s.begin(), s.end());
  return s;
}

struct IsoSearch {
  const WeightHypergraph& g;
  const WeightHypergraph& h;
  std::map<std::vector<int>, int> h_hyper;  // sorted members -> record
  std::vector<int> assign;                  // g vertex -> h vertex or -1
  std::vector<bool> used;

  IsoSearch(const WeightHypergraph& a, const WeightHypergraph& b)
      : g(a), h(b), assign(a.num_vertices(), -1), used(b.num_vertices(), false) {
    for (size_t r = 0; r < h.records.size(); ++r)
      if (h.records[r].dim >= 2) h_hyper[h.records[r].vertices] = (int)r;
  }

  bool consistent(int v) const {
    for (int rec : g.star[v]) {
      const Hyperedge& e = g.records[rec];
      if (e.dim == 1) {
        int u = g.end(rec) == v ? g.origin(rec) : g.end(rec);
        if (assign[u] < 0) continue;
        int he = h.edge_between(assign[v], assign[u]);
        if (he < 0) return false;
        if (h.weight_from(he, assign[v]) != g.weight_from(rec, v)) return false;
      } else {
        std::vector<int> members;
        bool all = true;
        for (int m : e.vertices) {
          if (assign[m] < 0) { all = false; break; }
          members.push_back(assign[m]);
        }
        if (!all) continue;
        std::sort(members.begin(), members.end());
        auto it = h_hyper.find(members);
        if (it == h_hyper.end()) return false;
        const Hyperedge& f = h.records[it->second];
        if (f.dim != e.dim || f.weight != e.weight) return false;
      }
    }
    return true;
  }

  bool run(size_t v, const std::vector<std::vector<int>>& candidates) {
    if (v == g.num_vertices()) return true;
    for (int w : candidates[v]) {
      if (used[w]) continue;
      assign[v] = w;
      used[w] = true;
      if (consistent((int)v) && run(v + 1, candidates)) return true;
      used[w] = false;
      assign[v] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::map<std::string, std::string>> exact_isomorphism(
    const WeightHypergraph& g, const WeightHypergraph& h) {
  if (g.rank != h.rank || g.valence != h.valence ||
      g.num_vertices() != h.num_vertices() ||
      g.records.size() != h.records.size())
    return std::nullopt;
  std::vector<Signature> hsig(h.num_vertices());
  for (size_t v = 0; v < h.num_vertices(); ++v)
    hsig[v] = star_signature(h, (int)v);
  std::vector<std::vector<int>> candidates(g.num_vertices());
  for (size_t v = 0; v < g.num_vertices(); ++v) {
    Signature s = star_signature(g, (int)v);
    for (size_t w = 0; w < h.num_vertices(); ++w)
      if (hsig[w] == s) candidates[v].push_back((int)w);
    if (candidates[v].empty()) return std::nullopt;
  }
  IsoSearch search(g, h);
  if (!search.run(0, candidates)) return std::nullopt;
  std::map<std::string, std::string> out;
  for (size_t v = 0; v < g.num_vertices(); ++v)
    out[g.label((int)v)] = h.label(search.assign[v]);
  return out;
}

namespace {

// integer inverse of a +-1 determinant matrix via the adjugate
std::optional<std::vector<std::vector<long long>>> unimodular_inverse(
    const std::vector<Weight>& cols) {
  size_t n = cols.size();
  IntMat m(n, IntVec(n, 0));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) m[i][j] = cols[j][i];
  Int d = det(m);
  if (d != 1 && d != -1) return std::nullopt;
  std::vector<std::vector<long long>> inv(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      IntMat minor;
      for (size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        IntVec row;
        for (size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      Int cof = det(minor);
      if ((i + j) % 2) cof = -cof;
      inv[i][j] = (long long)(cof / d);
    }
  return inv;
}

}  // namespace

std::optional<RestrictionMatch> restriction_isomorphism(
    const WeightHypergraph& g, const WeightHypergraph& h) {
  int n = g.rank, r = h.rank;
  if (r > n) return std::nullopt;
  // a vertex of g whose star weights form a lattice basis pins f down
  int base = -1;
  std::vector<Weight> cbasis;
  std::optional<std::vector<std::vector<long long>>> cinv;
  for (size_t v = 0; v < g.num_vertices() && base < 0; ++v) {
    std::vector<Weight> ws = g.weights_at((int)v);
    if ((int)ws.size() != n) continue;
    cinv = unimodular_inverse(ws);
    if (cinv) {
      base = (int)v;
      cbasis = ws;
    }
  }
  if (base < 0)
    fail("InvalidParams", "no vertex star is a lattice basis");

  std::set<std::vector<std::vector<long long>>> seen;
  for (size_t v0 = 0; v0 < h.num_vertices(); ++v0) {
    std::vector<Weight> pool = h.weights_at((int)v0);
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    std::vector<Weight> options;
    for (const Weight& w : pool) {
      options.push_back(w);
      Weight m = w;
      for (long long& c : m) c = -c;
      options.push_back(m);
    }
    std::vector<int> pick(n, 0);
    while (true) {
      // f sends the m-th basis weight at `base` to options[pick[m]]
      std::vector<std::vector<long long>> f(r, std::vector<long long>(n, 0));
      for (int row = 0; row < r; ++row)
        for (int col = 0; col < n; ++col)
          for (int t = 0; t < n; ++t)
            f[row][col] += options[pick[t]][row] * (*cinv)[t][col];
      if (seen.insert(f).second) {
        CocharacterMap cm{f};
        if (cm.surjective()) {
          try {
            WeightHypergraph cut = restrict_action(g, cm);
            auto vm = exact_isomorphism(cut, h);
            if (vm) return RestrictionMatch{cm, *vm};
          } catch (const Error&) {
            // non-isolated fixed points for this subtorus; keep looking
          }
        }
      }
      int p = 0;
      while (p < n && pick[p] + 1 == (int)options.size()) pick[p++] = 0;
      if (p == n) break;
      ++pick[p];
    }
  }
  return std::nullopt;
}

}  // namespace gkm
