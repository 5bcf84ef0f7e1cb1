#include "gkm/obstruction.hpp"

#include <algorithm>
#include <map>

#include "gkm/errors.hpp"

namespace gkm {

namespace {

struct TransportCache {
  const WeightHypergraph& g;
  std::map<int, std::map<int, int>> memo;
  explicit TransportCache(const WeightHypergraph& gg) : g(gg) {}
  const std::map<int, int>& at(int rec) {
    auto it = memo.find(rec);
    if (it == memo.end()) it = memo.emplace(rec, forced_transport(g, rec)).first;
    return it->second;
  }
};

std::vector<char> independent_vertices(const WeightHypergraph& g) {
  std::vector<char> ok(g.num_vertices(), 1);
  for (size_t v = 0; v < g.num_vertices(); ++v) {
    std::vector<Weight> ws = g.weights_at((int)v);
    for (size_t a = 0; a < ws.size() && ok[v]; ++a)
      for (size_t b = a + 1; b < ws.size(); ++b)
        if (proportional(ws[a], ws[b])) {
          ok[v] = 0;
          break;
        }
  }
  return ok;
}

}  // namespace

bool safe_edge(const WeightHypergraph& g, int edge_rec) {
  const Hyperedge& e = g.records[edge_rec];
  if (e.dim != 1) return false;
  std::vector<char> indep = independent_vertices(g);
  return indep[e.vertices[0]] && indep[e.vertices[1]] &&
         is_definite_at(g, edge_rec);
}

std::optional<ObstructionWitness> cycle_obstruction(const WeightHypergraph& g,
                                                    int max_len) {
  std::vector<char> indep = independent_vertices(g);
  std::vector<char> safe(g.records.size(), 0);
  for (size_t rec = 0; rec < g.records.size(); ++rec) {
    const Hyperedge& h = g.records[rec];
    if (h.dim != 1 || !indep[h.vertices[0]] || !indep[h.vertices[1]]) continue;
    safe[rec] = is_definite_at(g, (int)rec);
  }
  TransportCache cache(g);

  // invariance of the cycle: along each cycle edge, the two incident cycle
  // edges at its origin must map onto cycle edges
  auto invariant = [&](const EdgePath& cyc) {
    std::set<int> edges;
    for (int e : cyc) {
      edges.insert(e);
      edges.insert(g.reverse(e));
    }
    for (int e : cyc) {
      const auto& m = cache.at(e);
      for (int x : edges)
        if (g.origin(x) == g.origin(e) && !edges.count(m.at(x))) return false;
    }
    return true;
  };

  auto examine = [&](const EdgePath& cyc,
                     int base) -> std::optional<ObstructionWitness> {
    if (!invariant(cyc)) return std::nullopt;
    std::set<int> edges;
    for (int e : cyc) {
      edges.insert(e);
      edges.insert(g.reverse(e));
    }
    for (int x : g.star[base]) {
      if (edges.count(x)) continue;
      int cur = x;
      ObstructionWitness w;
      for (int e : cyc) {
        int nxt = cache.at(e).at(cur);
        w.transcript.push_back({g.edge_name(e), g.edge_name(cur), g.edge_name(nxt)});
        cur = nxt;
      }
      if (cur != x) {
        w.kind = "cycle";
        w.base_vertex = g.label(base);
        for (int e : cyc) w.path.push_back(g.edge_name(e));
        w.external_edge = g.edge_name(x);
        w.external_image = g.edge_name(cur);
        return w;
      }
    }
    return std::nullopt;
  };

  for (int base = 0; base < (int)g.num_vertices(); ++base) {
    EdgePath path;
    std::vector<char> visited(g.num_vertices(), 0);
    visited[base] = 1;
    std::optional<ObstructionWitness> found;
    auto dfs = [&](auto&& self, int at) -> bool {
      for (int e : g.star[at]) {
        if (!safe[e]) continue;
        int to = g.end(e);
        if (to == base && (int)path.size() >= 2) {
          path.push_back(e);
          found = examine(path, base);
          path.pop_back();
          if (found) return true;
        }
        if ((int)path.size() + 1 >= max_len) continue;
        if (visited[to]) continue;
        visited[to] = 1;
        path.push_back(e);
        if (self(self, to)) return true;
        path.pop_back();
        visited[to] = 0;
      }
      return false;
    };
    if (dfs(dfs, base) && found) return found;
  }
  return std::nullopt;
}

std::optional<ObstructionWitness> face_exclusion_obstruction(
    const WeightHypergraph& g, int r, int max_growth) {
  std::vector<char> indep = independent_vertices(g);
  std::vector<char> safe(g.records.size(), 0);
  for (size_t rec = 0; rec < g.records.size(); ++rec) {
    const Hyperedge& h = g.records[rec];
    if (h.dim != 1 || !indep[h.vertices[0]] || !indep[h.vertices[1]]) continue;
    safe[rec] = is_definite_at(g, (int)rec);
  }
  TransportCache cache(g);

  for (int base = 0; base < (int)g.num_vertices(); ++base) {
    std::vector<int> star_edges;
    for (int x : g.star[base])
      if (g.records[x].dim == 1) star_edges.push_back(x);
    int n = (int)star_edges.size();
    if (n <= r) continue;  // no excluded endpoints, nothing to contradict

    std::vector<int> pick(r);
    auto run_seed = [&](const std::vector<int>& seed)
        -> std::optional<ObstructionWitness> {
      std::set<int> excluded;
      for (int x : star_edges)
        if (std::find(seed.begin(), seed.end(), x) == seed.end())
          excluded.insert(g.end(x));
      std::set<int> verts = {base};
      std::set<int> edges;
      ObstructionWitness w;
      w.kind = "face-exclusion";
      w.base_vertex = g.label(base);
      int hit_vertex = -1;
      std::string hit_edge;
      auto add_edge = [&](int rec, const std::string& via, int via_src) {
        if (edges.count(rec)) return false;
        edges.insert(rec);
        edges.insert(g.reverse(rec));
        for (int v : {g.origin(rec), g.end(rec)})
          if (!verts.count(v)) {
            verts.insert(v);
            if (hit_vertex < 0 && excluded.count(v)) {
              hit_vertex = v;
              hit_edge = g.edge_name(rec);
            }
          }
        if (!via.empty())
          w.transcript.push_back({via, via_src >= 0 ? g.edge_name(via_src) : "",
                                  g.edge_name(rec)});
        return true;
      };
      for (int s : seed) {
        w.seed_edges.push_back(g.edge_name(s));
        add_edge(s, "", -1);
      }
      int additions = 0;
      bool grew = true;
      while (grew && additions < max_growth && hit_vertex < 0) {
        grew = false;
        // chords between captured vertices
        for (int a : std::vector<int>(verts.begin(), verts.end())) {
          for (int b : std::vector<int>(verts.begin(), verts.end())) {
            int e = g.edge_between(a, b);
            if (e >= 0 && !edges.count(e)) {
              add_edge(e, "chord", -1);
              ++additions;
              grew = true;
            }
          }
          if (hit_vertex >= 0) break;
        }
        if (hit_vertex >= 0) break;
        // transports of face edges along safe face edges
        for (int e : std::vector<int>(edges.begin(), edges.end())) {
          if (!safe[e]) continue;
          const auto& m = cache.at(e);
          for (int x : std::vector<int>(edges.begin(), edges.end())) {
            if (g.origin(x) != g.origin(e)) continue;
            int y = m.at(x);
            if (!edges.count(y)) {
              add_edge(y, g.edge_name(e), x);
              ++additions;
              grew = true;
              if (hit_vertex >= 0) break;
            }
          }
          if (hit_vertex >= 0) break;
        }
      }
      if (hit_vertex >= 0) {
        w.excluded_vertex = g.label(hit_vertex);
        w.reaching_edge = hit_edge;
        return w;
      }
      return std::nullopt;
    };

    // lexicographic r-subsets of the star edges
    std::vector<int> idx(r);
    for (int t = 0; t < r; ++t) idx[t] = t;
    while (true) {
      std::vector<int> seed;
      for (int t : idx) seed.push_back(star_edges[t]);
      if (auto w = run_seed(seed)) return w;
      int t = r - 1;
      while (t >= 0 && idx[t] == n - r + t) --t;
      if (t < 0) break;
      ++idx[t];
      for (int s = t + 1; s < r; ++s) idx[s] = idx[s - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace gkm
