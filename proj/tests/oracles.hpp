#pragma once

// Independent reference implementations that the tests check the library
// against. Everything here is written straight from first principles and
// deliberately shares no code with core/.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "gkm/hypergraph.hpp"
#include "gkm/intmat.hpp"
#include "gkm/weight.hpp"

namespace oracle {

// does b = s*a + c*e hold for some integer c (s = -1 allowed only for
// hyperedges, whose weights carry no preferred sign)?
inline bool admissible(const gkm::WeightHypergraph& g, int e, int a, int b) {
  using namespace gkm;
  if (g.records[a].dim != g.records[b].dim) return false;
  int u = g.origin(e), v = g.end(e);
  Weight wa = g.weight_from(a, u);
  Weight wb = g.weight_from(b, v);
  const Weight& we = g.records[e].weight;
  if (integer_ratio(sub(wb, wa), we)) return true;
  if (g.records[a].dim >= 2 && integer_ratio(add(wb, wa), we)) return true;
  return false;
}

// every bijection between the stars satisfying the congruence, by full
// enumeration; meant for stars of at most 6-7 records
inline std::vector<std::map<int, int>> all_transports(
    const gkm::WeightHypergraph& g, int e) {
  std::vector<int> src = g.star[g.origin(e)];
  std::vector<int> dst = g.star[g.end(e)];
  std::vector<std::map<int, int>> found;
  if (src.size() != dst.size()) return found;
  std::sort(dst.begin(), dst.end());
  do {
    bool ok = true;
    for (size_t i = 0; i < src.size() && ok; ++i)
      ok = admissible(g, e, src[i], dst[i]);
    if (ok) {
      std::map<int, int> m;
      for (size_t i = 0; i < src.size(); ++i) m[src[i]] = dst[i];
      found.push_back(std::move(m));
    }
  } while (std::next_permutation(dst.begin(), dst.end()));
  return found;
}

inline gkm::Int binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  gkm::Int r = 1;
  for (int m = 1; m <= k; ++m) r = r * (n - k + m) / m;
  return r;
}

// even Betti numbers of the projective-compactification family, i > j > 0
inline std::vector<gkm::Int> betti_br_formula(int i, int j) {
  std::vector<gkm::Int> b(i + j, 0);
  for (int k = 0; k < i + j; ++k) {
    for (int m = 0; m <= j - 1; ++m) b[k] += binom(i, k - m);
    b[k] += binom(i - j - 1, k - j);
  }
  return b;
}

// even Betti numbers of the rational-curve family, i, j > 0
inline std::vector<gkm::Int> betti_r_formula(int i, int j) {
  std::vector<gkm::Int> b(i + j, 0);
  int last = (i == j) ? std::min(i, j) - 1 : std::min(i, j);
  for (int k = 0; k < i + j; ++k)
    for (int m = 0; m <= last; ++m) b[k] += binom(i + j - 1 - 2 * m, k - m);
  return b;
}

}  // namespace oracle
