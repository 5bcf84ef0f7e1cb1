#pragma once

#include "gkm/hypergraph.hpp"

namespace gkm {

// Lattice map Z^k -> Z^r induced by a subtorus inclusion T^r -> T^k,
// applied to weights coordinatewise; rows() x cols() integer matrix.
struct CocharacterMap {
  std::vector<std::vector<long long>> m;  // r rows, k cols
  int rows() const { return (int)m.size(); }
  int cols() const { return m.empty() ? 0 : (int)m[0].size(); }
  Weight apply(const Weight& w) const;
  bool surjective() const;  // full row rank with unit elementary divisors
};

// Weight hypergraph of the same space under a subtorus with isolated fixed
// points: weights are pushed through f and star elements sharing a direction
// up to sign are merged into hyperedges (components grown transitively).
// Throws NonIsolatedFixedPoints when some image weight vanishes, and
// InvalidParams when f is not surjective or has the wrong source rank.
WeightHypergraph restrict_action(const WeightHypergraph& g,
                                 const CocharacterMap& f);

}  // namespace gkm
