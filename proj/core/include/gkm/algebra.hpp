#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkm/intmat.hpp"

namespace gkm {

// Finite free graded commutative Z-algebra concentrated in even degrees;
// degrees are stored halved. Elements are coordinate vectors on the basis.
struct GradedZAlgebra {
  std::vector<std::string> names;
  std::vector<int> degrees;            // halved degree of each basis element
  std::vector<std::vector<std::vector<std::pair<int, Int>>>> mult;
  int unit_index = 0;

  // monomial presentation when the ring carries distinguished generators:
  // monomial[i] lists generator indices whose product is basis element i
  std::vector<std::string> generator_names;
  std::vector<std::vector<int>> monomial;

  size_t rank() const { return names.size(); }
  IntVec zero() const { return IntVec(rank(), 0); }
  IntVec unit() const;
  IntVec basis(int i) const;
  IntVec mul(const IntVec& a, const IntVec& b) const;
  IntVec mul_basis(int i, int j) const;
  int max_degree() const;
  std::vector<int> graded_ranks() const;
  std::vector<int> degree_indices(int d) const;

  // unit, commutativity, grading; associativity checked on all triples up to
  // rank 256, on 1000 seeded random triples beyond
  void check() const;
};

GradedZAlgebra ring_projective(int n, const std::string& var = "y");
GradedZAlgebra ring_bf(int n, const std::string& var = "x");
GradedZAlgebra ring_tensor(const GradedZAlgebra& a, const GradedZAlgebra& b);

IntVec gen_element(const GradedZAlgebra& a, const std::string& gen);
std::string elem_str(const GradedZAlgebra& a, const IntVec& v);

// Homogeneous ideal, stored as echelonized Z-bases per halved degree plus a
// greedily chosen small generating set.
struct IdealZ {
  std::map<int, IntMat> span_by_degree;
  std::vector<IntVec> generators;
};

IdealZ annihilator(const GradedZAlgebra& a, const IntVec& x);
IdealZ ideal_from_generators(const GradedZAlgebra& a,
                             const std::vector<IntVec>& gens);
bool ideal_contains(const GradedZAlgebra& a, const IdealZ& i, const IntVec& v);
bool ideal_equal(const GradedZAlgebra& a, const IdealZ& i, const IdealZ& j);

struct QuotientRing {
  GradedZAlgebra ring;
  std::vector<IntVec> reps;  // ambient representative of each basis element

  IntVec reduce(const IntVec& ambient_vec) const;

  struct DegBlock {
    std::vector<int> amb_idx;
    IntMat u;           // row transform diagonalizing the relation block
    int nrel = 0;       // leading coordinates killed in the quotient
    std::vector<int> out_idx;  // quotient basis indices for this degree
  };
  std::map<int, DegBlock> blocks;
  const GradedZAlgebra* ambient = nullptr;
};

// Free quotient by a homogeneous ideal; TorsionQuotient when not free.
QuotientRing quotient(const GradedZAlgebra& a, const IdealZ& i);

// Linear map sending each basis monomial of src to the product of the given
// generator images in dst; rows indexed by src basis.
IntMat monomial_map_matrix(const GradedZAlgebra& src, const GradedZAlgebra& dst,
                           const std::vector<IntVec>& gen_images);

struct BlowupData {
  GradedZAlgebra ambient;
  GradedZAlgebra center;
  IntMat restriction;          // rows: ambient basis -> center coordinates
  std::vector<IntVec> chern;   // c_1..c_{k-1} of the normal bundle, in center
  IntVec omega;                // class of the center in the ambient, degree k
  int codim = 2;
};

// Cohomology of the blow-up: ambient part plus center part times v^1..v^{k-1},
// multiplication via the restriction and the defining relation of v^k.
GradedZAlgebra blowup_ring(const BlowupData& d);

// The rational-curve threefold as a blow-up of a tower times a tower.
BlowupData r22_blowup_preset();

}  // namespace gkm
