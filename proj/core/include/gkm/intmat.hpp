#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace gkm {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row major

IntMat identity_mat(size_t n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_apply(const IntMat& a, const IntVec& v);
Int det(IntMat m);

// Row echelon basis over Z of the row span (row HNF, deterministic).
// Returns reduced rows, pivots ascending, zero rows dropped.
IntMat row_echelon_z(IntMat rows);

// Membership of v in the Z-span of echelonized rows (as from row_echelon_z).
bool in_row_span(const IntMat& echelon, IntVec v);

// Basis of { x : x * rows = 0 } ... kernel of the linear map sending the
// standard basis to the given rows (i.e. integer relations between rows).
IntMat row_kernel_z(const IntMat& rows);

struct Smith {
  std::vector<Int> divisors;  // nonzero elementary divisors
  IntMat U, Uinv;             // U * M * V = D; Uinv columns give a basis
                              // adapted to the row space decomposition
};

// Smith normal form keeping only the row transforms.
Smith smith_row_transforms(IntMat m);

// All elementary divisors equal 1 and count == rank bound.
bool surjective_over_z(const IntMat& m);

}  // namespace gkm
