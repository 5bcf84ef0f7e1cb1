#pragma once

#include <vector>

#include "gkm/intmat.hpp"

namespace gkm {

// polynomial in one variable, coefficient of t^m at index m
using Poly = std::vector<Int>;

Poly poly_add(Poly a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_one_plus_t_pow(int n);   // (1+t)^n, n >= 0
Poly poly_geometric(int n);        // 1 + t + ... + t^{n-1}
Int poly_eval_one(const Poly& p);
bool poly_palindromic(const Poly& p);

// E-polynomials in closed form
Poly hd_br(int i, int j);
Poly hd_r(int i, int j);

// the same polynomials via the blow-up recursions
Poly hd_br_recursive(int i, int j);
Poly hd_r_recursive(int i, int j);

// even Betti numbers b_0, b_2, ... (odd ones vanish)
std::vector<Int> betti_from_hd(const Poly& p);

}  // namespace gkm
