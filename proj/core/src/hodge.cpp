#include "gkm/hodge.hpp"

#include <algorithm>

#include "gkm/errors.hpp"

namespace gkm {

Poly poly_add(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly poly_one_plus_t_pow(int n) {
  Poly out{1};
  Poly f{1, 1};
  for (int i = 0; i < n; ++i) out = poly_mul(out, f);
  return out;
}

Poly poly_geometric(int n) { return Poly(std::max(n, 0), 1); }

Int poly_eval_one(const Poly& p) {
  Int s = 0;
  for (const Int& c : p) s += c;
  return s;
}

bool poly_palindromic(const Poly& p) {
  size_t n = p.size();
  for (size_t i = 0; i < n; ++i)
    if (p[i] != p[n - 1 - i]) return false;
  return true;
}

static Poly shift_t(Poly p, int m) {
  p.insert(p.begin(), m, Int(0));
  return p;
}

Poly hd_br(int i, int j) {
  if (i < 0 || j < 0 || (i == 0 && j == 0))
    fail("InvalidParams", "blown-up tower needs i + j > 0 and i, j >= 0");
  if (j == 0) return poly_one_plus_t_pow(i - 1);
  Poly p = poly_mul(poly_one_plus_t_pow(i), poly_geometric(j));
  if (i > j) p = poly_add(p, shift_t(poly_one_plus_t_pow(i - j - 1), j));
  return p;
}

Poly hd_r(int i, int j) {
  if (i < 0 || j < 0) fail("InvalidParams", "indices must be >= 0");
  if (i == 0 && j == 0) return {};
  if (i == 0 || j == 0) return poly_one_plus_t_pow(i + j - 1);
  int mn = std::min(i, j);
  int last = i == j ? mn - 1 : mn;
  Poly p;
  for (int m = 0; m <= last; ++m)
    p = poly_add(p, shift_t(poly_one_plus_t_pow(i + j - 1 - 2 * m), m));
  return p;
}

Poly hd_br_recursive(int i, int j) {
  if (i < 0 || j < 0 || (i == 0 && j == 0))
    fail("InvalidParams", "blown-up tower needs i + j > 0 and i, j >= 0");
  if (j == 0) return poly_one_plus_t_pow(i - 1);
  if (i == 0) return poly_geometric(j);
  Poly base = poly_mul(poly_one_plus_t_pow(i - 1), poly_geometric(j + 1));
  // at (1,1) the blown-down center is empty and contributes nothing
  if (i == 1 && j == 1) return base;
  return poly_add(base, shift_t(hd_br_recursive(i - 1, j - 1), 1));
}

Poly hd_r_recursive(int i, int j) {
  if (i < 0 || j < 0) fail("InvalidParams", "indices must be >= 0");
  if (i == 0 && j == 0) return {};
  if (i == 0 || j == 0) return poly_one_plus_t_pow(i + j - 1);
  return poly_add(poly_one_plus_t_pow(i + j - 1),
                  shift_t(hd_r_recursive(i - 1, j - 1), 1));
}

std::vector<Int> betti_from_hd(const Poly& p) {
  return std::vector<Int>(p.begin(), p.end());
}

}  // namespace gkm
