#include "gkm/intmat.hpp"

#include <algorithm>

#include "gkm/errors.hpp"

namespace gkm {

IntMat identity_mat(size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMat out(n, IntVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

IntVec mat_apply(const IntMat& a, const IntVec& v) {
  IntVec out(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

Int det(IntMat m) {
  size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1;
  Int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntMat row_echelon_z(IntMat rows) {
  if (rows.empty()) return rows;
  size_t cols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    // Euclid within column c below row r
    while (true) {
      size_t piv = r;
      for (size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 &&
            (rows[piv][c] == 0 || abs(rows[i][c]) < abs(rows[piv][c])))
          piv = i;
      if (rows[piv][c] == 0) break;
      std::swap(rows[r], rows[piv]);
      bool clean = true;
      for (size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Int q = rows[i][c] / rows[r][c];
        for (size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (size_t j = 0; j < cols; ++j) rows[r][j] = -rows[r][j];
    for (size_t i = 0; i < r; ++i) {
      Int q = rows[i][c] / rows[r][c];
      if (rows[i][c] < 0 && rows[i][c] % rows[r][c] != 0) q -= 1;
      if (q != 0)
        for (size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

bool in_row_span(const IntMat& echelon, IntVec v) {
  size_t cols = v.size();
  for (const IntVec& row : echelon) {
    size_t p = 0;
    while (p < cols && row[p] == 0) ++p;
    if (p == cols) continue;
    if (v[p] % row[p] != 0) {
      // partial reduction still needed for later pivots
      continue;
    }
    Int q = v[p] / row[p];
    if (q != 0)
      for (size_t j = 0; j < cols; ++j) v[j] -= q * row[j];
  }
  for (const Int& c : v)
    if (c != 0) return false;
  return true;
}

IntMat row_kernel_z(const IntMat& rows) {
  size_t n = rows.size();
  size_t cols = rows.empty() ? 0 : rows[0].size();
  // augment [rows | I] and echelonize; kernel rows are those with zero left part
  IntMat aug(n, IntVec(cols + n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = rows[i][j];
    aug[i][cols + i] = 1;
  }
  // echelon on the left block only, carrying the right block along
  size_t r = 0;
  for (size_t c = 0; c < cols && r < n; ++c) {
    while (true) {
      size_t piv = r;
      for (size_t i = r; i < n; ++i)
        if (aug[i][c] != 0 && (aug[piv][c] == 0 || abs(aug[i][c]) < abs(aug[piv][c])))
          piv = i;
      if (aug[piv][c] == 0) break;
      std::swap(aug[r], aug[piv]);
      bool clean = true;
      for (size_t i = r + 1; i < n; ++i) {
        if (aug[i][c] == 0) continue;
        Int q = aug[i][c] / aug[r][c];
        for (size_t j = 0; j < cols + n; ++j) aug[i][j] -= q * aug[r][j];
        if (aug[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (aug[r][c] != 0) ++r;
  }
  IntMat kernel;
  for (size_t i = r; i < n; ++i)
    kernel.push_back(IntVec(aug[i].begin() + cols, aug[i].end()));
  return row_echelon_z(kernel);
}

Smith smith_row_transforms(IntMat m) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  Smith s;
  s.U = identity_mat(rows);
  s.Uinv = identity_mat(rows);
  auto row_add = [&](size_t dst, size_t src, const Int& q) {
    for (size_t j = 0; j < cols; ++j) m[dst][j] -= q * m[src][j];
    for (size_t j = 0; j < rows; ++j) s.U[dst][j] -= q * s.U[src][j];
    for (size_t j = 0; j < rows; ++j) s.Uinv[j][src] += q * s.Uinv[j][dst];
  };
  auto row_swap = [&](size_t a, size_t b) {
    std::swap(m[a], m[b]);
    std::swap(s.U[a], s.U[b]);
    for (size_t j = 0; j < rows; ++j) std::swap(s.Uinv[j][a], s.Uinv[j][b]);
  };
  auto row_neg = [&](size_t a) {
    for (size_t j = 0; j < cols; ++j) m[a][j] = -m[a][j];
    for (size_t j = 0; j < rows; ++j) s.U[a][j] = -s.U[a][j];
    for (size_t j = 0; j < rows; ++j) s.Uinv[j][a] = -s.Uinv[j][a];
  };
  auto col_swap = [&](size_t a, size_t b) {
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
  };
  auto col_add = [&](size_t dst, size_t src, const Int& q) {
    for (size_t i = 0; i < rows; ++i) m[i][dst] -= q * m[i][src];
  };

  size_t t = 0;
  while (t < rows && t < cols) {
    // locate smallest nonzero entry in the remaining block
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 &&
            (!found || abs(m[i][j]) < abs(m[pi][pj]))) {
          pi = i; pj = j; found = true;
        }
    if (!found) break;
    if (pi != t) row_swap(t, pi);
    if (pj != t) col_swap(t, pj);
    bool again = false;
    for (size_t i = t + 1; i < rows; ++i) {
      if (m[i][t] == 0) continue;
      Int q = m[i][t] / m[t][t];
      row_add(i, t, q);
      if (m[i][t] != 0) again = true;
    }
    for (size_t j = t + 1; j < cols; ++j) {
      if (m[t][j] == 0) continue;
      Int q = m[t][j] / m[t][t];
      col_add(j, t, q);
      if (m[t][j] != 0) again = true;
    }
    if (again) continue;
    if (m[t][t] < 0) row_neg(t);
    s.divisors.push_back(m[t][t]);
    ++t;
  }
  return s;
}

bool surjective_over_z(const IntMat& m) {
  if (m.empty()) return true;
  Smith s = smith_row_transforms(m);
  if (s.divisors.size() != m.size()) return false;
  for (const Int& d : s.divisors)
    if (d != 1) return false;
  return true;
}

}  // namespace gkm
