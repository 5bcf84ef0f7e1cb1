#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gkm/errors.hpp"

namespace gkm {

// Integer character of a torus, written in a fixed basis of Hom(T^k, T^1).
using Weight = std::vector<long long>;

inline bool is_zero(const Weight& w) {
  for (long long c : w)
    if (c != 0) return false;
  return true;
}

inline Weight neg(const Weight& w) {
  Weight r(w.size());
  for (size_t i = 0; i < w.size(); ++i) r[i] = -w[i];
  return r;
}

inline Weight add(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Weight sub(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Weight scale(long long c, const Weight& w) {
  Weight r(w.size());
  for (size_t i = 0; i < w.size(); ++i) r[i] = c * w[i];
  return r;
}

// e_m in Z^k; indices m <= 0 denote the trivial character.
inline Weight basis_vector(int rank, int m) {
  Weight w(rank, 0);
  if (m >= 1) {
    if (m > rank) fail("InvalidParams", "basis index exceeds rank");
    w[m - 1] = 1;
  }
  return w;
}

// Canonical representative of {w, -w}: first nonzero coordinate positive.
inline Weight sign_canonical(const Weight& w) {
  for (long long c : w) {
    if (c > 0) return w;
    if (c < 0) return neg(w);
  }
  return w;
}

inline bool is_sign_canonical(const Weight& w) {
  for (long long c : w) {
    if (c > 0) return true;
    if (c < 0) return false;
  }
  return true;  // zero vector; callers reject it separately
}

// Q-linear dependence of two vectors (2x2 minors all vanish).
inline bool proportional(const Weight& a, const Weight& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] - a[j] * b[i] != 0) return false;
  return true;
}

// c with diff == c*d, if one exists (d nonzero).
inline std::optional<long long> integer_ratio(const Weight& diff, const Weight& d) {
  if (is_zero(diff)) return 0;
  size_t p = 0;
  while (p < d.size() && d[p] == 0) ++p;
  if (p == d.size()) return std::nullopt;
  if (diff[p] % d[p] != 0) return std::nullopt;
  long long c = diff[p] / d[p];
  for (size_t i = 0; i < d.size(); ++i)
    if (diff[i] != c * d[i]) return std::nullopt;
  return c;
}

// Rank over Q of the span of a list of integer vectors.
inline int lattice_rank(std::vector<Weight> rows) {
  int rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  // gcd-normalize rows to keep entries small during elimination
  auto normalize = [](Weight& r) {
    long long g = 0;
    for (long long c : r) g = std::gcd(g, c < 0 ? -c : c);
    if (g > 1)
      for (long long& c : r) c /= g;
  };
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows.size(); ++col) {
    size_t piv = row;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[row], rows[piv]);
    normalize(rows[row]);
    for (size_t r = row + 1; r < rows.size(); ++r) {
      while (rows[r][col] != 0) {
        long long a = rows[row][col], b = rows[r][col];
        long long q = b / a;
        for (size_t c = 0; c < cols; ++c) rows[r][c] -= q * rows[row][c];
        if (rows[r][col] != 0) std::swap(rows[row], rows[r]);
      }
      normalize(rows[r]);
    }
    ++row;
    ++rank;
  }
  return rank;
}

inline std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  s += ")";
  return s;
}

}  // namespace gkm
