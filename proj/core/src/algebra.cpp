#include "gkm/algebra.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "gkm/errors.hpp"

namespace gkm {

namespace {

IntVec vadd(IntVec a, const IntVec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

IntVec vscale(IntVec a, const Int& c) {
  for (Int& x : a) x *= c;
  return a;
}

bool vzero(const IntVec& a) {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

int homo_degree(const GradedZAlgebra& a, const IntVec& v) {
  int d = -1;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (d == -1) d = a.degrees[i];
    else if (d != a.degrees[i])
      fail("InvalidParams", "element is not homogeneous");
  }
  return d;  // -1 for zero
}

// split into homogeneous components, keyed by halved degree
std::map<int, IntVec> split_degrees(const GradedZAlgebra& a, const IntVec& v) {
  std::map<int, IntVec> out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    auto it = out.find(a.degrees[i]);
    if (it == out.end()) it = out.emplace(a.degrees[i], a.zero()).first;
    it->second[i] = v[i];
  }
  return out;
}

GradedZAlgebra from_basis_products(
    std::vector<std::string> names, std::vector<int> degrees,
    const std::function<IntVec(int, int)>& prod) {
  GradedZAlgebra a;
  a.names = std::move(names);
  a.degrees = std::move(degrees);
  size_t n = a.rank();
  a.mult.assign(n, std::vector<std::vector<std::pair<int, Int>>>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      IntVec p = prod((int)i, (int)j);
      std::vector<std::pair<int, Int>> sparse;
      for (size_t t = 0; t < n; ++t)
        if (p[t] != 0) sparse.emplace_back((int)t, p[t]);
      a.mult[i][j] = sparse;
      a.mult[j][i] = std::move(sparse);
    }
  return a;
}

}  // namespace

IntVec GradedZAlgebra::unit() const { return basis(unit_index); }

IntVec GradedZAlgebra::basis(int i) const {
  IntVec v = zero();
  v[i] = 1;
  return v;
}

IntVec GradedZAlgebra::mul_basis(int i, int j) const {
  IntVec out = zero();
  for (const auto& [t, c] : mult[i][j]) out[t] += c;
  return out;
}

IntVec GradedZAlgebra::mul(const IntVec& a, const IntVec& b) const {
  IntVec out = zero();
  for (size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < rank(); ++j) {
      if (b[j] == 0) continue;
      Int c = a[i] * b[j];
      for (const auto& [t, s] : mult[i][j]) out[t] += c * s;
    }
  }
  return out;
}

int GradedZAlgebra::max_degree() const {
  int d = 0;
  for (int x : degrees) d = std::max(d, x);
  return d;
}

std::vector<int> GradedZAlgebra::graded_ranks() const {
  std::vector<int> out(max_degree() + 1, 0);
  for (int x : degrees) ++out[x];
  return out;
}

std::vector<int> GradedZAlgebra::degree_indices(int d) const {
  std::vector<int> out;
  for (size_t i = 0; i < rank(); ++i)
    if (degrees[i] == d) out.push_back((int)i);
  return out;
}

void GradedZAlgebra::check() const {
  size_t n = rank();
  if (n == 0 || mult.size() != n) fail("Internal", "malformed ring table");
  if (degrees[unit_index] != 0) fail("Internal", "unit has positive degree");
  for (size_t i = 0; i < n; ++i) {
    if (mul_basis(unit_index, (int)i) != basis((int)i))
      fail("Internal", "unit axiom fails at " + names[i]);
    for (size_t j = 0; j < n; ++j) {
      if (mult[i][j] != mult[j][i])
        fail("Internal", "product not commutative");
      for (const auto& [t, c] : mult[i][j])
        if (degrees[t] != degrees[i] + degrees[j])
          fail("Internal", "product not graded at " + names[i] + "*" + names[j]);
    }
  }
  auto assoc = [&](int i, int j, int k) {
    IntVec lhs = mul(mul_basis(i, j), basis(k));
    IntVec rhs = mul(basis(i), mul_basis(j, k));
    if (lhs != rhs)
      fail("Internal", "product not associative on (" + names[i] + "," +
                           names[j] + "," + names[k] + ")");
  };
  if (n <= 256) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) assoc((int)i, (int)j, (int)k);
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, (int)n - 1);
    for (int s = 0; s < 1000; ++s) assoc(pick(rng), pick(rng), pick(rng));
  }
}

GradedZAlgebra ring_projective(int n, const std::string& var) {
  if (n < 0) fail("InvalidParams", "projective space dimension must be >= 0");
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (int t = 0; t <= n; ++t) {
    names.push_back(t == 0 ? "1" : t == 1 ? var : var + "^" + std::to_string(t));
    degrees.push_back(t);
  }
  GradedZAlgebra a = from_basis_products(
      std::move(names), std::move(degrees), [n](int i, int j) {
        IntVec v(n + 1, 0);
        if (i + j <= n) v[i + j] = 1;
        return v;
      });
  a.generator_names = {var};
  a.monomial.resize(n + 1);
  for (int t = 0; t <= n; ++t) a.monomial[t].assign(t, 0);
  a.check();
  return a;
}

GradedZAlgebra ring_bf(int n, const std::string& var) {
  if (n < 0) fail("InvalidParams", "tower height must be >= 0");
  if (n > 20) fail("InvalidParams", "tower height too large");
  int sz = 1 << n;
  auto name_of = [&](int mask) {
    if (mask == 0) return std::string("1");
    std::string s;
    for (int q = 1; q <= n; ++q)
      if (mask & (1 << (q - 1))) {
        if (!s.empty()) s += "*";
        s += var + std::to_string(q);
      }
    return s;
  };
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (int m = 0; m < sz; ++m) {
    names.push_back(name_of(m));
    degrees.push_back(__builtin_popcount((unsigned)m));
  }
  // normal form under x_q^2 = x_q x_{q-1} (and x_1^2 = 0): rewrite the
  // largest repeated index until the monomial is squarefree or dies
  auto prod = [n, sz](int mi, int mj) {
    std::vector<int> mult(n + 1, 0);
    for (int q = 1; q <= n; ++q) {
      if (mi & (1 << (q - 1))) ++mult[q];
      if (mj & (1 << (q - 1))) ++mult[q];
    }
    while (true) {
      int q = 0;
      for (int t = n; t >= 1; --t)
        if (mult[t] >= 2) { q = t; break; }
      if (q == 0) break;
      if (q == 1) return IntVec(sz, 0);
      --mult[q];
      ++mult[q - 1];
    }
    int mask = 0;
    for (int q = 1; q <= n; ++q)
      if (mult[q]) mask |= 1 << (q - 1);
    IntVec v(sz, 0);
    v[mask] = 1;
    return v;
  };
  GradedZAlgebra a = from_basis_products(std::move(names), std::move(degrees), prod);
  for (int q = 1; q <= n; ++q) a.generator_names.push_back(var + std::to_string(q));
  a.monomial.resize(sz);
  for (int m = 0; m < sz; ++m)
    for (int q = 1; q <= n; ++q)
      if (m & (1 << (q - 1))) a.monomial[m].push_back(q - 1);
  a.check();
  return a;
}

GradedZAlgebra ring_tensor(const GradedZAlgebra& a, const GradedZAlgebra& b) {
  size_t ra = a.rank(), rb = b.rank();
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (size_t i = 0; i < ra; ++i)
    for (size_t j = 0; j < rb; ++j) {
      std::string n = a.names[i] == "1"   ? b.names[j]
                      : b.names[j] == "1" ? a.names[i]
                                          : a.names[i] + "*" + b.names[j];
      names.push_back(n);
      degrees.push_back(a.degrees[i] + b.degrees[j]);
    }
  auto prod = [&a, &b, rb](int p, int q) {
    int i1 = p / (int)rb, j1 = p % (int)rb;
    int i2 = q / (int)rb, j2 = q % (int)rb;
    IntVec pa = a.mul_basis(i1, i2);
    IntVec pb = b.mul_basis(j1, j2);
    IntVec v(a.rank() * rb, 0);
    for (size_t i = 0; i < pa.size(); ++i) {
      if (pa[i] == 0) continue;
      for (size_t j = 0; j < pb.size(); ++j)
        if (pb[j] != 0) v[i * rb + j] += pa[i] * pb[j];
    }
    return v;
  };
  GradedZAlgebra t = from_basis_products(std::move(names), std::move(degrees), prod);
  t.unit_index = a.unit_index * (int)rb + b.unit_index;
  t.generator_names = a.generator_names;
  for (const std::string& g : b.generator_names) t.generator_names.push_back(g);
  t.monomial.resize(ra * rb);
  if (!a.monomial.empty() && !b.monomial.empty()) {
    for (size_t i = 0; i < ra; ++i)
      for (size_t j = 0; j < rb; ++j) {
        std::vector<int> m = a.monomial[i];
        for (int g : b.monomial[j]) m.push_back(g + (int)a.generator_names.size());
        t.monomial[i * rb + j] = std::move(m);
      }
  }
  t.check();
  return t;
}

IntVec gen_element(const GradedZAlgebra& a, const std::string& gen) {
  int gi = -1;
  for (size_t t = 0; t < a.generator_names.size(); ++t)
    if (a.generator_names[t] == gen) gi = (int)t;
  if (gi >= 0)
    for (size_t i = 0; i < a.rank(); ++i)
      if (a.monomial[i] == std::vector<int>{gi}) return a.basis((int)i);
  // rings without a recorded monomial basis still expose named classes
  for (size_t i = 0; i < a.rank(); ++i)
    if (a.names[i] == gen) return a.basis((int)i);
  fail("InvalidParams", "unknown generator " + gen);
}

std::string elem_str(const GradedZAlgebra& a, const IntVec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Int c = v[i];
    if (s.empty()) {
      if (c < 0) { s += "-"; c = -c; }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (c != 1 || a.names[i] == "1") {
      s += c.str();
      if (a.names[i] != "1") s += "*";
    }
    if (a.names[i] != "1") s += a.names[i];
  }
  return s.empty() ? "0" : s;
}

IdealZ annihilator(const GradedZAlgebra& a, const IntVec& x) {
  int dx = homo_degree(a, x);
  if (dx < 0) fail("InvalidParams", "annihilator of zero is the whole ring");
  IdealZ out;
  for (int d = 0; d <= a.max_degree(); ++d) {
    std::vector<int> dom = a.degree_indices(d);
    if (dom.empty()) continue;
    std::vector<int> img = a.degree_indices(d + dx);
    IntMat m(dom.size(), IntVec(img.size(), 0));
    for (size_t r = 0; r < dom.size(); ++r) {
      IntVec p = a.mul(x, a.basis(dom[r]));
      for (size_t c = 0; c < img.size(); ++c) m[r][c] = p[img[c]];
    }
    IntMat ker = row_kernel_z(m);
    if (ker.empty()) continue;
    IntMat rows;
    for (const IntVec& krow : ker) {
      IntVec full = a.zero();
      for (size_t r = 0; r < dom.size(); ++r) full[dom[r]] = krow[r];
      rows.push_back(full);
    }
    out.span_by_degree[d] = row_echelon_z(rows);
  }
  // greedy small generating set, lowest degrees first
  std::vector<IntVec> gens;
  IdealZ sofar;
  for (const auto& [d, rows] : out.span_by_degree)
    for (const IntVec& r : rows)
      if (!ideal_contains(a, sofar, r)) {
        gens.push_back(r);
        sofar = ideal_from_generators(a, gens);
      }
  out.generators = std::move(gens);
  return out;
}

IdealZ ideal_from_generators(const GradedZAlgebra& a,
                             const std::vector<IntVec>& gens) {
  std::map<int, IntMat> buckets;
  for (const IntVec& g : gens) {
    int dg = homo_degree(a, g);
    if (dg < 0) continue;
    for (size_t m = 0; m < a.rank(); ++m) {
      IntVec v = a.mul(g, a.basis((int)m));
      if (vzero(v)) continue;
      buckets[dg + a.degrees[m]].push_back(std::move(v));
    }
  }
  IdealZ out;
  for (auto& [d, rows] : buckets) {
    IntMat e = row_echelon_z(std::move(rows));
    if (!e.empty()) out.span_by_degree[d] = std::move(e);
  }
  out.generators = gens;
  return out;
}

bool ideal_contains(const GradedZAlgebra& a, const IdealZ& i, const IntVec& v) {
  for (const auto& [d, comp] : split_degrees(a, v)) {
    auto it = i.span_by_degree.find(d);
    if (it == i.span_by_degree.end()) return false;
    if (!in_row_span(it->second, comp)) return false;
  }
  return true;
}

bool ideal_equal(const GradedZAlgebra& a, const IdealZ& i, const IdealZ& j) {
  for (const auto& [d, rows] : i.span_by_degree)
    for (const IntVec& r : rows)
      if (!ideal_contains(a, j, r)) return false;
  for (const auto& [d, rows] : j.span_by_degree)
    for (const IntVec& r : rows)
      if (!ideal_contains(a, i, r)) return false;
  return true;
}

IntVec QuotientRing::reduce(const IntVec& ambient_vec) const {
  IntVec out(ring.rank(), 0);
  for (const auto& [d, block] : blocks) {
    size_t m = block.amb_idx.size();
    IntVec vb(m, 0);
    bool any = false;
    for (size_t t = 0; t < m; ++t) {
      vb[t] = ambient_vec[block.amb_idx[t]];
      if (vb[t] != 0) any = true;
    }
    if (!any) continue;
    IntVec w = mat_apply(block.u, vb);
    for (size_t t = block.nrel; t < m; ++t)
      out[block.out_idx[t - block.nrel]] = w[t];
  }
  return out;
}

QuotientRing quotient(const GradedZAlgebra& a, const IdealZ& ideal) {
  QuotientRing q;
  q.ambient = &a;
  for (int d = 0; d <= a.max_degree(); ++d) {
    std::vector<int> idx = a.degree_indices(d);
    if (idx.empty()) continue;
    size_t m = idx.size();
    QuotientRing::DegBlock block;
    block.amb_idx = idx;
    IntMat rel;
    auto it = ideal.span_by_degree.find(d);
    if (it != ideal.span_by_degree.end())
      for (const IntVec& row : it->second) {
        IntVec r(m, 0);
        for (size_t t = 0; t < m; ++t) r[t] = row[idx[t]];
        rel.push_back(std::move(r));
      }
    if (rel.empty()) {
      block.u = identity_mat(m);
      block.nrel = 0;
      for (size_t t = 0; t < m; ++t) {
        block.out_idx.push_back((int)q.reps.size());
        q.reps.push_back(a.basis(idx[t]));
        q.ring.names.push_back(a.names[idx[t]]);
        q.ring.degrees.push_back(d);
      }
    } else {
      // columns of the relation block generate the sublattice to kill
      IntMat cols(m, IntVec(rel.size(), 0));
      for (size_t r = 0; r < rel.size(); ++r)
        for (size_t t = 0; t < m; ++t) cols[t][r] = rel[r][t];
      Smith s = smith_row_transforms(std::move(cols));
      for (const Int& dv : s.divisors)
        if (dv != 1)
          fail("TorsionQuotient", "elementary divisor " + dv.str() +
                                      " in degree " + std::to_string(2 * d));
      block.u = s.U;
      block.nrel = (int)s.divisors.size();
      for (size_t t = block.nrel; t < m; ++t) {
        IntVec rep = a.zero();
        for (size_t r = 0; r < m; ++r) rep[idx[r]] = s.Uinv[r][t];
        block.out_idx.push_back((int)q.reps.size());
        q.reps.push_back(rep);
        q.ring.names.push_back(elem_str(a, rep));
        q.ring.degrees.push_back(d);
      }
    }
    q.blocks[d] = std::move(block);
  }
  size_t n = q.reps.size();
  q.ring.mult.assign(n, std::vector<std::vector<std::pair<int, Int>>>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      IntVec p = q.reduce(a.mul(q.reps[i], q.reps[j]));
      std::vector<std::pair<int, Int>> sparse;
      for (size_t t = 0; t < n; ++t)
        if (p[t] != 0) sparse.emplace_back((int)t, p[t]);
      q.ring.mult[i][j] = sparse;
      q.ring.mult[j][i] = std::move(sparse);
    }
  IntVec u = q.reduce(a.unit());
  q.ring.unit_index = -1;
  for (size_t i = 0; i < n; ++i)
    if (u == q.ring.basis((int)i)) q.ring.unit_index = (int)i;
  if (q.ring.unit_index < 0)
    fail("Internal", "unit does not survive as a basis element");
  q.ring.check();
  return q;
}

IntMat monomial_map_matrix(const GradedZAlgebra& src, const GradedZAlgebra& dst,
                           const std::vector<IntVec>& gen_images) {
  if (gen_images.size() != src.generator_names.size())
    fail("InvalidParams", "one image per generator required");
  if (src.monomial.size() != src.rank())
    fail("InvalidParams", "source ring has no monomial basis");
  IntMat out;
  for (size_t i = 0; i < src.rank(); ++i) {
    IntVec v = dst.unit();
    for (int g : src.monomial[i]) v = dst.mul(v, gen_images[g]);
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

// integer combination of rows equal to target, if one exists
std::optional<IntVec> solve_in_rowspan(const IntMat& rows, IntVec target) {
  size_t n = rows.size();
  size_t cols = target.size();
  IntMat aug(n, IntVec(cols + n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = rows[i][j];
    aug[i][cols + i] = 1;
  }
  size_t r = 0;
  for (size_t c = 0; c < cols && r < n; ++c) {
    while (true) {
      size_t piv = r;
      for (size_t i = r; i < n; ++i)
        if (aug[i][c] != 0 &&
            (aug[piv][c] == 0 || abs(aug[i][c]) < abs(aug[piv][c])))
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
  IntVec comb(n, 0);
  for (size_t i = 0; i < r; ++i) {
    size_t p = 0;
    while (p < cols && aug[i][p] == 0) ++p;
    if (p == cols || target[p] == 0) continue;
    if (target[p] % aug[i][p] != 0) return std::nullopt;
    Int q = target[p] / aug[i][p];
    for (size_t j = 0; j < cols; ++j) target[j] -= q * aug[i][j];
    for (size_t j = 0; j < n; ++j) comb[j] += q * aug[i][cols + j];
  }
  if (!vzero(target)) return std::nullopt;
  return comb;
}

}  // namespace

GradedZAlgebra blowup_ring(const BlowupData& d) {
  const GradedZAlgebra& X = d.ambient;
  const GradedZAlgebra& Z = d.center;
  int k = d.codim;
  if (k < 2) fail("InvalidParams", "codimension must be at least 2");
  if ((int)d.chern.size() != k - 1)
    fail("InvalidParams", "expected k-1 normal bundle classes");
  if (d.restriction.size() != X.rank())
    fail("InvalidParams", "restriction must be defined on the ambient basis");
  for (int t = 1; t < k; ++t) {
    int dt = homo_degree(Z, d.chern[t - 1]);
    if (dt != -1 && dt != t)
      fail("InvalidParams", "normal bundle class " + std::to_string(t) +
                                " has wrong degree");
  }
  if (homo_degree(X, d.omega) != k)
    fail("InvalidParams", "center class must sit in degree " +
                              std::to_string(2 * k));
  // the restriction must be a ring map
  auto iota = [&](const IntVec& v) {
    IntVec out = Z.zero();
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      for (size_t j = 0; j < out.size(); ++j)
        out[j] += v[i] * d.restriction[i][j];
    }
    return out;
  };
  if (iota(X.unit()) != Z.unit())
    fail("InvalidParams", "restriction does not preserve the unit");
  for (size_t i = 0; i < X.rank(); ++i)
    for (size_t j = i; j < X.rank(); ++j)
      if (iota(X.mul_basis((int)i, (int)j)) !=
          Z.mul(iota(X.basis((int)i)), iota(X.basis((int)j))))
        fail("InvalidParams", "restriction is not multiplicative");

  // a fixed degreewise integral section of the restriction
  std::vector<IntVec> section(Z.rank());
  for (size_t z = 0; z < Z.rank(); ++z) {
    std::vector<int> dom = X.degree_indices(Z.degrees[z]);
    IntMat rows;
    for (int i : dom) rows.push_back(d.restriction[i]);
    auto comb = solve_in_rowspan(rows, Z.basis((int)z));
    if (!comb)
      fail("InvalidParams", "restriction is not onto the center ring");
    IntVec p = X.zero();
    for (size_t t = 0; t < dom.size(); ++t) p[dom[t]] = (*comb)[t];
    section[z] = std::move(p);
  }
  auto lift = [&](const IntVec& z) {
    IntVec p = X.zero();
    for (size_t j = 0; j < z.size(); ++j)
      if (z[j] != 0) p = vadd(p, vscale(section[j], z[j]));
    return p;
  };

  IntVec omega_z = iota(d.omega);

  struct Acc {
    IntVec x;
    std::vector<IntVec> zv;  // index t = 1..k-1
  };
  std::function<void(Acc&, const IntVec&, int)> push_zv =
      [&](Acc& acc, const IntVec& z, int m) {
        if (vzero(z)) return;
        if (m <= k - 1) {
          acc.zv[m] = vadd(acc.zv[m], z);
          return;
        }
        // v^k = -(c_1 v^{k-1} + ... + c_{k-1} v + omega)
        for (int t = 1; t <= k - 1; ++t)
          push_zv(acc, vscale(Z.mul(z, d.chern[t - 1]), -1), m - t);
        if (m - k >= 1)
          push_zv(acc, vscale(Z.mul(z, omega_z), -1), m - k);
        else
          acc.x = vadd(acc.x, vscale(X.mul(lift(z), d.omega), -1));
      };

  size_t nx = X.rank(), nz = Z.rank();
  size_t n = nx + nz * (k - 1);
  auto zpos = [&](size_t j, int t) { return nx + (t - 1) * nz + j; };

  GradedZAlgebra b;
  b.names = X.names;
  b.degrees = X.degrees;
  for (int t = 1; t <= k - 1; ++t)
    for (size_t j = 0; j < nz; ++j) {
      std::string vt = t == 1 ? "v" : "v^" + std::to_string(t);
      b.names.push_back(Z.names[j] == "1" ? vt : Z.names[j] + "*" + vt);
      b.degrees.push_back(Z.degrees[j] + t);
    }
  b.unit_index = X.unit_index;
  b.mult.assign(n, std::vector<std::vector<std::pair<int, Int>>>(n));

  auto basis_prod = [&](size_t p, size_t q) {
    Acc acc;
    acc.x = X.zero();
    acc.zv.assign(k, Z.zero());
    if (p < nx && q < nx) {
      acc.x = X.mul_basis((int)p, (int)q);
    } else if (p < nx || q < nx) {
      size_t amb = p < nx ? p : q;
      size_t other = p < nx ? q : p;
      int t = (int)((other - nx) / nz) + 1;
      size_t j = (other - nx) % nz;
      push_zv(acc, Z.mul(iota(X.basis((int)amb)), Z.basis((int)j)), t);
    } else {
      int t1 = (int)((p - nx) / nz) + 1;
      size_t j1 = (p - nx) % nz;
      int t2 = (int)((q - nx) / nz) + 1;
      size_t j2 = (q - nx) % nz;
      push_zv(acc, Z.mul_basis((int)j1, (int)j2), t1 + t2);
    }
    IntVec out(n, 0);
    for (size_t i = 0; i < nx; ++i) out[i] = acc.x[i];
    for (int t = 1; t <= k - 1; ++t)
      for (size_t j = 0; j < nz; ++j) out[zpos(j, t)] = acc.zv[t][j];
    return out;
  };
  for (size_t p = 0; p < n; ++p)
    for (size_t q = p; q < n; ++q) {
      IntVec v = basis_prod(p, q);
      std::vector<std::pair<int, Int>> sparse;
      for (size_t t = 0; t < n; ++t)
        if (v[t] != 0) sparse.emplace_back((int)t, v[t]);
      b.mult[p][q] = sparse;
      b.mult[q][p] = std::move(sparse);
    }
  b.check();
  return b;
}

BlowupData r22_blowup_preset() {
  BlowupData d;
  d.ambient = ring_tensor(ring_bf(1, "x"), ring_bf(2, "y"));
  d.center = ring_projective(1, "t");
  IntVec t = gen_element(d.center, "t");
  d.restriction = monomial_map_matrix(d.ambient, d.center, {t, t, t});
  d.chern = {vscale(t, 3)};
  IntVec x1 = gen_element(d.ambient, "x1");
  IntVec y1 = gen_element(d.ambient, "y1");
  IntVec y2 = gen_element(d.ambient, "y2");
  d.omega = d.ambient.mul(vadd(x1, y1), y2);
  d.codim = 2;
  return d;
}

}  // namespace gkm
