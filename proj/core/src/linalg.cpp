#include "glf/linalg.hpp"

#include <algorithm>

namespace glf {

Mat mat_identity(const FieldTower& F, int level, int n) {
  Mat m(level, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, F.one(level));
  return m;
}

Mat mat_scalar(const FieldTower& F, int level, int n, FFElem c) {
  Mat m(level, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, c);
  return m;
}

Mat mat_mul(const FieldTower& F, const Mat& x, const Mat& y) {
  require(x.level == y.level && x.nc == y.nr, "matrix shape/level mismatch");
  Mat r(x.level, x.nr, y.nc);
  for (int i = 0; i < x.nr; ++i)
    for (int j = 0; j < y.nc; ++j) {
      FFElem acc = F.zero(x.level);
      for (int k = 0; k < x.nc; ++k)
        acc = F.add(acc, F.mul(x.elem(i, k), y.elem(k, j)));
      r.set(i, j, acc);
    }
  return r;
}

Mat mat_add(const FieldTower& F, const Mat& x, const Mat& y) {
  require(x.level == y.level && x.nr == y.nr && x.nc == y.nc, "matrix shape mismatch");
  Mat r(x.level, x.nr, x.nc);
  for (size_t i = 0; i < x.a.size(); ++i)
    r.a[i] = F.add({x.level, x.a[i]}, {x.level, y.a[i]}).code;
  return r;
}

Mat mat_sub(const FieldTower& F, const Mat& x, const Mat& y) {
  require(x.level == y.level && x.nr == y.nr && x.nc == y.nc, "matrix shape mismatch");
  Mat r(x.level, x.nr, x.nc);
  for (size_t i = 0; i < x.a.size(); ++i)
    r.a[i] = F.sub({x.level, x.a[i]}, {x.level, y.a[i]}).code;
  return r;
}

Mat mat_pow(const FieldTower& F, Mat x, long long e) {
  require(x.nr == x.nc, "matrix power needs a square matrix");
  if (e < 0) return mat_pow(F, mat_inverse(F, x), -e);
  Mat r = mat_identity(F, x.level, x.nr);
  while (e > 0) {
    if (e & 1) r = mat_mul(F, r, x);
    x = mat_mul(F, x, x);
    e >>= 1;
  }
  return r;
}

FFElem mat_trace(const FieldTower& F, const Mat& x) {
  FFElem acc = F.zero(x.level);
  for (int i = 0; i < std::min(x.nr, x.nc); ++i) acc = F.add(acc, x.elem(i, i));
  return acc;
}

namespace {

// returns (rank, det); optionally accumulates the inverse
int eliminate(const FieldTower& F, Mat& m, Mat* inv, FFElem* det) {
  int n = m.nr, rank = 0;
  FFElem d = F.one(m.level);
  for (int col = 0; col < m.nc && rank < n; ++col) {
    int piv = -1;
    for (int i = rank; i < n; ++i)
      if (!m.elem(i, col).is_zero()) { piv = i; break; }
    if (piv < 0) { d = F.zero(m.level); continue; }
    if (piv != rank) {
      for (int j = 0; j < m.nc; ++j) std::swap(m.at(piv, j), m.at(rank, j));
      if (inv)
        for (int j = 0; j < inv->nc; ++j) std::swap(inv->at(piv, j), inv->at(rank, j));
      d = F.neg(d);
    }
    FFElem pv = m.elem(rank, col);
    d = F.mul(d, pv);
    FFElem ipv = F.inv(pv);
    for (int j = 0; j < m.nc; ++j) m.set(rank, j, F.mul(m.elem(rank, j), ipv));
    if (inv)
      for (int j = 0; j < inv->nc; ++j) inv->set(rank, j, F.mul(inv->elem(rank, j), ipv));
    for (int i = 0; i < n; ++i) {
      if (i == rank) continue;
      FFElem f = m.elem(i, col);
      if (f.is_zero()) continue;
      for (int j = 0; j < m.nc; ++j)
        m.set(i, j, F.sub(m.elem(i, j), F.mul(f, m.elem(rank, j))));
      if (inv)
        for (int j = 0; j < inv->nc; ++j)
          inv->set(i, j, F.sub(inv->elem(i, j), F.mul(f, inv->elem(rank, j))));
    }
    ++rank;
  }
  if (det) *det = rank == n && m.nr == m.nc ? d : F.zero(m.level);
  return rank;
}

}  // namespace

FFElem mat_det(const FieldTower& F, Mat x) {
  require(x.nr == x.nc, "determinant of non-square matrix");
  FFElem d;
  eliminate(F, x, nullptr, &d);
  return d;
}

Mat mat_inverse(const FieldTower& F, const Mat& x) {
  require(x.nr == x.nc, "inverse of non-square matrix");
  Mat m = x, inv = mat_identity(F, x.level, x.nr);
  FFElem d;
  int rank = eliminate(F, m, &inv, &d);
  require(rank == x.nr, "matrix is singular");
  return inv;
}

bool mat_invertible(const FieldTower& F, const Mat& x) {
  if (x.nr != x.nc) return false;
  Mat m = x;
  return eliminate(F, m, nullptr, nullptr) == x.nr;
}

int mat_rank(const FieldTower& F, Mat x) { return eliminate(F, x, nullptr, nullptr); }

std::vector<std::vector<FFElem>> mat_kernel(const FieldTower& F, Mat x) {
  int n = x.nc;
  int rank = eliminate(F, x, nullptr, nullptr);
  // pivot columns of the reduced matrix
  std::vector<int> pivot_col(rank, -1);
  std::vector<bool> is_pivot(n, false);
  for (int i = 0, col = 0; i < rank; ++i) {
    while (col < n && x.elem(i, col).is_zero()) ++col;
    pivot_col[i] = col;
    is_pivot[col] = true;
  }
  std::vector<std::vector<FFElem>> basis;
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    std::vector<FFElem> v(n, F.zero(x.level));
    v[j] = F.one(x.level);
    for (int i = 0; i < rank; ++i)
      v[pivot_col[i]] = F.neg(x.elem(i, j));
    basis.push_back(v);
  }
  return basis;
}

FPoly poly_from(const FieldTower& F, int level, const std::vector<FFElem>& coeffs) {
  (void)F;
  FPoly f;
  f.level = level;
  for (const FFElem& c : coeffs) f.c.push_back(c.code);
  while (!f.c.empty() && f.c.back() < 0) f.c.pop_back();
  return f;
}

namespace {
void ftrim(FPoly& f) {
  while (!f.c.empty() && f.c.back() < 0) f.c.pop_back();
}
}  // namespace

FPoly poly_mul(const FieldTower& F, const FPoly& x, const FPoly& y) {
  require(x.level == y.level, "polynomial level mismatch");
  FPoly r;
  r.level = x.level;
  if (x.is_zero() || y.is_zero()) return r;
  r.c.assign(x.c.size() + y.c.size() - 1, -1);
  for (size_t i = 0; i < x.c.size(); ++i) {
    if (x.c[i] < 0) continue;
    for (size_t j = 0; j < y.c.size(); ++j) {
      if (y.c[j] < 0) continue;
      FFElem cur = {x.level, r.c[i + j]};
      r.c[i + j] = F.add(cur, F.mul({x.level, x.c[i]}, {x.level, y.c[j]})).code;
    }
  }
  ftrim(r);
  return r;
}

FPoly poly_add(const FieldTower& F, const FPoly& x, const FPoly& y) {
  require(x.level == y.level, "polynomial level mismatch");
  FPoly r;
  r.level = x.level;
  r.c.assign(std::max(x.c.size(), y.c.size()), -1);
  for (size_t i = 0; i < r.c.size(); ++i) {
    FFElem a = {x.level, i < x.c.size() ? x.c[i] : -1};
    FFElem b = {x.level, i < y.c.size() ? y.c[i] : -1};
    r.c[i] = F.add(a, b).code;
  }
  ftrim(r);
  return r;
}

FPoly poly_mod(const FieldTower& F, FPoly x, const FPoly& m) {
  require(x.level == m.level && !m.is_zero(), "bad modulus");
  FFElem lead_inv = F.inv(m.coeff(m.deg()));
  while ((int)x.c.size() >= (int)m.c.size() && !x.is_zero()) {
    FFElem c = F.mul({x.level, x.c.back()}, lead_inv);
    int shift = (int)x.c.size() - (int)m.c.size();
    if (!c.is_zero())
      for (size_t i = 0; i < m.c.size(); ++i) {
        FFElem cur = {x.level, x.c[shift + i]};
        x.c[shift + i] = F.sub(cur, F.mul(c, {x.level, m.c[i]})).code;
      }
    x.c.pop_back();
    ftrim(x);
  }
  return x;
}

FPoly poly_divexact(const FieldTower& F, const FPoly& x, const FPoly& d) {
  // long division, remainder must vanish
  FPoly rem = x, quot;
  quot.level = x.level;
  quot.c.assign(x.c.size(), -1);
  FFElem lead_inv = F.inv(d.coeff(d.deg()));
  while ((int)rem.c.size() >= (int)d.c.size() && !rem.is_zero()) {
    FFElem c = F.mul({x.level, rem.c.back()}, lead_inv);
    int shift = (int)rem.c.size() - (int)d.c.size();
    quot.c[shift] = c.code;
    for (size_t i = 0; i < d.c.size(); ++i) {
      FFElem cur = {x.level, rem.c[shift + i]};
      rem.c[shift + i] = F.sub(cur, F.mul(c, {x.level, d.c[i]})).code;
    }
    rem.c.pop_back();
    ftrim(rem);
  }
  require(rem.is_zero(), "poly_divexact: division not exact");
  ftrim(quot);
  return quot;
}

FPoly poly_monic(const FieldTower& F, FPoly x) {
  if (x.is_zero()) return x;
  FFElem inv = F.inv(x.coeff(x.deg()));
  for (auto& c : x.c) c = F.mul({x.level, c}, inv).code;
  return x;
}

FPoly poly_gcd(const FieldTower& F, FPoly x, FPoly y) {
  while (!y.is_zero()) {
    FPoly r = poly_mod(F, x, poly_monic(F, y));
    x = y;
    y = r;
  }
  return poly_monic(F, x);
}

FPoly poly_powmod(const FieldTower& F, FPoly x, long long e, const FPoly& m) {
  FPoly r;
  r.level = x.level;
  r.c = {F.one(x.level).code};
  x = poly_mod(F, std::move(x), m);
  while (e > 0) {
    if (e & 1) r = poly_mod(F, poly_mul(F, r, x), m);
    x = poly_mod(F, poly_mul(F, x, x), m);
    e >>= 1;
  }
  return r;
}

FFElem poly_eval(const FieldTower& F, const FPoly& f, FFElem x) {
  FFElem acc = F.zero(x.level);
  for (int i = f.deg(); i >= 0; --i) {
    acc = F.mul(acc, x);
    FFElem c = f.coeff(i);
    if (x.level != f.level) c = F.embed(c, x.level);
    acc = F.add(acc, c);
  }
  return acc;
}

Mat poly_eval_mat(const FieldTower& F, const FPoly& f, const Mat& A) {
  Mat acc(A.level, A.nr, A.nc);
  for (int i = f.deg(); i >= 0; --i) {
    acc = mat_mul(F, acc, A);
    FFElem c = f.coeff(i);
    if (A.level != f.level) c = F.embed(c, A.level);
    acc = mat_add(F, acc, mat_scalar(F, A.level, A.nr, c));
  }
  return acc;
}

bool poly_irreducible(const FieldTower& F, const FPoly& f) {
  int n = f.deg();
  if (n <= 0) return false;
  if (n == 1) return true;
  long long Q = F.field_size(f.level);
  FPoly x;
  x.level = f.level;
  x.c = {-1, F.one(f.level).code};
  // x^{Q^n} == x mod f, and x^{Q^{n/r}} - x coprime to f for primes r | n
  std::vector<FPoly> pw(n + 1);
  pw[0] = poly_mod(F, x, f);
  for (int k = 1; k <= n; ++k) pw[k] = poly_powmod(F, pw[k - 1], Q, f);
  FPoly diff = poly_add(F, pw[n], {f.level, {-1, F.neg(F.one(f.level)).code}});
  if (!diff.is_zero()) return false;
  for (int r = 2; r <= n; ++r) {
    if (n % r != 0) continue;
    bool rp = true;
    for (int s = 2; s * s <= r; ++s)
      if (r % s == 0) { rp = false; break; }
    if (!rp) continue;
    FPoly d2 = poly_add(F, pw[n / r], {f.level, {-1, F.neg(F.one(f.level)).code}});
    FPoly g = poly_gcd(F, f, d2);
    if (g.deg() != 0) return false;
  }
  return true;
}

FPoly char_poly(const FieldTower& F, const Mat& A) {
  require(A.nr == A.nc, "char_poly of non-square matrix");
  int n = A.nr;
  // determinant of xI - A by expansion over column subsets
  std::vector<FPoly> memo(1u << n);
  std::vector<bool> have(1u << n, false);
  FPoly one;
  one.level = A.level;
  one.c = {F.one(A.level).code};
  memo[0] = one;
  have[0] = true;
  std::function<const FPoly&(unsigned)> rec = [&](unsigned mask) -> const FPoly& {
    if (have[mask]) return memo[mask];
    int row = __builtin_popcount(mask) - 1;
    FPoly acc;
    acc.level = A.level;
    int pos = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      // entry (row, j) of xI - A
      FPoly e;
      e.level = A.level;
      e.c = {F.neg(A.elem(row, j)).code, row == j ? F.one(A.level).code : -1};
      ftrim(e);
      if (!e.is_zero()) {
        FPoly term = poly_mul(F, e, rec(mask & ~(1u << j)));
        if ((row + pos) % 2 == 1)
          for (auto& c : term.c) c = F.neg({A.level, c}).code;
        acc = poly_add(F, acc, term);
      }
      ++pos;
    }
    memo[mask] = acc;
    have[mask] = true;
    return memo[mask];
  };
  FPoly cp = rec((1u << n) - 1);
  require(cp.deg() == n, "char_poly degree mismatch");
  return cp;
}

std::vector<FPoly> irreducibles(const FieldTower& F, int level, int degree,
                                bool exclude_x) {
  long long Q = F.field_size(level);
  long long count = 1;
  for (int i = 0; i < degree; ++i) count = checked_mul(count, Q, "irreducible enumeration");
  std::vector<FPoly> out;
  for (long long m = 0; m < count; ++m) {
    long long t = m;
    FPoly f;
    f.level = level;
    f.c.assign(degree + 1, -1);
    for (int i = 0; i < degree; ++i) {
      long long code = t % Q;
      t /= Q;
      f.c[i] = code - 1;  // 0 -> zero, k+1 -> g^k
    }
    f.c[degree] = F.one(level).code;
    if (exclude_x && degree >= 1 && f.c[0] < 0) continue;
    if (poly_irreducible(F, f)) out.push_back(f);
  }
  return out;
}

FFElem irreducible_root(const FieldTower& F, const FPoly& f) {
  int r = f.deg();
  int D = f.level * r;
  long long N = F.field_size(D);
  for (long long code = 0; code < N - 1; ++code) {
    FFElem z = {D, code};
    if (poly_eval(F, f, z).is_zero()) return z;
  }
  // constant term zero would mean root 0, excluded for invertible elements
  if (f.c[0] < 0) return F.zero(D);
  throw Error("irreducible polynomial has no root in its splitting level");
}

std::vector<std::pair<FPoly, int>> poly_factor(const FieldTower& F, const FPoly& f) {
  require(!f.is_zero(), "factor of zero polynomial");
  FPoly rem = poly_monic(F, f);
  std::vector<std::pair<FPoly, int>> out;
  for (int d = 1; d <= rem.deg(); ++d) {
    if (rem.deg() < d) break;
    for (const FPoly& p : irreducibles(F, f.level, d, false)) {
      int mult = 0;
      while (rem.deg() >= d && poly_mod(F, rem, p).is_zero()) {
        rem = poly_divexact(F, rem, p);
        ++mult;
      }
      if (mult > 0) out.emplace_back(p, mult);
      if (rem.deg() < d) break;
    }
  }
  require(rem.deg() == 0, "factorization incomplete");
  return out;
}

SubfieldBasis::SubfieldBasis(const FieldTower& F, int dsub, int D)
    : F_(&F), dsub_(dsub), D_(D) {
  require(D % dsub == 0, "SubfieldBasis: dsub must divide D");
  m_ = D / dsub;
  N_ = (int)F.rep_digits(F.one(D)).size();
  int ns = N_ / m_;  // a * dsub
  long long p = F.p();
  // columns: digits of embed(basis monomial s of level dsub) * g_D^t
  std::vector<std::vector<long long>> B(N_, std::vector<long long>(N_, 0));
  for (int t = 0; t < m_; ++t)
    for (int s = 0; s < ns; ++s) {
      std::vector<long long> digs(ns, 0);
      digs[s] = 1;
      FFElem base = F.from_digits(dsub, digs);
      FFElem v = F.mul(F.embed(base, D), F.pow(F.gen(D), t));
      std::vector<long long> col = F.rep_digits(v);
      for (int i = 0; i < N_; ++i) B[i][t * ns + s] = col[i];
    }
  // invert B mod p
  binv_.assign(N_, std::vector<long long>(N_, 0));
  for (int i = 0; i < N_; ++i) binv_[i][i] = 1;
  auto inv_mod = [p](long long c) {
    long long r = 1, b = c % p, e = p - 2;
    while (e) { if (e & 1) r = r * b % p; b = b * b % p; e >>= 1; }
    return r;
  };
  for (int col = 0; col < N_; ++col) {
    int piv = -1;
    for (int i = col; i < N_; ++i)
      if (B[i][col] % p != 0) { piv = i; break; }
    require(piv >= 0, "SubfieldBasis: power basis is degenerate");
    std::swap(B[piv], B[col]);
    std::swap(binv_[piv], binv_[col]);
    long long ip = inv_mod(B[col][col]);
    for (int j = 0; j < N_; ++j) {
      B[col][j] = B[col][j] * ip % p;
      binv_[col][j] = binv_[col][j] * ip % p;
    }
    for (int i = 0; i < N_; ++i) {
      if (i == col) continue;
      long long f2 = B[i][col] % p;
      if (f2 == 0) continue;
      for (int j = 0; j < N_; ++j) {
        B[i][j] = ((B[i][j] - f2 * B[col][j]) % p + p) % p;
        binv_[i][j] = ((binv_[i][j] - f2 * binv_[col][j]) % p + p) % p;
      }
    }
  }
}

std::vector<FFElem> SubfieldBasis::coords_of(FFElem x) const {
  require(x.level == D_, "SubfieldBasis: wrong level");
  std::vector<long long> digs = F_->rep_digits(x);
  long long p = F_->p();
  int ns = N_ / m_;
  std::vector<FFElem> out(m_);
  for (int t = 0; t < m_; ++t) {
    std::vector<long long> chunk(ns, 0);
    for (int s = 0; s < ns; ++s) {
      long long acc = 0;
      int row = t * ns + s;
      for (int i = 0; i < N_; ++i) acc = (acc + binv_[row][i] * digs[i]) % p;
      chunk[s] = acc;
    }
    out[t] = F_->from_digits(dsub_, chunk);
  }
  return out;
}

FFElem SubfieldBasis::from_coords(const std::vector<FFElem>& c) const {
  require((int)c.size() == m_, "SubfieldBasis: wrong coordinate count");
  FFElem acc = F_->zero(D_);
  for (int t = 0; t < m_; ++t)
    acc = F_->add(acc, F_->mul(F_->embed(c[t], D_), F_->pow(F_->gen(D_), t)));
  return acc;
}

Mat SubfieldBasis::mult_matrix(FFElem z) const {
  Mat m(dsub_, m_, m_);
  for (int j = 0; j < m_; ++j) {
    FFElem v = F_->mul(z, F_->pow(F_->gen(D_), j));
    std::vector<FFElem> col = coords_of(v);
    for (int i = 0; i < m_; ++i) m.set(i, j, col[i]);
  }
  return m;
}

std::optional<FFElem> SubfieldBasis::element_of_mult_matrix(const Mat& b) const {
  if (b.level != dsub_ || b.nr != m_ || b.nc != m_) return std::nullopt;
  std::vector<FFElem> col0(m_);
  for (int i = 0; i < m_; ++i) col0[i] = b.elem(i, 0);
  FFElem z = from_coords(col0);
  if (z.is_zero()) return std::nullopt;
  if (mult_matrix(z) == b) return z;
  return std::nullopt;
}

}  // namespace glf
