#include "glf/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace glf {

ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b) {
  require(a.table == b.table, "class functions live on different tables");
  ClassFunction r(*a.table);
  for (size_t i = 0; i < a.v.size(); ++i) r.v[i] = a.v[i] + b.v[i];
  return r;
}

ClassFunction cf_scale(cplx c, const ClassFunction& a) {
  ClassFunction r(*a.table);
  for (size_t i = 0; i < a.v.size(); ++i) r.v[i] = c * a.v[i];
  return r;
}

ClassFunction cf_conj(const ClassFunction& a) {
  ClassFunction r(*a.table);
  for (size_t i = 0; i < a.v.size(); ++i) r.v[i] = std::conj(a.v[i]);
  return r;
}

double cf_max_abs_diff(const ClassFunction& a, const ClassFunction& b) {
  require(a.table == b.table, "class functions live on different tables");
  double m = 0;
  for (size_t i = 0; i < a.v.size(); ++i) m = std::max(m, std::abs(a.v[i] - b.v[i]));
  return m;
}

cplx inner_product(const ClassFunction& f, const ClassFunction& h) {
  require(f.table == h.table, "class functions live on different tables");
  const ClassTable& t = *f.table;
  cplx acc = 0;
  for (int k = 0; k < t.num_classes(); ++k)
    acc += double(t.cls(k).size) * f.v[k] * std::conj(h.v[k]);
  return acc / double(t.group_order());
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

long long mod_pow(long long b, long long e, long long m) {
  long long r = 1;
  b %= m;
  while (e > 0) {
    if (e & 1) r = (__int128)r * b % m;
    b = (__int128)b * b % m;
    e >>= 1;
  }
  return r;
}

long long mod_inv(long long a, long long m) { return mod_pow(((a % m) + m) % m, m - 2, m); }

bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long i = 2; i * i <= n; ++i)
    if (n % i == 0) return false;
  return true;
}

long long primitive_root(long long l) {
  std::vector<long long> ps;
  long long m = l - 1;
  for (long long i = 2; i * i <= m; ++i)
    if (m % i == 0) {
      ps.push_back(i);
      while (m % i == 0) m /= i;
    }
  if (m > 1) ps.push_back(m);
  for (long long w = 2; w < l; ++w) {
    bool ok = true;
    for (long long p : ps)
      if (mod_pow(w, (l - 1) / p, l) == 1) { ok = false; break; }
    if (ok) return w;
  }
  throw Error("no primitive root found");
}

using ModVec = std::vector<long long>;
using ModMat = std::vector<ModVec>;

// characteristic polynomial mod l via Hessenberg reduction
ModVec hessenberg_charpoly(ModMat a, long long l) {
  int n = (int)a.size();
  for (int k = 1; k < n - 1; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a[i][k - 1] % l != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[k]);
    for (int i = 0; i < n; ++i) std::swap(a[i][piv], a[i][k]);
    long long inv = mod_inv(a[k][k - 1], l);
    for (int i = k + 1; i < n; ++i) {
      long long f = (__int128)a[i][k - 1] * inv % l;
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) a[i][j] = ((a[i][j] - (__int128)f * a[k][j]) % l + l) % l;
      for (int j = 0; j < n; ++j) a[j][k] = (a[j][k] + (__int128)f * a[j][i]) % l;
    }
  }
  // p_k(x) = charpoly of leading k x k Hessenberg block
  std::vector<ModVec> p(n + 1);
  p[0] = {1};
  for (int k = 1; k <= n; ++k) {
    // p_k = (x - a[k-1][k-1]) p_{k-1} - sum_{i} a[i-1][k-1] * prod(subdiag) p_{i-1}
    ModVec cur(k + 1, 0);
    for (int j = 0; j < (int)p[k - 1].size(); ++j) {
      cur[j + 1] = (cur[j + 1] + p[k - 1][j]) % l;
      cur[j] = ((cur[j] - (__int128)(a[k - 1][k - 1] % l) * p[k - 1][j]) % l + l) % l;
    }
    long long run = 1;
    for (int i = k - 1; i >= 1; --i) {
      run = (__int128)run * (a[i][i - 1] % l) % l;
      long long coef = (__int128)run * (a[i - 1][k - 1] % l) % l;
      if (coef == 0) continue;
      for (int j = 0; j < (int)p[i - 1].size(); ++j)
        cur[j] = ((cur[j] - (__int128)coef * p[i - 1][j]) % l + l) % l;
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

// kernel basis of an n x n matrix mod l
std::vector<ModVec> mod_kernel(ModMat a, long long l) {
  int n = (int)a.size();
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int i = rank; i < n; ++i)
      if (a[i][col] % l != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    long long inv = mod_inv(a[rank][col], l);
    for (int j = 0; j < n; ++j) a[rank][j] = (__int128)a[rank][j] * inv % l;
    for (int i = 0; i < n; ++i) {
      if (i == rank) continue;
      long long f = a[i][col] % l;
      if (f == 0) continue;
      for (int j = 0; j < n; ++j)
        a[i][j] = ((a[i][j] - (__int128)f * a[rank][j]) % l + l) % l;
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<ModVec> basis;
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    ModVec v(n, 0);
    v[j] = 1;
    for (int i = 0; i < rank; ++i)
      v[pivot_col[i]] = (l - a[i][j] % l) % l;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

CharacterTable dixon_table(const ClassTable& table, int max_classes, long long prime_bound) {
  const FieldTower& F = table.tower();
  int r = table.num_classes();
  if (r > max_classes) throw BudgetError("character table classes", r, max_classes);
  long long G = table.group_order();

  long long e = 1;
  for (int i = 0; i < r; ++i) e = std::lcm(e, table.cls(i).element_order);

  long long l = 0;
  double bound = 2 * std::sqrt((double)G) + 2;
  for (long long cand = e + 1;; cand += e) {
    if (cand > prime_bound)
      throw Error("character lift failure: no prime l = 1 mod " + std::to_string(e) +
                  " below bound");
    if (cand < (long long)bound) continue;
    if (!is_prime_ll(cand)) continue;
    if (G % cand == 0) continue;
    l = cand;
    break;
  }
  long long w = primitive_root(l);

  // class element lists and inverse reps
  const auto& elems = table.elements();
  const auto& ecls = table.element_class();
  std::vector<std::vector<int>> members(r);
  for (size_t i = 0; i < elems.size(); ++i) members[ecls[i]].push_back((int)i);

  // class matrices A_i[j][k] = #{(x,y) in C_i x C_j : x y = g_k}
  std::vector<ModMat> A(r, ModMat(r, ModVec(r, 0)));
  parallel_for(r, [&](long long i) {
    for (int xi : members[i]) {
      GroupElement xinv = ge_inverse(F, elems[xi]);
      for (int k = 0; k < r; ++k) {
        int j = table.class_index(ge_mul(F, xinv, table.cls(k).rep));
        ++A[i][j][k];
      }
    }
  });

  // split the common eigenspaces of all A_i over F_l
  std::vector<std::vector<ModVec>> spaces = {{}};
  spaces[0].resize(r);
  for (int i = 0; i < r; ++i) {
    spaces[0][i] = ModVec(r, 0);
    spaces[0][i][i] = 1;
  }
  for (int i = 0; i < r; ++i) {
    bool all_one = true;
    for (auto& s : spaces) all_one = all_one && s.size() == 1;
    if (all_one) break;
    std::vector<std::vector<ModVec>> next;
    for (auto& s : spaces) {
      int dim = (int)s.size();
      if (dim == 1) { next.push_back(s); continue; }
      // restriction B of A_i to the subspace: A_i * S = S * B
      // solve with a row-reduced copy of S
      ModMat S(r, ModVec(dim, 0));
      for (int c = 0; c < dim; ++c)
        for (int row = 0; row < r; ++row) S[row][c] = s[c][row];
      // A_i * S
      ModMat AS(r, ModVec(dim, 0));
      for (int row = 0; row < r; ++row)
        for (int k = 0; k < r; ++k) {
          if (A[i][row][k] == 0) continue;
          for (int c = 0; c < dim; ++c)
            AS[row][c] = (AS[row][c] + (__int128)A[i][row][k] * S[k][c]) % l;
        }
      // solve S * B = AS column by column via elimination on [S | AS]
      ModMat aug(r, ModVec(dim + dim, 0));
      for (int row = 0; row < r; ++row) {
        for (int c = 0; c < dim; ++c) aug[row][c] = S[row][c];
        for (int c = 0; c < dim; ++c) aug[row][dim + c] = AS[row][c];
      }
      int rank = 0;
      for (int col = 0; col < dim && rank < r; ++col) {
        int piv = -1;
        for (int row = rank; row < r; ++row)
          if (aug[row][col] % l != 0) { piv = row; break; }
        require(piv >= 0, "subspace basis is degenerate");
        std::swap(aug[piv], aug[rank]);
        long long inv = mod_inv(aug[rank][col], l);
        for (int j = 0; j < 2 * dim; ++j) aug[rank][j] = (__int128)aug[rank][j] * inv % l;
        for (int row = 0; row < r; ++row) {
          if (row == rank) continue;
          long long f = aug[row][col] % l;
          if (f == 0) continue;
          for (int j = 0; j < 2 * dim; ++j)
            aug[row][j] = ((aug[row][j] - (__int128)f * aug[rank][j]) % l + l) % l;
        }
        ++rank;
      }
      ModMat B(dim, ModVec(dim, 0));
      for (int row = 0; row < dim; ++row)
        for (int c = 0; c < dim; ++c) B[row][c] = aug[row][dim + c];
      // eigenvalues of B from its characteristic polynomial
      ModVec cp = hessenberg_charpoly(B, l);
      std::vector<long long> eigs;
      for (long long lam = 0; lam < l; ++lam) {
        long long val = 0;
        for (int j = (int)cp.size() - 1; j >= 0; --j) val = ((__int128)val * lam + cp[j]) % l;
        if (val == 0) eigs.push_back(lam);
        if ((long long)eigs.size() == (long long)dim) break;
      }
      int consumed = 0;
      for (long long lam : eigs) {
        ModMat Bl = B;
        for (int j = 0; j < dim; ++j) Bl[j][j] = ((Bl[j][j] - lam) % l + l) % l;
        std::vector<ModVec> ker = mod_kernel(Bl, l);
        if (ker.empty()) continue;
        std::vector<ModVec> sub;
        for (ModVec& c : ker) {
          ModVec vec(r, 0);
          for (int t = 0; t < dim; ++t) {
            if (c[t] == 0) continue;
            for (int row = 0; row < r; ++row)
              vec[row] = (vec[row] + (__int128)c[t] * s[t][row]) % l;
          }
          sub.push_back(std::move(vec));
        }
        consumed += (int)sub.size();
        next.push_back(std::move(sub));
      }
      require(consumed == dim, "class matrix failed to diagonalize");
    }
    spaces = std::move(next);
  }
  require((int)spaces.size() == r, "could not separate all central characters");

  // central characters, degrees, residue character values
  int id = table.identity_index();
  std::vector<ModVec> omega(r);
  std::vector<long long> degrees(r);
  std::vector<ModVec> chibar(r, ModVec(r, 0));
  long long degree_check = 0;
  for (int s = 0; s < r; ++s) {
    ModVec v = spaces[s][0];
    require(v[id] % l != 0, "central character vanishes at the identity");
    long long norm = mod_inv(v[id], l);
    for (auto& x : v) x = (__int128)x * norm % l;
    omega[s] = v;
    long long acc = 0;
    for (int k = 0; k < r; ++k) {
      long long term = (__int128)v[k] * v[table.inverse_class(k)] % l;
      acc = (acc + (__int128)term * mod_inv(table.cls(k).size % l, l)) % l;
    }
    long long d2 = (__int128)(G % l) * mod_inv(acc, l) % l;
    long long d = -1;
    for (long long c = 1; c * c <= G; ++c)
      if ((__int128)c * c % l == d2) {
        require(d < 0, "ambiguous degree root");
        d = c;
      }
    require(d > 0, "no degree matches the modular data");
    degrees[s] = d;
    degree_check += d * d;
    for (int k = 0; k < r; ++k)
      chibar[s][k] = (__int128)d * v[k] % l * mod_inv(table.cls(k).size % l, l) % l;
  }
  require(degree_check == G, "sum of squared degrees is not |G|");

  // lift to complex roots of unity through z_e = w^{(l-1)/e} -> exp(2 pi i/e)
  std::vector<std::vector<int>> power_class(r);
  for (int k = 0; k < r; ++k) {
    long long ek = table.cls(k).element_order;
    power_class[k].resize(ek);
    for (long long t = 0; t < ek; ++t) power_class[k][t] = table.class_of_power(k, t);
  }
  CharacterTable out;
  out.table = &table;
  out.lift_prime = l;
  out.degrees.resize(r);
  out.values.assign(r, std::vector<cplx>(r, 0.0));
  out.lifts.assign(r, std::vector<CharValueLift>(r));
  for (int s = 0; s < r; ++s) {
    out.degrees[s] = degrees[s];
    for (int k = 0; k < r; ++k) {
      long long ek = table.cls(k).element_order;
      long long z = mod_pow(w, (l - 1) / ek, l);
      long long einv = mod_inv(ek % l, l);
      CharValueLift lift;
      lift.order = ek;
      lift.mult.assign(ek, 0);
      long long total = 0;
      cplx val = 0;
      for (long long j = 0; j < ek; ++j) {
        long long acc = 0;
        for (long long t = 0; t < ek; ++t) {
          long long zp = mod_pow(z, ((ek - j) * t) % ek, l);  // z^{-jt}
          acc = (acc + (__int128)chibar[s][power_class[k][t]] * zp) % l;
        }
        long long mj = (__int128)acc * einv % l;
        lift.mult[j] = mj;
        total += mj;
        val += double(mj) * std::polar(1.0, kTwoPi * double(j) / double(ek));
      }
      require(total == degrees[s], "root-of-unity multiplicities do not sum to the degree");
      out.values[s][k] = val;
      out.lifts[s][k] = std::move(lift);
    }
  }

  // canonical row order: by degree, then exact lift data (descending, so the
  // trivial character leads its degree block)
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int x, int y) {
    if (out.degrees[x] != out.degrees[y]) return out.degrees[x] < out.degrees[y];
    for (int k = 0; k < r; ++k) {
      if (out.lifts[x][k].mult != out.lifts[y][k].mult)
        return out.lifts[x][k].mult > out.lifts[y][k].mult;
    }
    return false;
  });
  CharacterTable sorted;
  sorted.table = &table;
  sorted.lift_prime = l;
  for (int i : perm) {
    sorted.degrees.push_back(out.degrees[i]);
    sorted.values.push_back(std::move(out.values[i]));
    sorted.lifts.push_back(std::move(out.lifts[i]));
  }
  return sorted;
}

std::vector<cplx> decompose(const CharacterTable& chars, const ClassFunction& f) {
  require(chars.table == f.table, "decompose: table mismatch");
  std::vector<cplx> m(chars.num_irreps());
  for (int i = 0; i < chars.num_irreps(); ++i) m[i] = inner_product(f, chars.row(i));
  return m;
}

ClassFunction borel_permutation_character(const ClassTable& table) {
  const FieldTower& F = table.tower();
  const auto& elems = table.elements();
  long long borel = 1;
  for (const GroupBlock& b : table.spec().blocks) {
    long long Q = F.field_size(b.d);
    borel = checked_mul(borel, ipow_checked(Q - 1, b.n, "borel"), "borel");
    borel = checked_mul(borel, ipow_checked(Q, b.n * (b.n - 1) / 2, "borel"), "borel");
  }
  auto in_borel = [&](const GroupElement& g) {
    for (const Mat& m : g.blocks)
      for (int i = 0; i < m.nr; ++i)
        for (int j = 0; j < i; ++j)
          if (m.at(i, j) >= 0) return false;
    return true;
  };
  ClassFunction out(table);
  for (int k = 0; k < table.num_classes(); ++k) {
    long long count = 0;
    for (const auto& x : elems) {
      GroupElement c = ge_mul(F, ge_mul(F, ge_inverse(F, x), table.cls(k).rep), x);
      if (in_borel(c)) ++count;
    }
    require(count % borel == 0, "Borel fixed-point count not divisible by |B|");
    out[k] = double(count / borel);
  }
  return out;
}

double row_orthogonality_error(const CharacterTable& chars) {
  double err = 0;
  for (int i = 0; i < chars.num_irreps(); ++i)
    for (int j = 0; j < chars.num_irreps(); ++j) {
      cplx ip = inner_product(chars.row(i), chars.row(j));
      err = std::max(err, std::abs(ip - (i == j ? cplx(1, 0) : cplx(0, 0))));
    }
  return err;
}

double column_orthogonality_error(const CharacterTable& chars) {
  const ClassTable& t = *chars.table;
  double err = 0;
  for (int k = 0; k < t.num_classes(); ++k)
    for (int k2 = 0; k2 < t.num_classes(); ++k2) {
      cplx acc = 0;
      for (int i = 0; i < chars.num_irreps(); ++i)
        acc += chars.value(i, k) * std::conj(chars.value(i, k2));
      cplx expect = k == k2 ? cplx(double(t.group_order()) / double(t.cls(k).size), 0) : cplx(0, 0);
      err = std::max(err, std::abs(acc - expect));
    }
  return err;
}

}  // namespace glf
