#pragma once

#include <vector>

#include "glf/field.hpp"

namespace glf {

// Dense matrix over a single tower level, entries stored as discrete logs
// (-1 = zero).  All arithmetic goes through the owning FieldTower.
struct Mat {
  int level = 1;
  int nr = 0, nc = 0;
  std::vector<long long> a;

  Mat() = default;
  Mat(int lvl, int r, int c) : level(lvl), nr(r), nc(c), a((size_t)r * c, -1) {}

  long long& at(int i, int j) { return a[(size_t)i * nc + j]; }
  long long at(int i, int j) const { return a[(size_t)i * nc + j]; }
  FFElem elem(int i, int j) const { return {level, at(i, j)}; }
  void set(int i, int j, FFElem x) { at(i, j) = x.code; }
  bool operator==(const Mat& o) const {
    return level == o.level && nr == o.nr && nc == o.nc && a == o.a;
  }
};

Mat mat_identity(const FieldTower& F, int level, int n);
Mat mat_scalar(const FieldTower& F, int level, int n, FFElem c);
Mat mat_mul(const FieldTower& F, const Mat& x, const Mat& y);
Mat mat_add(const FieldTower& F, const Mat& x, const Mat& y);
Mat mat_sub(const FieldTower& F, const Mat& x, const Mat& y);
Mat mat_pow(const FieldTower& F, Mat x, long long e);
FFElem mat_trace(const FieldTower& F, const Mat& x);
FFElem mat_det(const FieldTower& F, Mat x);
// throws on singular input
Mat mat_inverse(const FieldTower& F, const Mat& x);
bool mat_invertible(const FieldTower& F, const Mat& x);
int mat_rank(const FieldTower& F, Mat x);
// basis of the right kernel, as column vectors
std::vector<std::vector<FFElem>> mat_kernel(const FieldTower& F, Mat x);

// Polynomial over one tower level, little-endian coefficient codes.
struct FPoly {
  int level = 1;
  std::vector<long long> c;

  int deg() const { return (int)c.size() - 1; }
  bool is_zero() const { return c.empty(); }
  FFElem coeff(int i) const { return {level, i < (int)c.size() ? c[i] : -1}; }
};

FPoly poly_from(const FieldTower& F, int level, const std::vector<FFElem>& coeffs);
FPoly poly_mul(const FieldTower& F, const FPoly& x, const FPoly& y);
FPoly poly_add(const FieldTower& F, const FPoly& x, const FPoly& y);
FPoly poly_mod(const FieldTower& F, FPoly x, const FPoly& m);
FPoly poly_divexact(const FieldTower& F, const FPoly& x, const FPoly& d);
FPoly poly_gcd(const FieldTower& F, FPoly x, FPoly y);
FPoly poly_monic(const FieldTower& F, FPoly x);
FPoly poly_powmod(const FieldTower& F, FPoly x, long long e, const FPoly& m);
FFElem poly_eval(const FieldTower& F, const FPoly& f, FFElem x);
Mat poly_eval_mat(const FieldTower& F, const FPoly& f, const Mat& A);
bool poly_irreducible(const FieldTower& F, const FPoly& f);

// characteristic polynomial det(xI - A), monic of degree n
FPoly char_poly(const FieldTower& F, const Mat& A);

// monic irreducible factors with multiplicities, sorted by (degree,
// coefficient codes) for determinism
std::vector<std::pair<FPoly, int>> poly_factor(const FieldTower& F, const FPoly& f);

// all monic irreducible polynomials of the given degree over the level,
// in coefficient counting order; excludes X when exclude_x is set
std::vector<FPoly> irreducibles(const FieldTower& F, int level, int degree,
                                bool exclude_x);

// a root of an irreducible polynomial of degree r over `level`, found in
// level*r of the tower
FFElem irreducible_root(const FieldTower& F, const FPoly& f);

/*
  Coordinates of F_{q^D} over the subfield F_{q^dsub} with respect to the
  power basis 1, g_D, ..., g_D^{m-1} (m = D/dsub).  Gives the regular
  representation F_{q^D}^x -> GL_m(F_{q^dsub}) used to realize twisted torus
  coordinates inside the matrix groups.
*/
class SubfieldBasis {
public:
  SubfieldBasis(const FieldTower& F, int dsub, int D);

  int m() const { return m_; }
  std::vector<FFElem> coords_of(FFElem x) const;         // length m, level dsub
  FFElem from_coords(const std::vector<FFElem>& c) const;
  Mat mult_matrix(FFElem z) const;                       // m x m over dsub
  // inverse of mult_matrix on its image; nullopt if the block is not a
  // multiplication matrix
  std::optional<FFElem> element_of_mult_matrix(const Mat& b) const;

private:
  const FieldTower* F_;
  int dsub_, D_, m_, N_;             // N = a*D, dimension over F_p
  std::vector<std::vector<long long>> binv_;  // N x N over F_p
};

}  // namespace glf
