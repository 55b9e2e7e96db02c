#pragma once

#include "glf/group.hpp"

namespace glf {

// Complex-valued function constant on the conjugacy classes of a fixed
// ClassTable, stored as one value per class in canonical class order.
struct ClassFunction {
  const ClassTable* table = nullptr;
  std::vector<cplx> v;

  ClassFunction() = default;
  explicit ClassFunction(const ClassTable& t) : table(&t), v(t.num_classes(), 0.0) {}
  ClassFunction(const ClassTable& t, std::vector<cplx> vals) : table(&t), v(std::move(vals)) {
    require((int)v.size() == t.num_classes(), "class function length mismatch");
  }
  cplx operator[](int i) const { return v[i]; }
  cplx& operator[](int i) { return v[i]; }
};

ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_scale(cplx c, const ClassFunction& a);
ClassFunction cf_conj(const ClassFunction& a);
double cf_max_abs_diff(const ClassFunction& a, const ClassFunction& b);

// (f,h)_G = (1/|G|) sum_g f(g) conj(h(g))
cplx inner_product(const ClassFunction& f, const ClassFunction& h);

// Exact cyclotomic description of one character value: sum over j of
// mult[j] * zeta_order^j.
struct CharValueLift {
  long long order = 1;
  std::vector<long long> mult;
};

/*
  Complete table of complex irreducible characters.  Values are computed
  exactly modulo a prime l = 1 (mod exponent of G) via the class algebra
  (Dixon-Schneider) and lifted onto complex roots of unity through a fixed
  discrete-log embedding, so phases are stable across runs.  Rows are sorted
  by degree, ties broken on the exact lift data.
*/
struct CharacterTable {
  const ClassTable* table = nullptr;
  std::vector<long long> degrees;
  std::vector<std::vector<cplx>> values;            // [irrep][class]
  std::vector<std::vector<CharValueLift>> lifts;    // exact metadata
  long long lift_prime = 0;

  int num_irreps() const { return (int)degrees.size(); }
  cplx value(int i, int k) const { return values[i][k]; }
  ClassFunction row(int i) const { return ClassFunction(*table, values[i]); }
};

CharacterTable dixon_table(const ClassTable& table, int max_classes = 200,
                           long long prime_bound = 10000000);

// multiplicities (f, chi_i) for every row of the table
std::vector<cplx> decompose(const CharacterTable& chars, const ClassFunction& f);

// number of Borel-fixed points per class: the permutation character on G/B
ClassFunction borel_permutation_character(const ClassTable& table);

// orthogonality residuals, for diagnostics and acceptance checks
double row_orthogonality_error(const CharacterTable& chars);
double column_orthogonality_error(const CharacterTable& chars);

}  // namespace glf
