#include <doctest.h>

#include <algorithm>
#include <glf/chartab.hpp>

using namespace glf;

TEST_CASE("cyclic group GL1(F_3)") {
  FieldTower F(3, 1, {1});
  ClassTable t(F, StandardGroupSpec{{{1, 1}}});
  CharacterTable ch = dixon_table(t);
  REQUIRE(ch.num_irreps() == 2);
  CHECK(approx_eq(ch.value(0, 0), cplx(1, 0)));
  CHECK(approx_eq(ch.value(0, 1), cplx(1, 0)));
  CHECK(approx_eq(ch.value(1, 0), cplx(1, 0)));
  CHECK(approx_eq(ch.value(1, 1), cplx(-1, 0)));
}

TEST_CASE("GL2 degree multisets") {
  FieldTower F3(3, 1, {1, 2});
  ClassTable t(F3, StandardGroupSpec{{{2, 1}}});
  CharacterTable ch = dixon_table(t);
  std::vector<long long> degs = ch.degrees;
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<long long>({1, 1, 2, 2, 2, 3, 3, 4}));
  CHECK(row_orthogonality_error(ch) < 1e-9);
  CHECK(column_orthogonality_error(ch) < 1e-9);

  FieldTower F2(2, 1, {1, 2});
  ClassTable s3(F2, StandardGroupSpec{{{2, 1}}});
  CharacterTable ch2 = dixon_table(s3);
  std::vector<long long> degs2 = ch2.degrees;
  std::sort(degs2.begin(), degs2.end());
  CHECK(degs2 == std::vector<long long>({1, 1, 2}));
}

TEST_CASE("orthogonality on larger groups") {
  FieldTower F5(5, 1, {1, 2});
  ClassTable t5(F5, StandardGroupSpec{{{2, 1}}});
  CharacterTable ch5 = dixon_table(t5);
  CHECK(ch5.num_irreps() == 24);
  CHECK(row_orthogonality_error(ch5) < 1e-9);
  CHECK(column_orthogonality_error(ch5) < 1e-9);

  FieldTower F2(2, 1, {1, 2, 3});
  ClassTable t8(F2, StandardGroupSpec{{{3, 1}}});
  CharacterTable ch8 = dixon_table(t8);
  CHECK(ch8.num_irreps() == 6);
  CHECK(row_orthogonality_error(ch8) < 1e-9);
  CHECK(column_orthogonality_error(ch8) < 1e-9);
}

TEST_CASE("inner products and decomposition") {
  FieldTower F(3, 1, {1, 2});
  ClassTable t(F, StandardGroupSpec{{{2, 1}}});
  CharacterTable ch = dixon_table(t);
  for (int i = 0; i < ch.num_irreps(); ++i)
    CHECK(approx_eq(inner_product(ch.row(i), ch.row(i)), cplx(1, 0)));
  // regular character
  ClassFunction reg(t);
  reg[t.identity_index()] = double(t.group_order());
  CHECK(approx_eq(inner_product(reg, ch.row(0)), cplx(1, 0)));
  ClassFunction delta1(t);
  delta1[t.identity_index()] = 1.0;
  CHECK(approx_eq(inner_product(delta1, ch.row(0)), cplx(1.0 / 48, 0)));
  // decompose chi_j -> unit vector; regular -> degrees
  for (int j = 0; j < ch.num_irreps(); ++j) {
    auto m = decompose(ch, ch.row(j));
    for (int i = 0; i < ch.num_irreps(); ++i)
      CHECK(approx_eq(m[i], cplx(i == j ? 1 : 0, 0)));
  }
  auto mr = decompose(ch, reg);
  for (int i = 0; i < ch.num_irreps(); ++i)
    CHECK(approx_eq(mr[i], cplx(double(ch.degrees[i]), 0)));
  // reconstruction
  ClassFunction f(t);
  for (int k = 0; k < t.num_classes(); ++k) f[k] = cplx(0.3 * k, -0.1 * k * k);
  auto mf = decompose(ch, f);
  ClassFunction rec(t);
  for (int i = 0; i < ch.num_irreps(); ++i) rec = cf_add(rec, cf_scale(mf[i], ch.row(i)));
  CHECK(cf_max_abs_diff(rec, f) < 1e-9);
}

TEST_CASE("permutation character on G/B decomposes as 1 + St") {
  FieldTower F(3, 1, {1, 2});
  ClassTable t(F, StandardGroupSpec{{{2, 1}}});
  CharacterTable ch = dixon_table(t);
  ClassFunction perm = borel_permutation_character(t);
  CHECK(approx_eq(perm[t.identity_index()], cplx(4, 0)));
  auto m = decompose(ch, perm);
  int ones = 0, threes = 0;
  for (int i = 0; i < ch.num_irreps(); ++i) {
    double mi = m[i].real();
    if (std::abs(mi - 1) < 1e-9) {
      ++ones;
      CHECK((ch.degrees[i] == 1 || ch.degrees[i] == 3));
      if (ch.degrees[i] == 3) ++threes;
    } else {
      CHECK(std::abs(mi) < 1e-9);
    }
  }
  CHECK(ones == 2);
  CHECK(threes == 1);
}

TEST_CASE("value bounds and central classes") {
  FieldTower F(3, 1, {1, 2});
  ClassTable t(F, StandardGroupSpec{{{2, 1}}});
  CharacterTable ch = dixon_table(t);
  for (int i = 0; i < ch.num_irreps(); ++i)
    for (int k = 0; k < t.num_classes(); ++k) {
      CHECK(std::abs(ch.value(i, k)) <= ch.degrees[i] + 1e-9);
      if (t.cls(k).size == 1)  // central class: |chi(z)| = chi(1)
        CHECK(std::abs(std::abs(ch.value(i, k)) - ch.degrees[i]) < 1e-9);
    }
}

TEST_CASE("structure constant consistency") {
  FieldTower F(3, 1, {1, 2});
  ClassTable t(F, StandardGroupSpec{{{2, 1}}});
  CharacterTable ch = dixon_table(t);
  const auto& elems = t.elements();
  const auto& ecls = t.element_class();
  int r = t.num_classes();
  // brute-force a_{ijk} for two fixed i
  for (int i : {1, r - 1}) {
    std::vector<std::vector<long long>> a(r, std::vector<long long>(r, 0));
    for (size_t x = 0; x < elems.size(); ++x) {
      if (ecls[x] != i) continue;
      GroupElement xinv = ge_inverse(F, elems[x]);
      for (int k = 0; k < r; ++k) ++a[t.class_index(ge_mul(F, xinv, t.cls(k).rep))][k];
    }
    for (int s = 0; s < ch.num_irreps(); ++s) {
      auto omega = [&](int c) {
        return double(t.cls(c).size) * ch.value(s, c) / double(ch.degrees[s]);
      };
      for (int j = 0; j < r; ++j) {
        cplx lhs = omega(i) * omega(j);
        cplx rhs = 0;
        for (int k = 0; k < r; ++k) rhs += double(a[j][k]) * omega(k);
        CHECK(std::abs(lhs - rhs) < 1e-6 * std::max(1.0, std::abs(lhs)));
      }
    }
  }
}

TEST_CASE("class count budget") {
  FieldTower F(3, 1, {1});
  ClassTable t(F, StandardGroupSpec{{{1, 1}}});
  CHECK_THROWS_AS(dixon_table(t, /*max_classes=*/1), BudgetError);
}
