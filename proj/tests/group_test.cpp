#include <doctest.h>

#include <algorithm>
#include <glf/group.hpp>
#include <set>

using namespace glf;

namespace {
Mat from_ints(const FieldTower& F, int level, int n,
              std::vector<std::vector<long long>> rows) {
  Mat m(level, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, F.from_int(level, rows[i][j]));
  return m;
}
}  // namespace

TEST_CASE("spec derived data") {
  StandardGroupSpec gl23{{{2, 1}}};
  CHECK(gl23.order(3) == 48);
  CHECK(gl23.order_pprime(3) == 16);
  CHECK(gl23.dim_v() == 1);
  CHECK(gl23.epsilon() == 1);
  StandardGroupSpec gl32{{{3, 1}}};
  CHECK(gl32.order(2) == 168);
  CHECK(gl32.epsilon() == -1);
  StandardGroupSpec gl2f9{{{2, 2}}};
  CHECK(gl2f9.order(3) == 5760);
  CHECK(gl2f9.dim_v() == 2);
  CHECK(gl2f9.dimension() == 8);
}

TEST_CASE("class tables at desk scale") {
  FieldTower F3(3, 1, {1, 2});
  StandardGroupSpec gl1{{{1, 1}}};
  ClassTable t1(F3, gl1);
  CHECK(t1.num_classes() == 2);
  for (const auto& c : t1.classes()) CHECK(c.size == 1);

  ClassTable t2(F3, StandardGroupSpec{{{2, 1}}});
  CHECK(t2.num_classes() == 8);
  CHECK(t2.group_order() == 48);
  long long sum = 0;
  for (const auto& c : t2.classes()) {
    sum += c.size;
    CHECK(c.size * c.centralizer_order == 48);
  }
  CHECK(sum == 48);
  CHECK(t2.identity_index() == 0);

  FieldTower F2(2, 1, {1, 2, 3});
  ClassTable t3(F2, StandardGroupSpec{{{3, 1}}});
  CHECK(t3.num_classes() == 6);
  CHECK(t3.group_order() == 168);
}

TEST_CASE("classes agree with brute-force orbit enumeration") {
  FieldTower F(3, 1, {1, 2});
  ClassTable t(F, StandardGroupSpec{{{2, 1}}});
  const auto& elems = t.elements();
  REQUIRE(elems.size() == 48);
  // conjugation orbits computed directly
  std::set<std::vector<long long>> seen;
  std::vector<long long> orbit_sizes;
  for (const auto& g : elems) {
    if (seen.count(ge_encode(g))) continue;
    std::set<std::vector<long long>> orbit;
    for (const auto& x : elems) {
      GroupElement c = ge_mul(F, ge_mul(F, ge_inverse(F, x), g), x);
      orbit.insert(ge_encode(c));
    }
    for (auto& e : orbit) seen.insert(e);
    orbit_sizes.push_back((long long)orbit.size());
  }
  CHECK(orbit_sizes.size() == 8);
  std::vector<long long> table_sizes;
  for (const auto& c : t.classes()) table_sizes.push_back(c.size);
  std::sort(orbit_sizes.begin(), orbit_sizes.end());
  std::sort(table_sizes.begin(), table_sizes.end());
  CHECK(orbit_sizes == table_sizes);
}

TEST_CASE("jordan decomposition") {
  FieldTower F(3, 1, {1, 2});
  ClassTable t(F, StandardGroupSpec{{{2, 1}}});
  GroupElement g;
  g.blocks.push_back(from_ints(F, 1, 2, {{2, 2}, {0, 2}}));
  auto [s, u] = t.jordan_decompose(g);
  CHECK(s.blocks[0] == from_ints(F, 1, 2, {{2, 0}, {0, 2}}));
  CHECK(u.blocks[0] == from_ints(F, 1, 2, {{1, 1}, {0, 1}}));
  CHECK(ge_mul(F, s, u) == g);
  // on every class: su = us = g, coprime orders
  for (const auto& c : t.classes()) {
    CHECK(ge_mul(F, c.s, c.u) == c.rep);
    CHECK(ge_mul(F, c.u, c.s) == c.rep);
    long long os = t.element_order(c.s), ou = t.element_order(c.u);
    CHECK(std::gcd(os, ou) == 1);
    CHECK(os % 3 != 0);
    bool upow = ou == 1;
    for (long long v = 3; v <= ou; v *= 3) upow = upow || (ou == v);
    CHECK(upow);
  }
  // unipotent g -> (1, g); semisimple g -> (g, 1)
  GroupElement uni;
  uni.blocks.push_back(from_ints(F, 1, 2, {{1, 1}, {0, 1}}));
  auto [s2, u2] = t.jordan_decompose(uni);
  CHECK(s2 == ge_identity(F, t.spec()));
  CHECK(u2 == uni);
}

TEST_CASE("semisimple centralizers") {
  FieldTower F(3, 1, {1, 2});
  ClassTable t(F, StandardGroupSpec{{{2, 1}}});
  // central element -> whole group
  GroupElement z;
  z.blocks.push_back(from_ints(F, 1, 2, {{2, 0}, {0, 2}}));
  auto cz = t.semisimple_centralizer(z);
  REQUIRE(cz.spec.blocks.size() == 1);
  CHECK(cz.spec.blocks[0].n == 2);
  CHECK(cz.spec.blocks[0].d == 1);
  // split regular -> GL1 x GL1
  GroupElement d12;
  d12.blocks.push_back(from_ints(F, 1, 2, {{1, 0}, {0, 2}}));
  auto cd = t.semisimple_centralizer(d12);
  REQUIRE(cd.spec.blocks.size() == 2);
  CHECK(cd.spec.order(3) == 4);
  // irreducible characteristic polynomial -> GL1(F_9), order 8
  GroupElement cox;
  cox.blocks.push_back(from_ints(F, 1, 2, {{0, 2}, {1, 0}}));
  auto cc = t.semisimple_centralizer(cox);
  REQUIRE(cc.spec.blocks.size() == 1);
  CHECK(cc.spec.blocks[0].n == 1);
  CHECK(cc.spec.blocks[0].d == 2);
  CHECK(cc.spec.order(3) == 8);
  // non-semisimple input rejected
  GroupElement uni;
  uni.blocks.push_back(from_ints(F, 1, 2, {{1, 1}, {0, 1}}));
  CHECK_THROWS_AS(t.semisimple_centralizer(uni), Error);
}

TEST_CASE("centralizer orders match brute force") {
  FieldTower F3(3, 1, {1, 2});
  ClassTable t2(F3, StandardGroupSpec{{{2, 1}}});
  FieldTower F2(2, 1, {1, 2, 3});
  ClassTable t3(F2, StandardGroupSpec{{{3, 1}}});
  for (const ClassTable* t : {&t2, &t3}) {
    const FieldTower& F = t->tower();
    for (const auto& c : t->classes()) {
      long long cnt = 0;
      for (const auto& x : t->elements())
        if (ge_mul(F, x, c.rep) == ge_mul(F, c.rep, x)) ++cnt;
      CHECK(cnt == c.centralizer_order);
      // |C_G(s)| from the factor data matches brute force too
      long long cs = 0;
      for (const auto& x : t->elements())
        if (ge_mul(F, x, c.s) == ge_mul(F, c.s, x)) ++cs;
      CHECK(cs == c.cent_s_order);
    }
  }
}

TEST_CASE("trace form") {
  FieldTower F(3, 1, {1, 2});
  StandardGroupSpec spec{{{2, 1}}};
  GroupElement id = ge_identity(F, spec);
  CHECK(trace_form(F, id) == F.from_int(1, 2));
  // GL1(F_9): x -> x + x^3
  StandardGroupSpec ext{{{1, 2}}};
  for (long long k = 0; k < 8; ++k) {
    GroupElement g;
    Mat m(2, 1, 1);
    m.set(0, 0, F.from_log(2, k));
    g.blocks.push_back(m);
    FFElem expected = F.project(F.add(F.from_log(2, k), F.frobenius(F.from_log(2, k))), 1);
    CHECK(trace_form(F, g) == expected);
  }
  // additivity across blocks
  StandardGroupSpec prod{{{1, 1}, {1, 1}}};
  GroupElement g2;
  Mat a(1, 1, 1), b(1, 1, 1);
  a.set(0, 0, F.from_int(1, 2));
  b.set(0, 0, F.from_int(1, 1));
  g2.blocks = {a, b};
  CHECK(trace_form(F, g2) == F.from_int(1, 0));
}

TEST_CASE("sign identity for torus types") {
  // (-1)^{l(w)} = eps_G eps_{T_w} for all w in S_n, n <= 5
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int inversions = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (perm[i] > perm[j]) ++inversions;
      // cycle count of the permutation
      std::vector<bool> vis(n, false);
      int cycles = 0;
      for (int i = 0; i < n; ++i) {
        if (vis[i]) continue;
        ++cycles;
        for (int j = i; !vis[j]; j = perm[j]) vis[j] = true;
      }
      int lhs = inversions % 2 == 0 ? 1 : -1;
      int eps_g = n % 2 == 0 ? 1 : -1;
      int eps_t = cycles % 2 == 0 ? 1 : -1;
      CHECK(lhs == eps_g * eps_t);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("budget errors") {
  FieldTower F(5, 1, {1, 2});
  CHECK_THROWS_AS(ClassTable(F, StandardGroupSpec{{{2, 1}}}, 100), BudgetError);
}

TEST_CASE("product groups") {
  FieldTower F(3, 1, {1});
  ClassTable t(F, StandardGroupSpec{{{1, 1}, {1, 1}}});
  CHECK(t.num_classes() == 4);
  CHECK(t.group_order() == 4);
  CHECK(t.elements().size() == 4);
}
