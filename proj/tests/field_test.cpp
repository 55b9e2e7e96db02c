#include <doctest.h>

#include <glf/field.hpp>

using namespace glf;

TEST_CASE("tower generators and compatibility") {
  FieldTower F(3, 1, {1, 2, 4});
  // g_d has exact order q^d - 1
  for (int d : {1, 2, 4}) {
    long long N = F.unit_order(d);
    FFElem g = F.gen(d);
    CHECK(F.pow(g, N) == F.one(d));
    for (long long r = 2; r * r <= N; ++r)
      if (N % r == 0) {
        CHECK(F.pow(g, N / r) != F.one(d));
        CHECK(F.pow(g, r) != F.one(d));
      }
  }
  // embed(g_d) = g_{d'}^{(q^{d'}-1)/(q^d-1)}
  for (int d : {1, 2})
    for (int dp : {2, 4}) {
      if (dp % d != 0) continue;
      long long ratio = F.unit_order(dp) / F.unit_order(d);
      CHECK(F.embed(F.gen(d), dp) == F.pow(F.gen(dp), ratio));
    }
  // embeddings are additive on a sample
  for (long long i = 0; i < 8; ++i)
    for (long long j = 0; j < 8; ++j) {
      FFElem x = F.from_log(2, i), y = F.from_log(2, j);
      CHECK(F.embed(F.add(x, y), 4) == F.add(F.embed(x, 4), F.embed(y, 4)));
    }
}

TEST_CASE("frobenius fixes the base and has order d") {
  FieldTower F(3, 1, {1, 2, 4});
  for (long long c = 0; c < 2; ++c)
    CHECK(F.frobenius(F.from_log(1, c)) == F.from_log(1, c));
  bool all_fixed = true;
  for (long long k = 0; k < F.unit_order(4); ++k) {
    FFElem x = F.from_log(4, k);
    CHECK(F.frobenius(x, 4) == x);
    if (F.frobenius(x, 2) != x) all_fixed = false;
  }
  CHECK_FALSE(all_fixed);
}

TEST_CASE("norm examples") {
  FieldTower F(3, 1, {1, 2});
  // Nr(1) = 1
  CHECK(F.norm_to(F.one(2), 1) == F.one(1));
  // q=3, r=2: Nr(g_2) = g_1
  CHECK(F.norm_to(F.gen(2), 1) == F.gen(1));
  CHECK(F.norm_to(F.zero(2), 1) == F.zero(1));
  // every fiber of Nr has exactly (q^2-1)/(q-1) = 4 elements
  std::map<long long, int> fibers;
  for (long long k = 0; k < 8; ++k) ++fibers[F.norm_to(F.from_log(2, k), 1).code];
  CHECK(fibers.size() == 2);
  for (auto& [v, n] : fibers) CHECK(n == 4);
  // norm equals x^{(q^r-1)/(q-1)} projected down
  for (long long k = 0; k < 8; ++k) {
    FFElem x = F.from_log(2, k);
    CHECK(F.norm_to(x, 1) == F.project(F.pow(x, 4), 1));
  }
}

TEST_CASE("additive character") {
  FieldTower F(3, 1, {1, 2});
  CHECK(approx_eq(F.additive_char(F.zero(1)), cplx(1, 0)));
  CHECK(approx_eq(F.additive_char(F.from_int(1, 1)), std::polar(1.0, 2 * 3.14159265358979323846 / 3)));
  cplx sum = 0;
  for (long long c = 0; c < 3; ++c) sum += F.additive_char(F.from_int(1, c));
  CHECK(approx_eq(sum, cplx(0, 0)));
  // psi_d(x) = psi_1(Tr(x)) and psi is additive
  for (long long i = 0; i < 8; ++i) {
    FFElem x = F.from_log(2, i);
    CHECK(approx_eq(F.additive_char(x), F.additive_char(F.trace_to(x, 1))));
    for (long long j = 0; j < 8; ++j) {
      FFElem y = F.from_log(2, j);
      CHECK(approx_eq(F.additive_char(F.add(x, y)),
                      F.additive_char(x) * F.additive_char(y)));
    }
  }
}

TEST_CASE("multiplicative characters") {
  FieldTower F(3, 1, {1, 2});
  for (long long k = 0; k < 8; ++k)
    CHECK(approx_eq(F.mult_char_eval(0, F.from_log(2, k)), cplx(1, 0)));
  // q=3, d=1: theta_1(2) = -1 (2 is the generator)
  CHECK(F.gen(1) == F.from_int(1, 2));
  CHECK(approx_eq(F.mult_char_eval(1, F.from_int(1, 2)), cplx(-1, 0)));
  cplx sum = 0;
  for (long long k = 0; k < 2; ++k) sum += F.mult_char_eval(1, F.from_log(1, k));
  CHECK(approx_eq(sum, cplx(0, 0)));
  CHECK_THROWS_AS(F.mult_char_eval(1, F.zero(1)), Error);
  // Frobenius twist theta_k(x^q) = theta_{qk}(x)
  for (long long k = 0; k < 8; ++k)
    for (long long j = 0; j < 8; ++j)
      CHECK(approx_eq(F.mult_char_eval(k, F.frobenius(F.from_log(2, j))),
                      F.mult_char_eval(3 * k, F.from_log(2, j))));
}

TEST_CASE("frobenius orbits") {
  FieldTower F(3, 1, {1, 2});
  auto [e0, r0] = F.frobenius_orbit(0, 2);
  CHECK(e0 == 1);
  CHECK(r0 == 0);
  auto [e1, r1] = F.frobenius_orbit(1, 2);
  CHECK(e1 == 2);
  CHECK(r1 == 1);
  auto [e4, r4] = F.frobenius_orbit(4, 2);
  CHECK(e4 == 1);
  CHECK(r4 == 4);
  // orbit sizes sum to q^d - 1 over nonzero k, plus the zero orbit
  int total = 0;
  for (long long k = 0; k < 8; ++k) {
    auto [e, r] = F.frobenius_orbit(k, 2);
    if (r == k) total += e;
  }
  CHECK(total == 8);
}

TEST_CASE("trace towers compose") {
  FieldTower F(3, 1, {1, 2, 4});
  for (long long k = 0; k < F.unit_order(4); k += 7) {
    FFElem x = F.from_log(4, k);
    CHECK(F.trace_to(x, 1) == F.trace_to(F.trace_to(x, 2), 1));
    CHECK(F.norm_to(x, 1) == F.norm_to(F.norm_to(x, 2), 1));
  }
}

TEST_CASE("non-prime base field q = 4") {
  FieldTower F(2, 2, {1, 2});
  CHECK(F.q() == 4);
  CHECK(F.unit_order(1) == 3);
  CHECK(F.unit_order(2) == 15);
  CHECK(F.embed(F.gen(1), 2) == F.pow(F.gen(2), 5));
  // additive character is valued in {1, -1} for p = 2
  for (long long k = 0; k < 15; ++k) {
    cplx v = F.additive_char(F.from_log(2, k));
    CHECK(std::abs(std::abs(v.real()) - 1.0) < 1e-12);
  }
}

TEST_CASE("level budget enforced") {
  CHECK_THROWS_AS(FieldTower(3, 1, {1, 20}), BudgetError);
}

TEST_CASE("tower construction is deterministic") {
  FieldTower F1(5, 1, {1, 2});
  FieldTower F2(5, 1, {1, 2});
  CHECK(F1.defining_poly(2) == F2.defining_poly(2));
}
