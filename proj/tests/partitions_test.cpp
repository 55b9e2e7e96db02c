#include <doctest.h>

#include <glf/partitions.hpp>

using namespace glf;

TEST_CASE("partition enumeration") {
  CHECK(partitions(0).size() == 1);
  CHECK(partitions(0)[0].length() == 0);
  auto p3 = partitions(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == Partition({3}));
  CHECK(p3[1] == Partition({2, 1}));
  CHECK(p3[2] == Partition({1, 1, 1}));
  CHECK(partitions(5).size() == 7);
}

TEST_CASE("partition derived data") {
  Partition l({3, 1});
  CHECK(l.size() == 4);
  CHECK(l.length() == 2);
  CHECK(l.n_value() == 1);
  CHECK(l.conjugate() == Partition({2, 1, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), Error);
}

TEST_CASE("symmetric group characters") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions(n)) {
      CHECK(sym_char(Partition(std::vector<int>{n}), mu) == 1);
      long long sign = (n - mu.length()) % 2 == 0 ? 1 : -1;
      CHECK(sym_char(Partition(std::vector<int>(n, 1)), mu) == sign);
    }
  CHECK(sym_char(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(sym_char(Partition({2, 1}), Partition({3})) == -1);
  CHECK(sym_char(Partition({2, 1}), Partition({2, 1})) == 0);
  CHECK_THROWS_AS(sym_char(Partition({2}), Partition({3})), Error);
  // column orthogonality at the identity: sum of squares of degrees = n!
  long long sum = 0, fact = 1;
  for (int i = 1; i <= 5; ++i) fact *= i;
  for (const auto& l : partitions(5)) {
    long long d = sym_char(l, Partition(std::vector<int>(5, 1)));
    sum += d * d;
  }
  CHECK(sum == fact);
}

TEST_CASE("kostka-foulkes polynomials") {
  auto poly = [](std::vector<long long> v) { return v; };
  CHECK(kostka_foulkes(Partition({2}), Partition({1, 1})) == poly({0, 1}));
  CHECK(kostka_foulkes(Partition({2, 1}), Partition({1, 1, 1})) == poly({0, 1, 1}));
  CHECK(kostka_foulkes(Partition({3}), Partition({2, 1})) == poly({0, 1}));
  CHECK(kostka_foulkes(Partition({2, 1}), Partition({2, 1})) == poly({1}));
  CHECK(kostka_foulkes(Partition({2, 2}), Partition({1, 1, 1, 1})) == poly({0, 0, 1, 0, 1}));
  CHECK(kostka_foulkes(Partition({1, 1}), Partition({2})).empty());
  // K_{lambda,lambda} = 1
  for (int n = 2; n <= 5; ++n)
    for (const auto& l : partitions(n))
      CHECK(kostka_foulkes(l, l) == poly({1}));
}

TEST_CASE("green polynomial examples") {
  CHECK(green_polynomial(Partition({1, 1}), Partition({1, 1}), 3) == 4);
  CHECK(green_polynomial(Partition({2}), Partition({1, 1}), 3) == -2);
  CHECK(green_polynomial(Partition({1, 1}), Partition({2}), 3) == 1);
  CHECK(green_polynomial(Partition({2}), Partition({2}), 3) == 1);
  CHECK(green_polynomial(Partition({1, 1, 1}), Partition({1, 1, 1}), 2) == 21);
}

namespace {
long long order_p_part_prime(long long n, long long q) {
  // p'-part of |GL_n| = prod (q^j - 1)
  long long r = 1;
  long long power = 1;
  for (int j = 1; j <= n; ++j) {
    power *= q;
    r *= power - 1;
  }
  return r;
}
}  // namespace

TEST_CASE("green degree and regular columns") {
  for (int n = 1; n <= 4; ++n)
    for (long long q : {2, 3}) {
      GreenTable t = build_green_table(n, q);
      Partition identity(std::vector<int>(n, 1));
      Partition regular(std::vector<int>{n});
      for (const auto& rho : t.index) {
        // Q_rho(1) = eps_G eps_T |G|_{p'} / |T|
        long long tor = 1;
        for (int part : rho.parts) {
          long long per = 1;
          for (int i = 0; i < part; ++i) per *= q;
          tor *= per - 1;
        }
        long long eps = ((n + rho.length()) % 2 == 0) ? 1 : -1;
        CHECK(t.value(rho, identity) == eps * order_p_part_prime(n, q) / tor);
        CHECK(t.value(rho, regular) == 1);
      }
    }
}
