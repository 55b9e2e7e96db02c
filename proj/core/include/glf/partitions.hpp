#pragma once

#include <map>
#include <string>
#include <vector>

#include "glf/common.hpp"

namespace glf {

// Integer partition with weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;                 // |lambda|
  int length() const { return (int)parts.size(); }
  long long n_value() const;        // n(lambda) = sum (i-1) lambda_i
  Partition conjugate() const;
  std::string str() const;

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator!=(const Partition& o) const { return parts != o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }
};

// All partitions of n in descending lexicographic order, (n) first.
std::vector<Partition> partitions(int n);

// Irreducible S_n character chi^lambda at cycle type mu (Murnaghan-Nakayama).
long long sym_char(const Partition& lambda, const Partition& mu);

// Kostka-Foulkes polynomial K_{lambda,mu}(t) as coefficient vector
// (index = power of t), computed as the charge generating function over
// semistandard tableaux of shape lambda and content mu.
std::vector<long long> kostka_foulkes(const Partition& lambda, const Partition& mu);

// Green polynomial of GL_n(F_q) in the Deligne-Lusztig normalization
//   Q_rho(mu) = R_{T_rho}^{GL_n}(1)(u_mu),
// computed as q^{n(mu)} sum_lambda chi^lambda(rho) K_{lambda,mu}(1/q).
long long green_polynomial(const Partition& rho, const Partition& mu, long long q);

// All values Q_rho(mu) for partitions of n, rows = torus type, cols =
// unipotent class, both in the canonical partition order.
struct GreenTable {
  int n = 0;
  long long q = 0;
  std::vector<Partition> index;                  // partitions of n
  std::vector<std::vector<long long>> values;    // values[rho][mu]

  long long value(const Partition& rho, const Partition& mu) const;
};

GreenTable build_green_table(int n, long long q);

}  // namespace glf
