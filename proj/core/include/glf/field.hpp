#pragma once

#include <map>
#include <optional>
#include <vector>

#include "glf/common.hpp"

namespace glf {

// Element of F_{q^d}, stored as a discrete log with respect to the level's
// distinguished generator g_d.  code == -1 marks zero.
struct FFElem {
  int level = 1;
  long long code = -1;

  bool is_zero() const { return code < 0; }
  bool operator==(const FFElem& o) const { return level == o.level && code == o.code; }
  bool operator!=(const FFElem& o) const { return !(*this == o); }
};

enum class GeneratorSystem { canonical, alternate };

/*
  Tower of finite fields F_{q^d} (q = p^a) over the levels requested at
  construction.  Each level carries a defining polynomial over F_p whose root
  g_d is a primitive element, chosen as the first polynomial in counting
  order that is irreducible, primitive, and norm-compatible with every lower
  tower level:  g_{d'}^{(q^{d'}-1)/(q^d-1)} is a root of the level-d
  polynomial whenever d | d'.  Compatibility makes every embedding, norm and
  subfield test pure arithmetic on discrete logs, and pins the identification
  g_d <-> 1/(q^d-1) in (Q/Z)_{p'} together with zeta_{q^d-1} = exp(2*pi*i/(q^d-1)).

  Immutable after construction.
*/
class FieldTower {
public:
  FieldTower(long long p, int a, std::vector<int> levels,
             long long level_budget = 1000000,
             GeneratorSystem gen = GeneratorSystem::canonical);

  long long p() const { return p_; }
  int a() const { return a_; }
  long long q() const { return q_; }
  bool has_level(int d) const { return levels_.count(d) != 0; }
  std::vector<int> levels() const;

  // q^d - 1, the multiplicative group order at level d.
  long long unit_order(int d) const { return level(d).size - 1; }
  long long field_size(int d) const { return level(d).size; }
  const std::vector<long long>& defining_poly(int d) const { return level(d).poly; }

  FFElem zero(int d) const { return {d, -1}; }
  FFElem one(int d) const { return {d, 0}; }
  FFElem gen(int d) const { return {d, 1 % unit_order(d)}; }
  // element g_d^k (k may be any integer residue)
  FFElem from_log(int d, long long k) const;
  // c * 1 for c in F_p
  FFElem from_int(int d, long long c) const;

  FFElem mul(FFElem x, FFElem y) const;
  FFElem add(FFElem x, FFElem y) const;
  FFElem sub(FFElem x, FFElem y) const;
  FFElem neg(FFElem x) const;
  FFElem inv(FFElem x) const;
  FFElem pow(FFElem x, long long e) const;
  // x^(q^t), the t-th power of the arithmetic Frobenius over F_q
  FFElem frobenius(FFElem x, int t = 1) const;

  bool in_subfield(FFElem x, int dsub) const;
  FFElem embed(FFElem x, int dto) const;
  // inverse of embed; x must lie in the embedded subfield
  FFElem project(FFElem x, int dsub) const;

  // x * F(x) * ... * F^{r-1}(x) down to level dsub (zero maps to zero)
  FFElem norm_to(FFElem x, int dsub) const;
  FFElem trace_to(FFElem x, int dsub) const;
  // absolute trace into F_p, returned as an integer in [0, p)
  long long trace_to_prime(FFElem x) const;

  // psi_d(x) = exp(2 pi i lift(Tr_{F_{q^d}/F_p} x) / p)
  cplx additive_char(FFElem x) const;
  // theta_k(g_d^j) = exp(2 pi i k j / (q^d - 1)); errors on zero
  cplx mult_char_eval(long long k, FFElem x) const;

  // orbit of k under multiplication by q mod (q^d - 1): (size, minimal rep)
  std::pair<int, long long> frobenius_orbit(long long k, int d) const;

  // the fraction k/(q^d-1) in (Q/Z)_{p'}
  Frac fraction_of(long long k, int d) const { return Frac(k, unit_order(d)); }

  // base-p coordinate vector of x with respect to the power basis of the
  // level's defining polynomial (length a*d), and its inverse
  std::vector<long long> rep_digits(FFElem x) const;
  FFElem from_digits(int d, const std::vector<long long>& digits) const;

private:
  struct Level {
    int d = 1;
    int n = 1;             // degree over F_p
    long long size = 0;    // p^n
    std::vector<long long> poly;      // monic defining polynomial over F_p
    std::vector<long long> exp_rep;   // log -> packed base-p representation
    std::vector<long long> log_of;    // packed rep -> log (-1 for zero)
  };

  const Level& level(int d) const;
  void build_level(int d, long long budget, GeneratorSystem gen);

  long long p_;
  int a_;
  long long q_;
  std::map<int, Level> levels_;
};

}  // namespace glf
