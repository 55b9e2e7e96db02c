#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glf/linalg.hpp"
#include "glf/partitions.hpp"

namespace glf {

// One general-linear block GL_n(F_{q^d}).
struct GroupBlock {
  int n = 1;
  int d = 1;
};

// F-points of a product of general-linear blocks over the q-tower,
// prod_i GL_{n_i}(F_{q^{d_i}}).
struct StandardGroupSpec {
  std::vector<GroupBlock> blocks;

  long long order(long long q) const;
  long long order_pprime(long long q) const;   // prod_{i,j} (q^{d_i j} - 1)
  long long dimension() const;                 // sum d_i n_i^2
  long long dim_v() const;                     // sum d_i n_i (n_i - 1) / 2
  int split_rank() const;                      // sum n_i
  int epsilon() const { return split_rank() % 2 == 0 ? 1 : -1; }
  bool is_split() const;                       // all d_i = 1
  std::string str() const;

  // tower levels class and torus machinery needs: every d_i * k, k <= n_i
  std::vector<int> required_levels() const;
};

struct GroupElement {
  std::vector<Mat> blocks;
  bool operator==(const GroupElement& o) const { return blocks == o.blocks; }
};

GroupElement ge_identity(const FieldTower& F, const StandardGroupSpec& spec);
GroupElement ge_mul(const FieldTower& F, const GroupElement& a, const GroupElement& b);
GroupElement ge_inverse(const FieldTower& F, const GroupElement& a);
GroupElement ge_pow(const FieldTower& F, GroupElement a, long long e);
std::vector<long long> ge_encode(const GroupElement& a);

// sum over blocks of Tr_{F_{q^{d_i}}/F_q}(matrix trace); level-1 result
FFElem trace_form(const FieldTower& F, const GroupElement& g);

// Data of one centralizer factor GL_m(F_{q^{d r}}) of a semisimple element:
// the Frobenius orbit of eigenvalues and its multiplicity.
struct EigenFactor {
  Frac orbit_min;        // minimal eigenvalue fraction in (Q/Z)_{p'}
  int r = 1;             // orbit size under q^d (degree of the factor)
  int m = 1;             // multiplicity
  Partition unip;        // Jordan type of the class's unipotent part here
  FFElem root;           // one eigenvalue, at level d * r
};

struct SemisimpleCentralizer {
  StandardGroupSpec spec;
  std::vector<std::vector<EigenFactor>> factors;  // per block of G
};

struct ConjClass {
  GroupElement rep;
  long long size = 0;
  long long centralizer_order = 0;
  GroupElement s, u;          // Jordan pair, s u = u s = rep
  long long element_order = 0;
  long long cent_s_order = 0;  // |C_G(s)^F|
  std::vector<std::vector<EigenFactor>> eigen;  // per block
  std::string key;
};

/*
  Conjugacy data of the F-point group.  Classes are parametrized by maps
  {monic irreducible polynomials != X over F_{q^{d_i}}} -> partitions with
  total degree weight n_i per block; representatives are generalized Jordan
  matrices.  Ordering is canonical: factors by (degree, minimal eigenvalue
  fraction), partitions with more parts first, so the identity class is
  always index 0.
*/
class ClassTable {
public:
  ClassTable(const FieldTower& F, StandardGroupSpec spec,
             long long element_budget = 200000);

  const FieldTower& tower() const { return *F_; }
  const StandardGroupSpec& spec() const { return spec_; }
  long long group_order() const { return order_; }
  long long element_budget() const { return budget_; }
  int num_classes() const { return (int)classes_.size(); }
  const ConjClass& cls(int i) const { return classes_[i]; }
  const std::vector<ConjClass>& classes() const { return classes_; }
  int identity_index() const { return identity_; }
  int inverse_class(int i) const { return inverse_class_[i]; }
  int class_of_power(int i, long long t) const;

  int class_index(const GroupElement& g) const;

  // full element enumeration (budget-guarded, cached)
  const std::vector<GroupElement>& elements() const;
  const std::vector<int>& element_class() const;

  std::pair<GroupElement, GroupElement> jordan_decompose(const GroupElement& g) const;
  SemisimpleCentralizer semisimple_centralizer(const GroupElement& s) const;
  long long element_order(const GroupElement& g) const;

private:
  void build_classes();
  std::vector<std::pair<FPoly, Partition>> block_invariants(const Mat& m) const;

  const FieldTower* F_;
  StandardGroupSpec spec_;
  long long budget_;
  long long order_;
  std::vector<long long> order_factors_;  // prime factors of |G|
  std::vector<ConjClass> classes_;
  std::map<std::string, int> index_;
  std::vector<int> inverse_class_;
  int identity_ = -1;
  // cached irreducible polynomials per (level, degree), prewarmed at build
  std::map<std::pair<int, int>, std::vector<FPoly>> irr_;
  mutable std::vector<GroupElement> elements_;
  mutable std::vector<int> element_class_;
};

}  // namespace glf
