#pragma once

#include "glf/chartab.hpp"

namespace glf {

// F-stable maximal torus type: one partition per general-linear block.
// For GL_n the F-conjugacy classes of the Weyl group are cycle types, so
// partitions classify the tori; type lambda has points prod_j F_{q^{d lambda_j}}^x.
struct TorusType {
  std::vector<Partition> per_block;

  int total_parts() const;
  int epsilon() const { return total_parts() % 2 == 0 ? 1 : -1; }
  std::string str() const;
  bool operator==(const TorusType& o) const { return per_block_parts() == o.per_block_parts(); }
  bool operator<(const TorusType& o) const { return per_block_parts() < o.per_block_parts(); }
  std::vector<std::vector<int>> per_block_parts() const;
};

std::vector<TorusType> torus_types(const StandardGroupSpec& spec);

// Linear character of T^F: one residue mod q^{level_j} - 1 per coordinate.
struct TorusCharacter {
  std::vector<long long> residues;
};

// Embedded realization of a torus type inside the matrix group: coordinate j
// is the image of F_{q^{level_j}}^x under the regular representation over
// the block field.
class TorusInstance {
public:
  struct Coord {
    int block;      // group block index
    int part;       // partition part (size over the block field)
    int level;      // tower level d * part
    long long size; // q^level - 1
    int offset;     // row offset inside the block matrix
  };

  TorusInstance(const FieldTower& F, const StandardGroupSpec& spec, TorusType type);

  const TorusType& type() const { return type_; }
  const FieldTower& tower() const { return *F_; }
  const StandardGroupSpec& group_spec() const { return spec_; }
  const std::vector<Coord>& coords() const { return coords_; }
  int num_coords() const { return (int)coords_.size(); }
  long long order() const { return order_; }

  GroupElement element(const std::vector<long long>& logs) const;
  // membership test with coordinate extraction
  std::optional<std::vector<long long>> coords_of(const GroupElement& g) const;

  long long num_points() const { return order_; }
  std::vector<long long> point_logs(long long index) const;
  long long point_index(const std::vector<long long>& logs) const;

  cplx char_eval(const TorusCharacter& theta, const std::vector<long long>& logs) const;
  // values of theta on all points, in point-index order
  std::vector<cplx> char_values(const TorusCharacter& theta) const;
  FFElem trace_of_point(const std::vector<long long>& logs) const;

private:
  const FieldTower* F_;
  StandardGroupSpec spec_;
  TorusType type_;
  std::vector<Coord> coords_;
  std::vector<SubfieldBasis> bases_;
  long long order_ = 1;
};

/*
  Dual-group semisimple class label: per block, the multiset of Frobenius
  orbits of eigenvalue fractions in (Q/Z)_{p'}.  Orbits are under
  multiplication by q, keyed by their minimal element, valued as
  (orbit size, multiplicity).  Geometric conjugacy of DL pairs is equality
  of labels.
*/
struct SemisimpleLabel {
  std::vector<std::map<Frac, std::pair<int, int>>> blocks;

  int weight() const;
  std::string str() const;
  bool operator==(const SemisimpleLabel& o) const { return blocks == o.blocks; }
  bool operator<(const SemisimpleLabel& o) const;
};

SemisimpleLabel geometric_label(const FieldTower& F, const TorusInstance& torus,
                                const TorusCharacter& theta);

// canonical DL pair realizing a single-block label: torus type = orbit-size
// cycle type, character residues from the orbit minima
std::pair<TorusType, TorusCharacter> realize_dl_pair(const FieldTower& F,
                                                     const SemisimpleLabel& label);

struct LusztigSeries {
  SemisimpleLabel label;
  std::vector<int> members;  // row indices into the CharacterTable
};

enum class DLPath { element_sum, class_combinatorial };

/*
  Deligne-Lusztig induction and restriction at the class-function level,
  through the standard character formula
    R_T^G(f)(su) = |C(s)^F|^{-1} sum_{x in G^F, x^{-1}sx in T^F}
                     f(x^{-1}sx) prod_alpha Q^{C(s)_alpha}(...)
  with Green-polynomial factors per centralizer factor.  The element sum
  over x is the default; the class-combinatorial path replaces it by a sum
  over torus points conjugate to s (the two are checked against each other).
  Per-(torus, class) data is cached.
*/
class DLEngine {
public:
  explicit DLEngine(const ClassTable& table, DLPath path = DLPath::element_sum);

  const ClassTable& table() const { return *table_; }
  const FieldTower& tower() const { return table_->tower(); }
  const TorusInstance& torus(const TorusType& t);

  // R_T^G of an arbitrary function on T^F given by values per point index
  ClassFunction induce(const TorusType& T, const std::vector<cplx>& fvals);
  ClassFunction dl_character(const TorusType& T, const TorusCharacter& theta);
  // adjoint: values of *R_T^G(f) per point index
  std::vector<cplx> restrict_to_torus(const ClassFunction& f, const TorusType& T);

  // all characters of T^F, enumerated as residue tuples in point-index order
  std::vector<TorusCharacter> all_characters(const TorusType& T);

  std::vector<LusztigSeries> lusztig_series(const CharacterTable& chars);

  // #{x in G^F : x T x^{-1} = T', theta o ad(x) = theta'} / |T^F|
  long long transporter_count(const TorusType& T1, const TorusCharacter& th1,
                              const TorusType& T2, const TorusCharacter& th2);

  // term list of the character formula for one (torus, class)
  struct Term {
    long long point = 0;  // torus point index
    long long green = 0;  // product of Green-polynomial factors
  };
  const std::vector<std::vector<Term>>& terms(const TorusType& T);

private:
  long long green_product(const TorusInstance& inst, const std::vector<long long>& logs,
                          const ConjClass& cc);

  const ClassTable* table_;
  DLPath path_;
  std::map<std::vector<std::vector<int>>, TorusInstance> tori_;
  std::map<std::vector<std::vector<int>>, std::vector<std::vector<Term>>> terms_;
  std::map<std::pair<int, long long>, GreenTable> green_;
  std::vector<GroupElement> inverses_;
};

// inner product on torus functions: (1/|T|) sum_t a(t) conj(b(t))
cplx torus_inner(const TorusInstance& inst, const std::vector<cplx>& a,
                 const std::vector<cplx>& b);

}  // namespace glf
