#pragma once

#include "glf/fourier.hpp"

namespace glf {

/*
  Integer weight matrix describing a morphism of the dual torus into the
  diagonal torus of GL_n: row i is the character lambda_i of T-dual, read as
  a cocharacter of T through X(T-dual) = Y(T).  The row multiset must be
  stable under the Weyl group permuting coordinates within each block of the
  (split) base group, which is exactly what makes the induced block
  permutations w -> w' well defined.
*/
struct RhoFlatSpec {
  std::vector<std::vector<int>> rows;

  int n() const { return (int)rows.size(); }
  int m() const { return rows.empty() ? 0 : (int)rows[0].size(); }
  void validate(const StandardGroupSpec& G) const;
};

// element of W_G(T) for a split block group: a permutation of the m torus
// coordinates preserving blocks
struct WeylElem {
  std::vector<int> perm;
};

std::vector<WeylElem> weyl_elements(const StandardGroupSpec& G);
int weyl_length(const WeylElem& w);  // inversion count

// centralizer of the image torus: rows grouped by equal weight vectors
struct LeviData {
  std::vector<std::vector<int>> weights;  // distinct weights, canonical order
  std::vector<int> mult;                  // a_j
  std::vector<int> row_to_weight;
  std::vector<std::vector<int>> weight_rows;  // row indices per weight, ascending

  StandardGroupSpec split_spec() const;  // prod_j GL_{a_j} over F_q
};

LeviData levi_of_weights(const RhoFlatSpec& W);

// block permutation w' of the distinct weights: v_{w'(j)} = v_j o w^{-1}
std::vector<int> weyl_transport(const WeylElem& w, const LeviData& L);

// cycles of a permutation in canonical order (longest first, then smallest
// representative); each cycle starts at its smallest element
std::vector<std::vector<int>> permutation_cycles(const std::vector<int>& perm);

// twisted form of the Levi under w': one GL_a(F_{q^c}) block per w'-cycle
struct TwistedLevi {
  StandardGroupSpec spec;
  std::vector<std::vector<int>> cycles;  // over weight indices, aligned with spec.blocks
};
TwistedLevi twisted_levi_spec(const LeviData& L, const std::vector<int>& wprime);

// twisted maximal torus T_w of the base group, with the cycle of w attached
// to each coordinate of the canonical TorusInstance
struct TwistedTorus {
  TorusType type;
  std::vector<std::vector<int>> cycles;  // aligned with TorusInstance coords
};
TwistedTorus twisted_torus(const StandardGroupSpec& G, const WeylElem& w);

/*
  The point map rho_w : (L'_{w'})^F -> T_w^F.  Block determinants give one
  unit z_j in F_{q^{c_j}}^x per w'-cycle; the torus coordinates are the
  monomials x_u = prod_j z_j^{v_j[u]} with non-representative cycle members
  supplied by Frobenius powers.  The result is checked to be wF-fixed.
*/
class RhoPointMap {
public:
  RhoPointMap(const FieldTower& F, const StandardGroupSpec& G, const RhoFlatSpec& W,
              const WeylElem& w);

  const TwistedLevi& levi() const { return levi_; }
  const TwistedTorus& torus() const { return torus_; }
  const WeylElem& weyl() const { return w_; }
  const LeviData& levi_data() const { return ld_; }
  const RhoFlatSpec& weights() const { return W_; }
  int common_level() const { return lcm_level_; }

  // torus coordinate logs from one determinant log per levi cycle
  std::vector<long long> push_tuple(const std::vector<long long>& zlogs) const;
  // apply to a point of (L'_{w'})^F
  std::vector<long long> apply(const GroupElement& l) const;

private:
  const FieldTower* F_;
  StandardGroupSpec G_;
  RhoFlatSpec W_;
  WeylElem w_;
  LeviData ld_;
  TwistedLevi levi_;
  TwistedTorus torus_;
  int lcm_level_ = 1;
};

// psi o Tr on the F-points of a (possibly twisted) block group
cplx phi_levi(const FieldTower& F, const GroupElement& g);

// det-fiber sums of psi o Tr over GL_a(F_{q^level}), indexed by the log of
// the determinant
std::vector<cplx> det_pushforward_psi_tr(const FieldTower& F, int a, int level,
                                         long long budget = 100000);

// (rho_w)_!(psi o Tr on (L'_{w'})^F) as values on T_w^F points
std::vector<cplx> push_levi_function(const RhoPointMap& rho, const TorusInstance& target,
                                     long long budget = 100000,
                                     bool enumerate_directly = false);

struct WSummand {
  WeylElem w;
  TorusType torus_type;
  StandardGroupSpec levi;
  CPair constant;
};

// geometric pipeline:
//   phi = |W|^{-1} sum_w c_{T_w, L'_{w'}} R_{T_w}^G((rho_w)_! psi o Tr)
ClassFunction bk_kernel_geometric(const RhoFlatSpec& W, DLEngine& dl,
                                  long long push_budget = 100000,
                                  std::vector<WSummand>* summands = nullptr);

// label transfer: expand the label to a Frobenius-coherent coordinate tuple,
// apply the weight rows, regroup the results into q-orbits
SemisimpleLabel transfer_label(const FieldTower& F, const SemisimpleLabel& s,
                               const RhoFlatSpec& W);

struct SpectralKernel {
  GammaFunction gamma;
  ClassFunction kernel;
  // per series: (source label, transferred label)
  std::vector<std::pair<SemisimpleLabel, SemisimpleLabel>> labels;
};

// spectral pipeline: gamma per series through the transferred label's Gauss
// sum, then Fourier inversion
SpectralKernel bk_kernel_spectral(const RhoFlatSpec& W, DLEngine& dl,
                                  const CharacterTable& chars,
                                  const std::vector<LusztigSeries>& series);

struct TransferReport {
  ClassFunction geometric;
  ClassFunction spectral;
  std::vector<double> deviation;
  double max_dev = 0;
  double tolerance = 1e-6;
  bool pass = false;
  std::vector<WSummand> summands;
};

TransferReport compare_kernels(const RhoFlatSpec& W, DLEngine& dl,
                               const CharacterTable& chars,
                               const std::vector<LusztigSeries>& series,
                               double tol = 1e-6, long long push_budget = 100000);

// the two routes to phi^{T_w}: through the full twisted Levi and through its
// diagonal torus; they must agree as functions on T_w^F
struct RouteComparison {
  std::vector<cplx> levi_route;   // c_{T_w,L'_{w'}} (rho_w)_! psi o Tr
  std::vector<cplx> torus_route;  // c_{T_w,T'_{w'}} (rho_{w,T'})_! psi o Tr
  double max_dev = 0;
};
RouteComparison torus_levi_routes(const RhoPointMap& rho, const TorusInstance& target,
                                  long long budget = 100000);

// tower levels needed to run both pipelines
std::vector<int> transfer_required_levels(const StandardGroupSpec& G, const RhoFlatSpec& W);

}  // namespace glf
