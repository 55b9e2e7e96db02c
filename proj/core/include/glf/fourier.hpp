#pragma once

#include "glf/dltheory.hpp"

namespace glf {

// A gamma function: one scalar per irreducible character of a fixed table.
struct GammaFunction {
  const CharacterTable* chars = nullptr;
  std::vector<cplx> v;

  GammaFunction() = default;
  explicit GammaFunction(const CharacterTable& c) : chars(&c), v(c.num_irreps(), 0.0) {}
  cplx operator[](int i) const { return v[i]; }
  cplx& operator[](int i) { return v[i]; }
};

// A Fourier kernel is a central function used through eq-style convolution
// F(f)(g) = sum_h phi(gh) f(h).
using KernelFunction = ClassFunction;

// Enumerated points of the Lie algebra prod_i gl_{n_i}(F_{q^{d_i}}),
// budget-guarded (the transform is quadratic in this count).
class GlSpace {
public:
  GlSpace(const FieldTower& F, StandardGroupSpec spec, long long budget = 100000);

  const StandardGroupSpec& spec() const { return spec_; }
  long long num_points() const { return total_; }
  GroupElement point(long long idx) const;
  long long index_of(const GroupElement& x) const;
  bool invertible(long long idx) const;
  // psi(Tr(x y))
  cplx pairing(const GroupElement& x, const GroupElement& y) const;

private:
  const FieldTower* F_;
  StandardGroupSpec spec_;
  long long total_ = 1;
  std::vector<long long> entry_radix_;  // field size per matrix entry
};

// F(f)(x) = sum_y psi(Tr(x y)) f(y) on the Lie algebra
std::vector<cplx> lie_fourier(const GlSpace& gl, const std::vector<cplx>& f);

// j^* o F o j_!: extend a central function by zero, transform, restrict back
ClassFunction restricted_fourier(const ClassTable& table, const ClassFunction& f,
                                 long long lie_budget = 100000);

// gamma(pi) = pi(1)^{-1} |G| (phi, conj pi)_G = pi(1)^{-1} sum_g phi(g) pi(g)
GammaFunction gamma_from_kernel(const KernelFunction& phi, const CharacterTable& chars);

// inverse of gamma_from_kernel:
//   phi(g) = |G|^{-1} sum_pi gamma(pi) pi(1) conj(pi(g))
// (the normalization that makes the convolution operator with kernel phi act
// on pi as gamma(pi) pi^vee; gamma == 1 corresponds to phi = delta_1)
KernelFunction kernel_from_gamma(const GammaFunction& gamma);

// F(f)(g) = sum_h phi(gh) f(h), evaluated on central f
ClassFunction apply_fourier_operator(const KernelFunction& phi, const ClassFunction& f);

// c_{H,G} = q^{dim V_H - dim V_G} eps_H eps_G, exactly (sign and q-power)
struct CPair {
  int sign = 1;
  long long qexp = 0;

  double value(long long q) const {
    return double(sign) * std::pow(double(q), double(qexp));
  }
  CPair times(const CPair& o) const { return {sign * o.sign, qexp + o.qexp}; }
  CPair inverse() const { return {sign, -qexp}; }
};

// dimension/sign data of a group spec or a twisted torus type
struct GroupLike {
  long long dim_v = 0;
  int eps = 1;
};
GroupLike group_like(const StandardGroupSpec& spec);
GroupLike group_like(const TorusType& type);

CPair c_pair(const GroupLike& h, const GroupLike& g);

// gamma^T(theta) = sum_{t in T^F} psi(Tr t) theta(t), a product of classical
// Gauss sums over the coordinates; never zero
cplx gauss_gamma_torus(const FieldTower& F, const TorusInstance& torus,
                       const TorusCharacter& theta);

// max over series of the largest pairwise |gamma(pi) - gamma(pi')|
double admissible_check(const GammaFunction& gamma, const std::vector<LusztigSeries>& series);

// the standard kernel psi o Tr as a class function
ClassFunction psi_trace_class_function(const ClassTable& table);

}  // namespace glf
