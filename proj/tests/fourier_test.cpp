#include <doctest.h>

#include <cmath>
#include <glf/fourier.hpp>

using namespace glf;

namespace {
TorusType tt(std::vector<int> parts) {
  TorusType t;
  t.per_block.push_back(Partition(std::move(parts)));
  return t;
}
}  // namespace

TEST_CASE("lie fourier basics") {
  FieldTower F(3, 1, {1});
  GlSpace gl(F, StandardGroupSpec{{{1, 1}}});
  REQUIRE(gl.num_points() == 3);
  // delta_0 -> constant 1
  long long zero_idx = -1;
  for (long long i = 0; i < 3; ++i)
    if (gl.point(i).blocks[0].a[0] < 0) zero_idx = i;
  std::vector<cplx> d0(3, 0.0);
  d0[zero_idx] = 1.0;
  auto Fd0 = lie_fourier(gl, d0);
  for (long long i = 0; i < 3; ++i) CHECK(approx_eq(Fd0[i], cplx(1, 0)));
  // constant 1 -> q^dim delta_0
  std::vector<cplx> ones(3, 1.0);
  auto F1 = lie_fourier(gl, ones);
  for (long long i = 0; i < 3; ++i)
    CHECK(approx_eq(F1[i], i == zero_idx ? cplx(3, 0) : cplx(0, 0)));
  // f = psi -> 3 delta_{-1}: value 3 at x = 2, else 0
  std::vector<cplx> psi(3);
  for (long long i = 0; i < 3; ++i) {
    GroupElement x = gl.point(i);
    psi[i] = F.additive_char({1, x.blocks[0].a[0]});
  }
  auto Fpsi = lie_fourier(gl, psi);
  for (long long i = 0; i < 3; ++i) {
    GroupElement x = gl.point(i);
    bool is_two = x.blocks[0].a[0] == F.from_int(1, 2).code;
    CHECK(approx_eq(Fpsi[i], is_two ? cplx(3, 0) : cplx(0, 0)));
  }
}

TEST_CASE("lie fourier double transform") {
  FieldTower F(3, 1, {1, 2});
  GlSpace gl(F, StandardGroupSpec{{{2, 1}}});
  REQUIRE(gl.num_points() == 81);
  std::vector<cplx> f(81);
  for (long long i = 0; i < 81; ++i) f[i] = cplx(std::cos(0.7 * i), std::sin(1.3 * i));
  auto F2 = lie_fourier(gl, lie_fourier(gl, f));
  for (long long i = 0; i < 81; ++i) {
    GroupElement x = gl.point(i);
    GroupElement neg = x;
    for (auto& m : neg.blocks)
      for (auto& c : m.a) c = F.neg({1, c}).code;
    CHECK(std::abs(F2[gl.index_of(neg)] - 81.0 * f[i]) < 1e-9 * 100);
  }
}

TEST_CASE("restricted fourier") {
  FieldTower F(3, 1, {1, 2});
  ClassTable t(F, StandardGroupSpec{{{2, 1}}});
  // delta_1 -> psi o Tr
  ClassFunction d1(t);
  d1[t.identity_index()] = 1.0;
  ClassFunction r = restricted_fourier(t, d1);
  CHECK(cf_max_abs_diff(r, psi_trace_class_function(t)) < 1e-12);

  // GL1(F_q): constant 1 -> constant -1
  ClassTable t1(F, StandardGroupSpec{{{1, 1}}});
  ClassFunction ones(t1);
  for (int k = 0; k < t1.num_classes(); ++k) ones[k] = 1.0;
  ClassFunction r1 = restricted_fourier(t1, ones);
  for (int k = 0; k < t1.num_classes(); ++k) CHECK(approx_eq(r1[k], cplx(-1, 0)));

  // GL1(F_3): theta -> (gauss sum) theta^{-1}
  CharacterTable ch1 = dixon_table(t1);
  ClassFunction theta = ch1.row(1);  // the order-2 character
  ClassFunction rt = restricted_fourier(t1, theta);
  DLEngine dl(t1);
  const TorusInstance& inst = dl.torus(tt({1}));
  cplx gauss = gauss_gamma_torus(F, inst, TorusCharacter{{1}});
  ClassFunction expect = cf_scale(gauss, cf_conj(theta));
  CHECK(cf_max_abs_diff(rt, expect) < 1e-12);
}

TEST_CASE("gamma from kernel and back") {
  FieldTower F(3, 1, {1, 2});
  ClassTable t1(F, StandardGroupSpec{{{1, 1}}});
  CharacterTable ch1 = dixon_table(t1);
  // phi = delta_1: gamma == 1, and kernel_from_gamma inverts to delta_1
  ClassFunction d1(t1);
  d1[t1.identity_index()] = 1.0;
  GammaFunction g1 = gamma_from_kernel(d1, ch1);
  for (int i = 0; i < ch1.num_irreps(); ++i) CHECK(approx_eq(g1[i], cplx(1, 0)));
  CHECK(cf_max_abs_diff(kernel_from_gamma(g1), d1) < 1e-12);
  // phi = psi restricted to F_3^x
  ClassFunction phi = psi_trace_class_function(t1);
  GammaFunction g = gamma_from_kernel(phi, ch1);
  CHECK(approx_eq(g[0], cplx(-1, 0)));
  CHECK(approx_eq(g[1], cplx(0, std::sqrt(3.0))));
  // gamma = (-1, i sqrt 3) -> phi = psi restricted
  CHECK(cf_max_abs_diff(kernel_from_gamma(g), phi) < 1e-12);

  // round trip on pseudorandom gamma over GL2(F_3)
  ClassTable t(F, StandardGroupSpec{{{2, 1}}});
  CharacterTable ch = dixon_table(t);
  GammaFunction gr(ch);
  for (int i = 0; i < ch.num_irreps(); ++i)
    gr[i] = cplx(std::cos(2.1 * i + 0.4), std::sin(0.8 * i - 1.0));
  GammaFunction back = gamma_from_kernel(kernel_from_gamma(gr), ch);
  for (int i = 0; i < ch.num_irreps(); ++i) CHECK(std::abs(back[i] - gr[i]) < 1e-9);
}

TEST_CASE("fourier operator") {
  FieldTower F(3, 1, {1, 2});
  ClassTable t(F, StandardGroupSpec{{{2, 1}}});
  CharacterTable ch = dixon_table(t);
  // phi = delta_1: F(f)(g) = f(g^{-1})
  ClassFunction d1(t);
  d1[t.identity_index()] = 1.0;
  ClassFunction f(t);
  for (int k = 0; k < t.num_classes(); ++k) f[k] = cplx(0.2 * k, 1.0 - 0.1 * k);
  ClassFunction Ff = apply_fourier_operator(d1, f);
  for (int k = 0; k < t.num_classes(); ++k) CHECK(approx_eq(Ff[k], f[t.inverse_class(k)]));
  // linearity
  ClassFunction h(t);
  for (int k = 0; k < t.num_classes(); ++k) h[k] = cplx(-0.3 * k * k, 0.45 * k);
  ClassFunction phi = psi_trace_class_function(t);
  ClassFunction lhs = apply_fourier_operator(phi, cf_add(f, h));
  ClassFunction rhs = cf_add(apply_fourier_operator(phi, f), apply_fourier_operator(phi, h));
  CHECK(cf_max_abs_diff(lhs, rhs) < 1e-9);
  // eigen-property: F(chi) = gamma(chi) chi^vee for every row
  GammaFunction g = gamma_from_kernel(phi, ch);
  for (int i = 0; i < ch.num_irreps(); ++i) {
    ClassFunction Fc = apply_fourier_operator(phi, ch.row(i));
    ClassFunction expect = cf_scale(g[i], cf_conj(ch.row(i)));
    CHECK(cf_max_abs_diff(Fc, expect) < 1e-8);
  }
}

TEST_CASE("normalizing constants c_{H,G}") {
  StandardGroupSpec gl2{{{2, 1}}};
  StandardGroupSpec gl3{{{3, 1}}};
  CPair id = c_pair(group_like(gl2), group_like(gl2));
  CHECK(id.sign == 1);
  CHECK(id.qexp == 0);
  CPair c23 = c_pair(group_like(gl2), group_like(gl3));
  CHECK(c23.sign == -1);
  CHECK(c23.qexp == -2);
  CHECK(c23.value(3) == doctest::Approx(-1.0 / 9));
  CPair ct = c_pair(group_like(tt({2})), group_like(gl2));
  CHECK(ct.sign == -1);
  CHECK(ct.qexp == -1);
  CHECK(ct.value(3) == doctest::Approx(-1.0 / 3));
  // cocycle and inverse relations hold exactly
  std::vector<GroupLike> gs = {group_like(gl2), group_like(gl3), group_like(tt({2})),
                               group_like(tt({1, 1})), group_like(StandardGroupSpec{{{2, 2}}})};
  for (const auto& a : gs)
    for (const auto& b : gs) {
      CPair ab = c_pair(a, b), ba = c_pair(b, a);
      CHECK(ab.sign == ba.sign);
      CHECK(ab.qexp == -ba.qexp);
      for (const auto& c : gs) {
        CPair ac = c_pair(a, c), bc = c_pair(b, c);
        CPair comp = ab.times(bc);
        CHECK(comp.sign == ac.sign);
        CHECK(comp.qexp == ac.qexp);
      }
    }
}

TEST_CASE("torus gauss sums") {
  FieldTower F(3, 1, {1, 2});
  StandardGroupSpec spec{{{2, 1}}};
  TorusInstance split(F, spec, tt({1, 1}));
  TorusInstance cox(F, spec, tt({2}));
  TorusInstance gl1(F, StandardGroupSpec{{{1, 1}}}, tt({1}));
  CHECK(approx_eq(gauss_gamma_torus(F, gl1, TorusCharacter{{0}}), cplx(-1, 0)));
  CHECK(approx_eq(gauss_gamma_torus(F, gl1, TorusCharacter{{1}}), cplx(0, std::sqrt(3.0))));
  // product over coordinates
  for (long long a = 0; a < 2; ++a)
    for (long long b = 0; b < 2; ++b) {
      cplx lhs = gauss_gamma_torus(F, split, TorusCharacter{{a, b}});
      cplx rhs = gauss_gamma_torus(F, gl1, TorusCharacter{{a}}) *
                 gauss_gamma_torus(F, gl1, TorusCharacter{{b}});
      CHECK(approx_eq(lhs, rhs));
    }
  // direct summation over torus points agrees, and the sums never vanish
  for (const TorusInstance* inst : {&split, &cox}) {
    long long npts = inst->num_points();
    int ncoords = inst->num_coords();
    std::vector<TorusCharacter> chars;
    if (ncoords == 2)
      for (long long a = 0; a < 2; ++a)
        for (long long b = 0; b < 2; ++b) chars.push_back(TorusCharacter{{a, b}});
    else
      for (long long a = 0; a < 8; ++a) chars.push_back(TorusCharacter{{a}});
    for (const auto& th : chars) {
      cplx direct = 0;
      for (long long i = 0; i < npts; ++i) {
        auto logs = inst->point_logs(i);
        direct += F.additive_char(inst->trace_of_point(logs)) * inst->char_eval(th, logs);
      }
      cplx fast = gauss_gamma_torus(F, *inst, th);
      CHECK(approx_eq(direct, fast));
      CHECK(std::abs(fast) > 0.5);
      // |gauss| = q^{level/2} for nontrivial coordinates, 1 for trivial
    }
  }
}

TEST_CASE("admissibility") {
  FieldTower F(3, 1, {1, 2});
  ClassTable t(F, StandardGroupSpec{{{2, 1}}});
  CharacterTable ch = dixon_table(t);
  DLEngine dl(t);
  auto series = dl.lusztig_series(ch);
  GammaFunction constant(ch);
  for (int i = 0; i < ch.num_irreps(); ++i) constant[i] = cplx(2.5, -1.0);
  CHECK(admissible_check(constant, series) == 0.0);
  GammaFunction g = gamma_from_kernel(psi_trace_class_function(t), ch);
  CHECK(admissible_check(g, series) < 1e-8);
  GammaFunction degrees(ch);
  for (int i = 0; i < ch.num_irreps(); ++i) degrees[i] = double(ch.degrees[i]);
  CHECK(admissible_check(degrees, series) >= 2.0 - 1e-9);
}
