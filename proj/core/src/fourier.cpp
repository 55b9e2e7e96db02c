#include "glf/fourier.hpp"

#include <cmath>

namespace glf {

GlSpace::GlSpace(const FieldTower& F, StandardGroupSpec spec, long long budget)
    : F_(&F), spec_(std::move(spec)) {
  for (const GroupBlock& b : spec_.blocks) {
    long long Q = F.field_size(b.d);
    for (int i = 0; i < b.n * b.n; ++i) {
      entry_radix_.push_back(Q);
      total_ = checked_mul(total_, Q, "lie algebra size");
      if (total_ > budget)
        throw BudgetError("lie algebra of " + spec_.str(), total_, budget);
    }
  }
}

GroupElement GlSpace::point(long long idx) const {
  GroupElement g;
  size_t pos = 0;
  for (const GroupBlock& b : spec_.blocks) {
    Mat m(b.d, b.n, b.n);
    for (int i = 0; i < b.n * b.n; ++i) {
      long long Q = entry_radix_[pos++];
      m.a[i] = (idx % Q) - 1;
      idx /= Q;
    }
    g.blocks.push_back(std::move(m));
  }
  return g;
}

long long GlSpace::index_of(const GroupElement& x) const {
  long long idx = 0;
  size_t pos = entry_radix_.size();
  for (size_t bi = x.blocks.size(); bi-- > 0;) {
    const Mat& m = x.blocks[bi];
    for (size_t i = m.a.size(); i-- > 0;) {
      --pos;
      idx = idx * entry_radix_[pos] + (m.a[i] + 1);
    }
  }
  return idx;
}

bool GlSpace::invertible(long long idx) const {
  GroupElement g = point(idx);
  for (const Mat& m : g.blocks)
    if (!mat_invertible(*F_, m)) return false;
  return true;
}

cplx GlSpace::pairing(const GroupElement& x, const GroupElement& y) const {
  FFElem tr = F_->zero(1);
  for (size_t bi = 0; bi < x.blocks.size(); ++bi) {
    Mat prod = mat_mul(*F_, x.blocks[bi], y.blocks[bi]);
    tr = F_->add(tr, F_->trace_to(mat_trace(*F_, prod), 1));
  }
  return F_->additive_char(tr);
}

std::vector<cplx> lie_fourier(const GlSpace& gl, const std::vector<cplx>& f) {
  require((long long)f.size() == gl.num_points(), "function length != |gl|");
  long long n = gl.num_points();
  std::vector<GroupElement> pts(n);
  for (long long i = 0; i < n; ++i) pts[i] = gl.point(i);
  std::vector<cplx> out(n, 0.0);
  parallel_for(n, [&](long long x) {
    cplx acc = 0;
    for (long long y = 0; y < n; ++y) {
      if (f[y] == cplx(0.0, 0.0)) continue;
      acc += gl.pairing(pts[x], pts[y]) * f[y];
    }
    out[x] = acc;
  });
  return out;
}

ClassFunction restricted_fourier(const ClassTable& table, const ClassFunction& f,
                                 long long lie_budget) {
  require(f.table == &table, "class function on the wrong table");
  const FieldTower& F = table.tower();
  GlSpace gl(F, table.spec(), lie_budget);
  long long n = gl.num_points();
  // invertible points with their class indices
  std::vector<GroupElement> pts;
  std::vector<int> cls;
  for (long long i = 0; i < n; ++i) {
    if (!gl.invertible(i)) continue;
    GroupElement y = gl.point(i);
    cls.push_back(table.class_index(y));
    pts.push_back(std::move(y));
  }
  ClassFunction out(table);
  parallel_for(table.num_classes(), [&](long long k) {
    const GroupElement& rep = table.cls((int)k).rep;
    cplx acc = 0;
    for (size_t i = 0; i < pts.size(); ++i) acc += gl.pairing(rep, pts[i]) * f[cls[i]];
    out[(int)k] = acc;
  });
  return out;
}

GammaFunction gamma_from_kernel(const KernelFunction& phi, const CharacterTable& chars) {
  require(phi.table == chars.table, "kernel and table belong to different groups");
  const ClassTable& t = *chars.table;
  GammaFunction gamma(chars);
  for (int i = 0; i < chars.num_irreps(); ++i) {
    cplx acc = 0;
    for (int k = 0; k < t.num_classes(); ++k)
      acc += double(t.cls(k).size) * phi[k] * chars.value(i, k);
    gamma[i] = acc / double(chars.degrees[i]);
  }
  return gamma;
}

KernelFunction kernel_from_gamma(const GammaFunction& gamma) {
  const CharacterTable& chars = *gamma.chars;
  const ClassTable& t = *chars.table;
  ClassFunction phi(t);
  for (int k = 0; k < t.num_classes(); ++k) {
    cplx acc = 0;
    for (int i = 0; i < chars.num_irreps(); ++i)
      acc += gamma[i] * double(chars.degrees[i]) * std::conj(chars.value(i, k));
    phi[k] = acc / double(t.group_order());
  }
  return phi;
}

ClassFunction apply_fourier_operator(const KernelFunction& phi, const ClassFunction& f) {
  require(phi.table == f.table, "kernel and function on different tables");
  const ClassTable& t = *phi.table;
  const FieldTower& F = t.tower();
  const auto& elems = t.elements();
  const auto& ecls = t.element_class();
  ClassFunction out(t);
  parallel_for(t.num_classes(), [&](long long k) {
    const GroupElement& g = t.cls((int)k).rep;
    cplx acc = 0;
    for (size_t h = 0; h < elems.size(); ++h)
      acc += phi[t.class_index(ge_mul(F, g, elems[h]))] * f[ecls[h]];
    out[(int)k] = acc;
  });
  return out;
}

GroupLike group_like(const StandardGroupSpec& spec) {
  return {spec.dim_v(), spec.epsilon()};
}

GroupLike group_like(const TorusType& type) {
  return {0, type.epsilon()};
}

CPair c_pair(const GroupLike& h, const GroupLike& g) {
  return {h.eps * g.eps, h.dim_v - g.dim_v};
}

cplx gauss_gamma_torus(const FieldTower& F, const TorusInstance& torus,
                       const TorusCharacter& theta) {
  require(theta.residues.size() == torus.coords().size(), "residue count mismatch");
  cplx prod = 1;
  for (size_t j = 0; j < torus.coords().size(); ++j) {
    const TorusInstance::Coord& c = torus.coords()[j];
    cplx acc = 0;
    for (long long k = 0; k < c.size; ++k) {
      FFElem z = F.from_log(c.level, k);
      acc += F.additive_char(F.trace_to(z, 1)) * F.mult_char_eval(theta.residues[j], z);
    }
    prod *= acc;
  }
  return prod;
}

double admissible_check(const GammaFunction& gamma,
                        const std::vector<LusztigSeries>& series) {
  double dev = 0;
  for (const LusztigSeries& s : series)
    for (size_t a = 0; a < s.members.size(); ++a)
      for (size_t b = a + 1; b < s.members.size(); ++b)
        dev = std::max(dev, std::abs(gamma[s.members[a]] - gamma[s.members[b]]));
  return dev;
}

ClassFunction psi_trace_class_function(const ClassTable& table) {
  const FieldTower& F = table.tower();
  ClassFunction out(table);
  for (int k = 0; k < table.num_classes(); ++k)
    out[k] = F.additive_char(trace_form(F, table.cls(k).rep));
  return out;
}

}  // namespace glf
