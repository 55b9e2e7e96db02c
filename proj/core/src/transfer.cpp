#include "glf/transfer.hpp"

#include <algorithm>
#include <numeric>

namespace glf {

void RhoFlatSpec::validate(const StandardGroupSpec& G) const {
  require(!rows.empty(), "weight matrix has no rows");
  require(G.is_split(), "weight matrices require a split base group");
  int mm = G.split_rank();
  for (const auto& r : rows)
    require((int)r.size() == mm, "weight row length != split rank of the base group");
  // the row multiset must be stable under coordinate permutations within each
  // block; checking adjacent transpositions suffices
  auto sorted_rows = rows;
  std::sort(sorted_rows.begin(), sorted_rows.end());
  int off = 0;
  for (const GroupBlock& b : G.blocks) {
    for (int i = 0; i + 1 < b.n; ++i) {
      auto swapped = rows;
      for (auto& r : swapped) std::swap(r[off + i], r[off + i + 1]);
      std::sort(swapped.begin(), swapped.end());
      require(swapped == sorted_rows,
              "row multiset is not Weyl-stable (swap of coordinates " +
                  std::to_string(off + i) + "," + std::to_string(off + i + 1) + ")");
    }
    off += b.n;
  }
}

std::vector<WeylElem> weyl_elements(const StandardGroupSpec& G) {
  std::vector<std::vector<int>> block_perms = {{}};
  int off = 0;
  for (const GroupBlock& b : G.blocks) {
    std::vector<int> p(b.n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> next;
    do {
      for (const auto& prefix : block_perms) {
        auto full = prefix;
        for (int x : p) full.push_back(off + x);
        next.push_back(std::move(full));
      }
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(next.begin(), next.end());
    block_perms = std::move(next);
    off += b.n;
  }
  std::vector<WeylElem> out;
  for (auto& p : block_perms) out.push_back(WeylElem{std::move(p)});
  return out;
}

int weyl_length(const WeylElem& w) {
  int inv = 0;
  for (size_t i = 0; i < w.perm.size(); ++i)
    for (size_t j = i + 1; j < w.perm.size(); ++j)
      if (w.perm[i] > w.perm[j]) ++inv;
  return inv;
}

LeviData levi_of_weights(const RhoFlatSpec& W) {
  LeviData L;
  std::vector<std::vector<int>> distinct = W.rows;
  std::sort(distinct.begin(), distinct.end(), std::greater<>());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  L.weights = distinct;
  L.mult.assign(distinct.size(), 0);
  L.weight_rows.assign(distinct.size(), {});
  L.row_to_weight.resize(W.rows.size());
  for (size_t i = 0; i < W.rows.size(); ++i) {
    auto it = std::find(distinct.begin(), distinct.end(), W.rows[i]);
    int j = (int)(it - distinct.begin());
    L.row_to_weight[i] = j;
    ++L.mult[j];
    L.weight_rows[j].push_back((int)i);
  }
  return L;
}

StandardGroupSpec LeviData::split_spec() const {
  StandardGroupSpec s;
  for (int a : mult) s.blocks.push_back({a, 1});
  return s;
}

std::vector<int> weyl_transport(const WeylElem& w, const LeviData& L) {
  int m = (int)w.perm.size();
  std::vector<int> winv(m);
  for (int u = 0; u < m; ++u) winv[w.perm[u]] = u;
  std::vector<int> wprime(L.weights.size());
  for (size_t j = 0; j < L.weights.size(); ++j) {
    std::vector<int> moved(m);
    for (int u = 0; u < m; ++u) moved[u] = L.weights[j][winv[u]];
    auto it = std::find(L.weights.begin(), L.weights.end(), moved);
    require(it != L.weights.end(),
            "Weyl action does not permute the distinct weights (invariant violation)");
    wprime[j] = (int)(it - L.weights.begin());
  }
  std::vector<int> seen(L.weights.size(), 0);
  for (int j : wprime) ++seen[j];
  for (int s : seen) require(s == 1, "weight transport is not a permutation");
  return wprime;
}

std::vector<std::vector<int>> permutation_cycles(const std::vector<int>& perm) {
  int n = (int)perm.size();
  std::vector<bool> vis(n, false);
  std::vector<std::vector<int>> cycles;
  for (int i = 0; i < n; ++i) {
    if (vis[i]) continue;
    std::vector<int> c;
    for (int j = i; !vis[j]; j = perm[j]) {
      vis[j] = true;
      c.push_back(j);
    }
    cycles.push_back(std::move(c));
  }
  std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a[0] < b[0];
  });
  return cycles;
}

TwistedLevi twisted_levi_spec(const LeviData& L, const std::vector<int>& wprime) {
  TwistedLevi out;
  out.cycles = permutation_cycles(wprime);
  for (const auto& c : out.cycles) {
    int a = L.mult[c[0]];
    for (int j : c) require(L.mult[j] == a, "w' cycle mixes blocks of unequal size");
    out.spec.blocks.push_back({a, (int)c.size()});
  }
  return out;
}

TwistedTorus twisted_torus(const StandardGroupSpec& G, const WeylElem& w) {
  TwistedTorus out;
  auto cycles = permutation_cycles(w.perm);
  int off = 0;
  for (const GroupBlock& b : G.blocks) {
    std::vector<std::vector<int>> mine;
    for (const auto& c : cycles)
      if (c[0] >= off && c[0] < off + b.n) mine.push_back(c);
    std::vector<int> parts;
    for (const auto& c : mine) {
      parts.push_back((int)c.size());
      for (int u : c) require(u >= off && u < off + b.n, "Weyl element mixes blocks");
    }
    out.type.per_block.push_back(Partition(parts));
    for (auto& c : mine) out.cycles.push_back(std::move(c));
    off += b.n;
  }
  return out;
}

namespace {

/*
  Twisted monomial pushforward core.  Slots carry integer weight vectors; a
  permutation of the slots (given by its cycles) twists the domain, so slot
  values are Frobenius powers of their cycle representative.  Coordinates
  x_u = prod_s z_s^{v_s[u]} are evaluated in the common level D, checked to
  be wF-fixed, and projected onto the target torus coordinates.
*/
struct MonomialMap {
  const FieldTower* F;
  const TwistedTorus* torus;
  const WeylElem* w;
  const std::vector<std::vector<int>>* slot_weights;
  const std::vector<std::vector<int>>* slot_cycles;
  int D;

  MonomialMap(const FieldTower& f, const TwistedTorus& t, const WeylElem& ww,
              const std::vector<std::vector<int>>& sw,
              const std::vector<std::vector<int>>& sc)
      : F(&f), torus(&t), w(&ww), slot_weights(&sw), slot_cycles(&sc) {
    D = 1;
    for (const auto& c : sc) D = std::lcm(D, (int)c.size());
    for (const auto& c : t.cycles) D = std::lcm(D, (int)c.size());
  }

  std::vector<long long> apply(const std::vector<long long>& zlogs) const {
    require(zlogs.size() == slot_cycles->size(), "one unit per slot cycle expected");
    long long q = F->q();
    long long ND = F->unit_order(D);
    int nslots = (int)slot_weights->size();
    std::vector<long long> slot_log(nslots, 0);
    for (size_t ci = 0; ci < slot_cycles->size(); ++ci) {
      const auto& cyc = (*slot_cycles)[ci];
      int c = (int)cyc.size();
      long long cur = F->embed(F->from_log(c, zlogs[ci]), D).code;
      for (int k = 0; k < c; ++k) {
        slot_log[cyc[k]] = cur;
        cur = (long long)((__int128)cur * (q % ND) % ND);
      }
    }
    int m = (int)w->perm.size();
    std::vector<long long> x(m, 0);
    for (int u = 0; u < m; ++u) {
      __int128 acc = 0;
      for (int s = 0; s < nslots; ++s) {
        long long e = ((*slot_weights)[s][u] % ND + ND) % ND;
        acc += (__int128)e * slot_log[s] % ND;
      }
      x[u] = (long long)(acc % ND);
    }
    for (int u = 0; u < m; ++u)
      require(x[w->perm[u]] == (long long)((__int128)x[u] * (q % ND) % ND),
              "pushforward image is not wF-fixed (transport bug)");
    std::vector<long long> out(torus->cycles.size());
    for (size_t t = 0; t < torus->cycles.size(); ++t) {
      int u0 = (*torus).cycles[t][0];
      int lam = (int)(*torus).cycles[t].size();
      out[t] = F->project(FFElem{D, x[u0]}, lam).code;
    }
    return out;
  }
};

// accumulate prod of per-cycle factors over all unit tuples onto target points
std::vector<cplx> tuple_pushforward(const FieldTower& F, const TorusInstance& target,
                                    const MonomialMap& mm,
                                    const std::vector<std::vector<cplx>>& cycle_factor,
                                    long long budget) {
  long long tuples = 1;
  std::vector<long long> radix;
  for (const auto& c : *mm.slot_cycles) {
    long long N = F.unit_order((int)c.size());
    radix.push_back(N);
    tuples = checked_mul(tuples, N, "pushforward tuples");
  }
  if (tuples > budget) throw BudgetError("pushforward fiber enumeration", tuples, budget);
  std::vector<cplx> out(target.num_points(), 0.0);
  std::vector<long long> zlogs(radix.size(), 0);
  for (long long idx = 0; idx < tuples; ++idx) {
    long long t = idx;
    cplx weight = 1;
    for (size_t i = 0; i < radix.size(); ++i) {
      zlogs[i] = t % radix[i];
      t /= radix[i];
      weight *= cycle_factor[i][zlogs[i]];
    }
    if (weight == cplx(0.0, 0.0)) continue;
    out[target.point_index(mm.apply(zlogs))] += weight;
  }
  return out;
}

}  // namespace

RhoPointMap::RhoPointMap(const FieldTower& F, const StandardGroupSpec& G,
                         const RhoFlatSpec& W, const WeylElem& w)
    : F_(&F), G_(G), W_(W), w_(w) {
  W_.validate(G_);
  ld_ = levi_of_weights(W_);
  std::vector<int> wprime = weyl_transport(w_, ld_);
  levi_ = twisted_levi_spec(ld_, wprime);
  torus_ = twisted_torus(G_, w_);
  lcm_level_ = 1;
  for (const auto& c : levi_.cycles) lcm_level_ = std::lcm(lcm_level_, (int)c.size());
  for (const auto& c : torus_.cycles) lcm_level_ = std::lcm(lcm_level_, (int)c.size());
}

std::vector<long long> RhoPointMap::push_tuple(const std::vector<long long>& zlogs) const {
  MonomialMap mm(*F_, torus_, w_, ld_.weights, levi_.cycles);
  return mm.apply(zlogs);
}

std::vector<long long> RhoPointMap::apply(const GroupElement& l) const {
  require(l.blocks.size() == levi_.spec.blocks.size(), "wrong twisted Levi element");
  std::vector<long long> zlogs(l.blocks.size());
  for (size_t i = 0; i < l.blocks.size(); ++i) {
    FFElem det = mat_det(*F_, l.blocks[i]);
    require(!det.is_zero(), "twisted Levi element is singular");
    zlogs[i] = det.code;
  }
  return push_tuple(zlogs);
}

cplx phi_levi(const FieldTower& F, const GroupElement& g) {
  return F.additive_char(trace_form(F, g));
}

std::vector<cplx> det_pushforward_psi_tr(const FieldTower& F, int a, int level,
                                         long long budget) {
  long long N = F.unit_order(level);
  std::vector<cplx> h(N, 0.0);
  if (a == 1) {
    for (long long k = 0; k < N; ++k) h[k] = F.additive_char(F.from_log(level, k));
    return h;
  }
  long long Q = F.field_size(level);
  long long total = 1;
  for (int i = 0; i < a * a; ++i) {
    total = checked_mul(total, Q, "determinant fiber sum");
    if (total > budget)
      throw BudgetError("determinant fiber sum over gl_" + std::to_string(a), total, budget);
  }
  for (long long code = 0; code < total; ++code) {
    Mat m(level, a, a);
    long long t = code;
    for (int i = 0; i < a * a; ++i) {
      m.a[i] = (t % Q) - 1;
      t /= Q;
    }
    FFElem det = mat_det(F, m);
    if (det.is_zero()) continue;
    h[det.code] += F.additive_char(mat_trace(F, m));
  }
  return h;
}

std::vector<cplx> push_levi_function(const RhoPointMap& rho, const TorusInstance& target,
                                     long long budget, bool enumerate_directly) {
  const FieldTower& F = target.tower();
  require(target.type() == rho.torus().type, "target torus does not match the map");
  const TwistedLevi& L = rho.levi();
  if (!enumerate_directly) {
    MonomialMap mm(F, rho.torus(), rho.weyl(), rho.levi_data().weights, L.cycles);
    std::vector<std::vector<cplx>> factors;
    for (size_t i = 0; i < L.spec.blocks.size(); ++i)
      factors.push_back(
          det_pushforward_psi_tr(F, L.spec.blocks[i].n, L.spec.blocks[i].d, budget));
    return tuple_pushforward(F, target, mm, factors, budget);
  }
  // direct enumeration of (L'_{w'})^F, pushing psi o Tr point by point
  std::vector<std::vector<Mat>> block_mats;
  long long total = 1;
  for (const GroupBlock& b : L.spec.blocks) {
    long long Q = F.field_size(b.d);
    long long cnt = 1;
    for (int i = 0; i < b.n * b.n; ++i) cnt = checked_mul(cnt, Q, "levi enumeration");
    std::vector<Mat> mats;
    for (long long code = 0; code < cnt; ++code) {
      Mat m(b.d, b.n, b.n);
      long long t = code;
      for (int i = 0; i < b.n * b.n; ++i) {
        m.a[i] = (t % Q) - 1;
        t /= Q;
      }
      if (mat_invertible(F, m)) mats.push_back(std::move(m));
    }
    total = checked_mul(total, (long long)mats.size(), "levi enumeration");
    if (total > budget) throw BudgetError("twisted Levi enumeration", total, budget);
    block_mats.push_back(std::move(mats));
  }
  std::vector<cplx> out(target.num_points(), 0.0);
  std::vector<size_t> idx(block_mats.size(), 0);
  while (true) {
    GroupElement l;
    for (size_t i = 0; i < block_mats.size(); ++i) l.blocks.push_back(block_mats[i][idx[i]]);
    out[target.point_index(rho.apply(l))] += phi_levi(F, l);
    size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == block_mats[pos].size()) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == idx.size()) break;
  }
  return out;
}

ClassFunction bk_kernel_geometric(const RhoFlatSpec& W, DLEngine& dl, long long push_budget,
                                  std::vector<WSummand>* summands) {
  const ClassTable& table = dl.table();
  const FieldTower& F = dl.tower();
  W.validate(table.spec());
  std::vector<WeylElem> weyl = weyl_elements(table.spec());
  ClassFunction acc(table);
  for (const WeylElem& w : weyl) {
    RhoPointMap rho(F, table.spec(), W, w);
    const TorusInstance& target = dl.torus(rho.torus().type);
    std::vector<cplx> fw = push_levi_function(rho, target, push_budget);
    CPair c = c_pair(group_like(rho.torus().type), group_like(rho.levi().spec));
    ClassFunction term = dl.induce(rho.torus().type, fw);
    acc = cf_add(acc, cf_scale(c.value(F.q()), term));
    if (summands)
      summands->push_back({w, rho.torus().type, rho.levi().spec, c});
  }
  return cf_scale(1.0 / double(weyl.size()), acc);
}

SemisimpleLabel transfer_label(const FieldTower& F, const SemisimpleLabel& s,
                               const RhoFlatSpec& W) {
  // expand each block to a Frobenius-coherent coordinate tuple
  std::vector<Frac> a;
  for (const auto& blk : s.blocks)
    for (const auto& [fr, sm] : blk) {
      auto [e, mult] = sm;
      for (int rep = 0; rep < mult; ++rep) {
        Frac cur = fr;
        for (int k = 0; k < e; ++k) {
          a.push_back(cur);
          cur = cur.times(F.q());
        }
      }
    }
  require((int)a.size() == W.m(), "label weight != torus coordinate count");
  // apply the weight rows mod 1
  std::map<Frac, int> counts;
  for (const auto& row : W.rows) {
    Frac b(0, 1);
    for (size_t u = 0; u < row.size(); ++u) b = b.plus(a[u].times(row[u]));
    auto [mn, e] = frobenius_orbit_frac(b, F.q());
    (void)e;
    ++counts[mn];
  }
  SemisimpleLabel out;
  out.blocks.resize(1);
  for (auto& [mn, count] : counts) {
    auto [mn2, e] = frobenius_orbit_frac(mn, F.q());
    (void)mn2;
    require(count % e == 0, "transferred fractions do not close into full orbits");
    out.blocks[0][mn] = {e, count / e};
  }
  return out;
}

SpectralKernel bk_kernel_spectral(const RhoFlatSpec& W, DLEngine& dl,
                                  const CharacterTable& chars,
                                  const std::vector<LusztigSeries>& series) {
  const ClassTable& table = dl.table();
  const FieldTower& F = dl.tower();
  W.validate(table.spec());
  StandardGroupSpec target{{{W.n(), 1}}};
  CPair c_g_gp = c_pair(group_like(table.spec()), group_like(target));
  SpectralKernel out;
  out.gamma = GammaFunction(chars);
  for (const LusztigSeries& s : series) {
    SemisimpleLabel moved = transfer_label(F, s.label, W);
    auto [ttype, theta] = realize_dl_pair(F, moved);
    TorusInstance inst(F, target, ttype);
    require(geometric_label(F, inst, theta) == moved,
            "realized DL pair does not carry the transferred label");
    CPair c_gp_t = c_pair(group_like(target), group_like(ttype));
    cplx gamma = c_g_gp.value(F.q()) * c_gp_t.value(F.q()) *
                 gauss_gamma_torus(F, inst, theta);
    for (int i : s.members) out.gamma[i] = gamma;
    out.labels.emplace_back(s.label, moved);
  }
  out.kernel = kernel_from_gamma(out.gamma);
  return out;
}

TransferReport compare_kernels(const RhoFlatSpec& W, DLEngine& dl,
                               const CharacterTable& chars,
                               const std::vector<LusztigSeries>& series, double tol,
                               long long push_budget) {
  TransferReport rep;
  rep.tolerance = tol;
  rep.geometric = bk_kernel_geometric(W, dl, push_budget, &rep.summands);
  rep.spectral = bk_kernel_spectral(W, dl, chars, series).kernel;
  rep.deviation.resize(rep.geometric.v.size());
  rep.max_dev = 0;
  for (size_t k = 0; k < rep.geometric.v.size(); ++k) {
    rep.deviation[k] = std::abs(rep.geometric[k] - rep.spectral[(int)k]);
    rep.max_dev = std::max(rep.max_dev, rep.deviation[k]);
  }
  rep.pass = rep.max_dev < tol;
  return rep;
}

RouteComparison torus_levi_routes(const RhoPointMap& rho, const TorusInstance& target,
                                  long long budget) {
  const FieldTower& F = target.tower();
  RouteComparison out;
  // Levi route
  {
    std::vector<cplx> raw = push_levi_function(rho, target, budget);
    CPair c = c_pair(group_like(rho.torus().type), group_like(rho.levi().spec));
    out.levi_route.resize(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) out.levi_route[i] = c.value(F.q()) * raw[i];
  }
  // Torus route: the diagonal torus of the Levi, twisted by the row-level
  // permutation induced by w'
  {
    const LeviData& ld = rho.levi_data();
    std::vector<int> wprime = weyl_transport(rho.weyl(), ld);
    int n = rho.weights().n();
    std::vector<int> sigma(n);
    for (size_t j = 0; j < ld.weights.size(); ++j) {
      int jp = wprime[j];
      require(ld.weight_rows[j].size() == ld.weight_rows[jp].size(), "multiplicity mismatch");
      for (size_t t = 0; t < ld.weight_rows[j].size(); ++t)
        sigma[ld.weight_rows[j][t]] = ld.weight_rows[jp][t];
    }
    auto cycles = permutation_cycles(sigma);
    // slot weights are the individual rows
    MonomialMap mm(F, rho.torus(), rho.weyl(), rho.weights().rows, cycles);
    std::vector<std::vector<cplx>> factors;
    for (const auto& c : cycles)
      factors.push_back(det_pushforward_psi_tr(F, 1, (int)c.size(), budget));
    std::vector<cplx> raw = tuple_pushforward(F, target, mm, factors, budget);
    std::vector<int> parts;
    for (const auto& c : cycles) parts.push_back((int)c.size());
    TorusType tprime;
    tprime.per_block.push_back(Partition(parts));
    CPair c = c_pair(group_like(rho.torus().type), group_like(tprime));
    out.torus_route.resize(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) out.torus_route[i] = c.value(F.q()) * raw[i];
  }
  out.max_dev = 0;
  for (size_t i = 0; i < out.levi_route.size(); ++i)
    out.max_dev = std::max(out.max_dev, std::abs(out.levi_route[i] - out.torus_route[i]));
  return out;
}

std::vector<int> transfer_required_levels(const StandardGroupSpec& G, const RhoFlatSpec& W) {
  W.validate(G);
  std::vector<int> levels = G.required_levels();
  for (int e = 1; e <= W.n(); ++e) levels.push_back(e);
  LeviData L = levi_of_weights(W);
  for (const WeylElem& w : weyl_elements(G)) {
    std::vector<int> wprime = weyl_transport(w, L);
    int D = 1;
    for (const auto& c : permutation_cycles(wprime)) {
      levels.push_back((int)c.size());
      D = std::lcm(D, (int)c.size());
    }
    for (const auto& c : permutation_cycles(w.perm)) {
      levels.push_back((int)c.size());
      D = std::lcm(D, (int)c.size());
    }
    levels.push_back(D);
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

}  // namespace glf
