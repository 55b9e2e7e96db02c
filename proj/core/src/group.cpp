#include "glf/group.hpp"

#include <algorithm>
#include <numeric>

namespace glf {

long long StandardGroupSpec::order(long long q) const {
  long long total = 1;
  for (const GroupBlock& b : blocks) {
    long long Q = ipow_checked(q, b.d, "group order");
    long long qn = ipow_checked(Q, b.n, "group order");
    long long qj = 1;
    for (int j = 0; j < b.n; ++j) {
      total = checked_mul(total, qn - qj, "group order");
      qj = checked_mul(qj, Q, "group order");
    }
  }
  return total;
}

long long StandardGroupSpec::order_pprime(long long q) const {
  long long total = 1;
  for (const GroupBlock& b : blocks) {
    long long Q = ipow_checked(q, b.d, "group order");
    long long power = 1;
    for (int j = 1; j <= b.n; ++j) {
      power = checked_mul(power, Q, "group order");
      total = checked_mul(total, power - 1, "group order");
    }
  }
  return total;
}

long long StandardGroupSpec::dimension() const {
  long long s = 0;
  for (const GroupBlock& b : blocks) s += (long long)b.d * b.n * b.n;
  return s;
}

long long StandardGroupSpec::dim_v() const {
  long long s = 0;
  for (const GroupBlock& b : blocks) s += (long long)b.d * b.n * (b.n - 1) / 2;
  return s;
}

int StandardGroupSpec::split_rank() const {
  int s = 0;
  for (const GroupBlock& b : blocks) s += b.n;
  return s;
}

bool StandardGroupSpec::is_split() const {
  for (const GroupBlock& b : blocks)
    if (b.d != 1) return false;
  return true;
}

std::string StandardGroupSpec::str() const {
  std::string s;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(blocks[i].n);
    if (blocks[i].d != 1) s += "x" + std::to_string(blocks[i].d);
  }
  return s;
}

std::vector<int> StandardGroupSpec::required_levels() const {
  std::vector<int> out = {1};
  for (const GroupBlock& b : blocks)
    for (int k = 1; k <= b.n; ++k) out.push_back(b.d * k);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GroupElement ge_identity(const FieldTower& F, const StandardGroupSpec& spec) {
  GroupElement g;
  for (const GroupBlock& b : spec.blocks) g.blocks.push_back(mat_identity(F, b.d, b.n));
  return g;
}

GroupElement ge_mul(const FieldTower& F, const GroupElement& a, const GroupElement& b) {
  require(a.blocks.size() == b.blocks.size(), "block count mismatch");
  GroupElement r;
  for (size_t i = 0; i < a.blocks.size(); ++i)
    r.blocks.push_back(mat_mul(F, a.blocks[i], b.blocks[i]));
  return r;
}

GroupElement ge_inverse(const FieldTower& F, const GroupElement& a) {
  GroupElement r;
  for (const Mat& m : a.blocks) r.blocks.push_back(mat_inverse(F, m));
  return r;
}

GroupElement ge_pow(const FieldTower& F, GroupElement a, long long e) {
  GroupElement r;
  for (Mat& m : a.blocks) r.blocks.push_back(mat_pow(F, m, e));
  return r;
}

std::vector<long long> ge_encode(const GroupElement& a) {
  std::vector<long long> v;
  for (const Mat& m : a.blocks) v.insert(v.end(), m.a.begin(), m.a.end());
  return v;
}

FFElem trace_form(const FieldTower& F, const GroupElement& g) {
  FFElem acc = F.zero(1);
  for (const Mat& m : g.blocks)
    acc = F.add(acc, F.trace_to(mat_trace(F, m), 1));
  return acc;
}

namespace {

std::vector<long long> prime_factors_ll(long long n) {
  std::vector<long long> ps;
  for (long long i = 2; i * i <= n; ++i)
    if (n % i == 0) {
      ps.push_back(i);
      while (n % i == 0) n /= i;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

// |Z_{GL_{|lambda|}(F_Qr)}(u_lambda)| for a unipotent of Jordan type lambda
long long unipotent_centralizer_order(const Partition& lambda, long long Qr) {
  std::map<int, int> mult;
  for (int part : lambda.parts) ++mult[part];
  long long exp = 2 * lambda.n_value() + lambda.size();
  for (auto& [k, mk] : mult) exp -= (long long)mk * (mk + 1) / 2;
  long long result = ipow_checked(Qr, (int)exp, "centralizer order");
  for (auto& [k, mk] : mult) {
    long long qj = 1;
    for (int j = 1; j <= mk; ++j) {
      qj = checked_mul(qj, Qr, "centralizer order");
      result = checked_mul(result, qj - 1, "centralizer order");
    }
  }
  return result;
}

Mat companion(const FieldTower& F, const FPoly& f) {
  int r = f.deg();
  Mat c(f.level, r, r);
  for (int i = 1; i < r; ++i) c.set(i, i - 1, F.one(f.level));
  for (int i = 0; i < r; ++i) c.set(i, r - 1, F.neg(f.coeff(i)));
  return c;
}

// generalized Jordan cell: companion blocks on the diagonal, identity
// connectors above (f separable, so the Jordan type comes out right)
Mat gen_jordan(const FieldTower& F, const FPoly& f, int m) {
  int r = f.deg();
  Mat j(f.level, r * m, r * m);
  Mat c = companion(F, f);
  for (int b = 0; b < m; ++b) {
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k) j.at(b * r + i, b * r + k) = c.at(i, k);
    if (b + 1 < m)
      for (int i = 0; i < r; ++i) j.set(b * r + i, (b + 1) * r + i, F.one(f.level));
  }
  return j;
}

std::string factor_tag(const FPoly& f, const Partition& lam) {
  std::string s = "[";
  for (long long c : f.c) s += std::to_string(c) + ".";
  s += ":" + lam.str() + "]";
  return s;
}

// ordering used inside the class KEY: degree, then raw coefficient codes
bool key_factor_less(const std::pair<FPoly, Partition>& a,
                     const std::pair<FPoly, Partition>& b) {
  if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
  if (a.first.c != b.first.c) return a.first.c < b.first.c;
  return a.second.parts < b.second.parts;
}

using FactorSortKey = std::tuple<int, Frac, int, std::vector<int>>;

bool factor_sort_less(const FactorSortKey& a, const FactorSortKey& b) {
  if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
  if (!(std::get<1>(a) == std::get<1>(b))) return std::get<1>(a) < std::get<1>(b);
  if (std::get<2>(a) != std::get<2>(b)) return std::get<2>(a) < std::get<2>(b);
  return std::get<3>(a) < std::get<3>(b);
}

struct BlockClassType {
  std::vector<std::pair<FPoly, Partition>> factors;
  std::vector<FactorSortKey> sort_key;
};

}  // namespace

ClassTable::ClassTable(const FieldTower& F, StandardGroupSpec spec,
                       long long element_budget)
    : F_(&F), spec_(std::move(spec)), budget_(element_budget) {
  require(!spec_.blocks.empty(), "empty group spec");
  order_ = spec_.order(F.q());
  if (order_ > budget_)
    throw BudgetError("class table of " + spec_.str(), order_, budget_);
  order_factors_ = prime_factors_ll(order_);
  for (const GroupBlock& b : spec_.blocks)
    for (int deg = 1; deg <= b.n; ++deg)
      if (!irr_.count({b.d, deg}))
        irr_[{b.d, deg}] = irreducibles(F, b.d, deg, /*exclude_x=*/true);
  build_classes();
}

void ClassTable::build_classes() {
  const FieldTower& F = *F_;
  long long q = F.q();

  // per block: all maps {irreducibles != X} -> partitions, total weight n
  std::vector<std::vector<BlockClassType>> per_block;
  for (const GroupBlock& b : spec_.blocks) {
    std::vector<std::pair<FPoly, Frac>> polys;
    long long Q = ipow_checked(q, b.d, "Q");
    for (int deg = 1; deg <= b.n; ++deg)
      for (const FPoly& f : irr_.at({b.d, deg})) {
        FFElem root = irreducible_root(F, f);
        Frac fr = F.fraction_of(root.code, root.level);
        polys.emplace_back(f, frobenius_orbit_frac(fr, Q).first);
      }
    std::vector<BlockClassType> types;
    std::vector<std::pair<FPoly, Partition>> cur;
    std::function<void(size_t, int)> rec = [&](size_t idx, int remaining) {
      if (remaining == 0) {
        BlockClassType t;
        t.factors = cur;
        std::sort(t.factors.begin(), t.factors.end(), key_factor_less);
        types.push_back(std::move(t));
        return;
      }
      if (idx == polys.size()) return;
      rec(idx + 1, remaining);
      int deg = polys[idx].first.deg();
      for (int w = 1; w * deg <= remaining; ++w)
        for (const Partition& lam : partitions(w)) {
          cur.emplace_back(polys[idx].first, lam);
          rec(idx + 1, remaining - w * deg);
          cur.pop_back();
        }
    };
    rec(0, b.n);
    std::map<std::vector<long long>, Frac> frac_of;
    for (auto& [f, fr] : polys) frac_of[f.c] = fr;
    for (BlockClassType& t : types) {
      for (auto& [f, lam] : t.factors)
        t.sort_key.emplace_back(f.deg(), frac_of[f.c], -lam.length(), lam.parts);
      std::sort(t.sort_key.begin(), t.sort_key.end(), factor_sort_less);
    }
    std::sort(types.begin(), types.end(), [](const BlockClassType& a, const BlockClassType& b) {
      return std::lexicographical_compare(a.sort_key.begin(), a.sort_key.end(),
                                          b.sort_key.begin(), b.sort_key.end(),
                                          factor_sort_less);
    });
    per_block.push_back(std::move(types));
  }

  std::vector<std::vector<int>> choices = {{}};
  for (size_t bi = 0; bi < per_block.size(); ++bi) {
    std::vector<std::vector<int>> next;
    for (const auto& c : choices)
      for (size_t t = 0; t < per_block[bi].size(); ++t) {
        auto c2 = c;
        c2.push_back((int)t);
        next.push_back(std::move(c2));
      }
    choices = std::move(next);
  }

  for (const auto& choice : choices) {
    ConjClass cc;
    cc.centralizer_order = 1;
    cc.cent_s_order = 1;
    std::string key;
    for (size_t bi = 0; bi < choice.size(); ++bi) {
      const GroupBlock& b = spec_.blocks[bi];
      const BlockClassType& t = per_block[bi][choice[bi]];
      long long Q = ipow_checked(q, b.d, "Q");
      Mat rep(b.d, b.n, b.n);
      int off = 0;
      key += "|";
      std::vector<EigenFactor> eig;
      for (const auto& [f, lam] : t.factors) {
        for (int part : lam.parts) {
          Mat jb = gen_jordan(F, f, part);
          for (int i = 0; i < jb.nr; ++i)
            for (int k = 0; k < jb.nc; ++k) rep.at(off + i, off + k) = jb.at(i, k);
          off += jb.nr;
        }
        long long Qr = ipow_checked(Q, f.deg(), "Q^r");
        cc.centralizer_order = checked_mul(cc.centralizer_order,
                                           unipotent_centralizer_order(lam, Qr), "centralizer");
        key += factor_tag(f, lam);
        EigenFactor ef;
        ef.root = irreducible_root(F, f);
        ef.orbit_min = frobenius_orbit_frac(F.fraction_of(ef.root.code, ef.root.level), Q).first;
        ef.r = f.deg();
        ef.m = lam.size();
        ef.unip = lam;
        // |GL_m(F_{Q^r})|
        long long qn = ipow_checked(Qr, ef.m, "cent_s");
        long long qj = 1;
        for (int j = 0; j < ef.m; ++j) {
          cc.cent_s_order = checked_mul(cc.cent_s_order, qn - qj, "cent_s");
          qj = checked_mul(qj, Qr, "cent_s");
        }
        eig.push_back(std::move(ef));
      }
      cc.rep.blocks.push_back(rep);
      cc.eigen.push_back(std::move(eig));
    }
    cc.key = key;
    cc.size = order_ / cc.centralizer_order;
    classes_.push_back(std::move(cc));
  }

  // canonical class order from the eigen data
  std::vector<std::vector<std::vector<FactorSortKey>>> keys(classes_.size());
  for (size_t ci = 0; ci < classes_.size(); ++ci)
    for (size_t bi = 0; bi < spec_.blocks.size(); ++bi) {
      std::vector<FactorSortKey> ks;
      for (const EigenFactor& ef : classes_[ci].eigen[bi])
        ks.emplace_back(ef.r, ef.orbit_min, -ef.unip.length(), ef.unip.parts);
      std::sort(ks.begin(), ks.end(), factor_sort_less);
      keys[ci].push_back(std::move(ks));
    }
  std::vector<int> perm(classes_.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int x, int y) {
    for (size_t bi = 0; bi < spec_.blocks.size(); ++bi) {
      const auto& kx = keys[x][bi];
      const auto& ky = keys[y][bi];
      if (kx != ky)
        return std::lexicographical_compare(kx.begin(), kx.end(), ky.begin(), ky.end(),
                                            factor_sort_less);
    }
    return false;
  });
  std::vector<ConjClass> sorted;
  sorted.reserve(classes_.size());
  for (int i : perm) sorted.push_back(std::move(classes_[i]));
  classes_ = std::move(sorted);

  long long total = 0;
  for (size_t i = 0; i < classes_.size(); ++i) {
    index_[classes_[i].key] = (int)i;
    total += classes_[i].size;
  }
  require(total == order_, "class equation failed");

  for (auto& cc : classes_) {
    auto [s, u] = jordan_decompose(cc.rep);
    cc.s = s;
    cc.u = u;
    cc.element_order = element_order(cc.rep);
  }
  identity_ = class_index(ge_identity(F, spec_));
  require(identity_ == 0, "identity class is not first in canonical order");
  inverse_class_.resize(classes_.size());
  for (size_t i = 0; i < classes_.size(); ++i)
    inverse_class_[i] = class_index(ge_inverse(F, classes_[i].rep));
}

std::vector<std::pair<FPoly, Partition>> ClassTable::block_invariants(const Mat& m) const {
  const FieldTower& F = *F_;
  FPoly cp = char_poly(F, m);
  std::vector<std::pair<FPoly, Partition>> out;
  FPoly rem = poly_monic(F, cp);
  for (int deg = 1; deg <= m.nr && rem.deg() > 0; ++deg) {
    auto it = irr_.find({m.level, deg});
    if (it == irr_.end()) continue;
    for (const FPoly& f : it->second) {
      if (rem.deg() < deg) break;
      int mult = 0;
      while (rem.deg() >= deg && poly_mod(F, rem, f).is_zero()) {
        rem = poly_divexact(F, rem, f);
        ++mult;
      }
      if (mult == 0) continue;
      Partition lam;
      if (mult == 1) {
        lam = Partition({1});
      } else {
        // Jordan type from kernel growth of f(m)^j
        Mat fm = poly_eval_mat(F, f, m);
        Mat pw = fm;
        std::vector<int> geq;  // #parts >= j
        int prev = 0;
        while (true) {
          int ker = m.nr - mat_rank(F, pw);
          int cnt = (ker - prev) / deg;
          if (cnt == 0) break;
          geq.push_back(cnt);
          prev = ker;
          if (ker == mult * deg) break;
          pw = mat_mul(F, pw, fm);
        }
        std::vector<int> parts;
        for (int i = 1; i <= (geq.empty() ? 0 : geq[0]); ++i) {
          int cnt = 0;
          for (int g : geq)
            if (g >= i) ++cnt;
          parts.push_back(cnt);
        }
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        lam = Partition(parts);
        require(lam.size() == mult, "Jordan type does not match multiplicity");
      }
      out.emplace_back(f, lam);
    }
  }
  require(rem.deg() == 0, "characteristic polynomial has leftover factor (singular block?)");
  std::sort(out.begin(), out.end(), key_factor_less);
  return out;
}

int ClassTable::class_index(const GroupElement& g) const {
  require(g.blocks.size() == spec_.blocks.size(), "element has wrong block count");
  std::string key;
  for (size_t bi = 0; bi < g.blocks.size(); ++bi) {
    key += "|";
    for (const auto& [f, lam] : block_invariants(g.blocks[bi])) key += factor_tag(f, lam);
  }
  auto it = index_.find(key);
  require(it != index_.end(), "element is not in any enumerated class");
  return it->second;
}

int ClassTable::class_of_power(int i, long long t) const {
  return class_index(ge_pow(*F_, classes_[i].rep, t));
}

const std::vector<GroupElement>& ClassTable::elements() const {
  if (!elements_.empty()) return elements_;
  if (order_ > budget_)
    throw BudgetError("element enumeration for " + spec_.str(), order_, budget_);
  const FieldTower& F = *F_;
  std::vector<std::vector<Mat>> block_elems;
  for (const GroupBlock& b : spec_.blocks) {
    long long Q = F.field_size(b.d);
    long long total = 1;
    for (int i = 0; i < b.n * b.n; ++i) total = checked_mul(total, Q, "gl enumeration");
    std::vector<Mat> mats;
    for (long long code = 0; code < total; ++code) {
      Mat m(b.d, b.n, b.n);
      long long t = code;
      for (int i = 0; i < b.n * b.n; ++i) {
        m.a[i] = (t % Q) - 1;
        t /= Q;
      }
      if (mat_invertible(F, m)) mats.push_back(std::move(m));
    }
    block_elems.push_back(std::move(mats));
  }
  std::vector<GroupElement> out = {{}};
  for (auto& mats : block_elems) {
    std::vector<GroupElement> next;
    next.reserve(out.size() * mats.size());
    for (const auto& g : out)
      for (const Mat& m : mats) {
        GroupElement g2 = g;
        g2.blocks.push_back(m);
        next.push_back(std::move(g2));
      }
    out = std::move(next);
  }
  require((long long)out.size() == order_, "element enumeration does not match group order");
  element_class_.resize(out.size());
  for (size_t i = 0; i < out.size(); ++i) element_class_[i] = class_index(out[i]);
  std::vector<long long> sizes(classes_.size(), 0);
  for (int c : element_class_) ++sizes[c];
  for (size_t i = 0; i < classes_.size(); ++i)
    require(sizes[i] == classes_[i].size, "class sizes disagree with enumeration");
  elements_ = std::move(out);
  return elements_;
}

const std::vector<int>& ClassTable::element_class() const {
  elements();
  return element_class_;
}

long long ClassTable::element_order(const GroupElement& g) const {
  long long ord = order_;
  GroupElement id = ge_identity(*F_, spec_);
  for (long long p : order_factors_)
    while (ord % p == 0 && ge_pow(*F_, g, ord / p) == id) ord /= p;
  return ord;
}

std::pair<GroupElement, GroupElement> ClassTable::jordan_decompose(
    const GroupElement& g) const {
  const FieldTower& F = *F_;
  long long o = element_order(g);
  long long p = F.p();
  long long op = 1;
  long long rest = o;
  while (rest % p == 0) {
    op *= p;
    rest /= p;
  }
  if (op == 1) return {g, ge_identity(F, spec_)};
  if (rest == 1) return {ge_identity(F, spec_), g};
  // a = op * (op^{-1} mod rest) is 0 mod op and 1 mod rest
  long long t0 = 0, t1 = 1, r0 = rest, r1 = op % rest;
  while (r1 != 0) {
    long long qq = r0 / r1;
    std::tie(t0, t1) = std::make_pair(t1, t0 - qq * t1);
    std::tie(r0, r1) = std::make_pair(r1, r0 - qq * r1);
  }
  long long inv = ((t0 % rest) + rest) % rest;
  long long a = (__int128)op * inv % o;
  GroupElement s = ge_pow(F, g, a);
  GroupElement u = ge_pow(F, g, ((1 - a) % o + o) % o);
  require(ge_mul(F, s, u) == g && ge_mul(F, u, s) == g, "jordan parts do not multiply back");
  return {s, u};
}

SemisimpleCentralizer ClassTable::semisimple_centralizer(const GroupElement& s) const {
  const FieldTower& F = *F_;
  long long q = F.q();
  SemisimpleCentralizer out;
  for (size_t bi = 0; bi < s.blocks.size(); ++bi) {
    const GroupBlock& b = spec_.blocks[bi];
    long long Q = ipow_checked(q, b.d, "Q");
    std::vector<EigenFactor> eig;
    for (const auto& [f, lam] : block_invariants(s.blocks[bi])) {
      require(lam.length() == lam.size(), "element is not semisimple");
      EigenFactor ef;
      ef.root = irreducible_root(F, f);
      ef.orbit_min = frobenius_orbit_frac(F.fraction_of(ef.root.code, ef.root.level), Q).first;
      ef.r = f.deg();
      ef.m = lam.size();
      ef.unip = lam;
      out.spec.blocks.push_back({ef.m, b.d * ef.r});
      eig.push_back(std::move(ef));
    }
    out.factors.push_back(std::move(eig));
  }
  return out;
}

}  // namespace glf
