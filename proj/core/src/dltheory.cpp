#include "glf/dltheory.hpp"

#include <algorithm>
#include <cmath>

namespace glf {

int TorusType::total_parts() const {
  int s = 0;
  for (const Partition& p : per_block) s += p.length();
  return s;
}

std::string TorusType::str() const {
  std::string s;
  for (size_t i = 0; i < per_block.size(); ++i) {
    if (i) s += ";";
    s += per_block[i].str();
  }
  return s;
}

std::vector<std::vector<int>> TorusType::per_block_parts() const {
  std::vector<std::vector<int>> v;
  for (const Partition& p : per_block) v.push_back(p.parts);
  return v;
}

std::vector<TorusType> torus_types(const StandardGroupSpec& spec) {
  std::vector<std::vector<Partition>> acc = {{}};
  for (const GroupBlock& b : spec.blocks) {
    std::vector<std::vector<Partition>> next;
    for (const auto& prefix : acc)
      for (const Partition& p : partitions(b.n)) {
        auto c = prefix;
        c.push_back(p);
        next.push_back(std::move(c));
      }
    acc = std::move(next);
  }
  std::vector<TorusType> out;
  for (auto& v : acc) out.push_back(TorusType{std::move(v)});
  return out;
}

TorusInstance::TorusInstance(const FieldTower& F, const StandardGroupSpec& spec,
                             TorusType type)
    : F_(&F), spec_(spec), type_(std::move(type)) {
  require(type_.per_block.size() == spec.blocks.size(), "torus type has wrong block count");
  for (size_t bi = 0; bi < spec.blocks.size(); ++bi) {
    const GroupBlock& b = spec.blocks[bi];
    require(type_.per_block[bi].size() == b.n, "torus type partition size mismatch");
    int offset = 0;
    for (int part : type_.per_block[bi].parts) {
      Coord c;
      c.block = (int)bi;
      c.part = part;
      c.level = b.d * part;
      c.size = F.unit_order(c.level);
      c.offset = offset;
      offset += part;
      coords_.push_back(c);
      bases_.emplace_back(F, b.d, c.level);
      order_ = checked_mul(order_, c.size, "torus order");
    }
  }
}

GroupElement TorusInstance::element(const std::vector<long long>& logs) const {
  require(logs.size() == coords_.size(), "torus coordinate count mismatch");
  GroupElement g;
  for (size_t bi = 0; bi < spec_.blocks.size(); ++bi) {
    const GroupBlock& b = spec_.blocks[bi];
    Mat m(b.d, b.n, b.n);
    for (size_t j = 0; j < coords_.size(); ++j) {
      if (coords_[j].block != (int)bi) continue;
      Mat sub = bases_[j].mult_matrix(F_->from_log(coords_[j].level, logs[j]));
      for (int r = 0; r < sub.nr; ++r)
        for (int c = 0; c < sub.nc; ++c)
          m.at(coords_[j].offset + r, coords_[j].offset + c) = sub.at(r, c);
    }
    g.blocks.push_back(std::move(m));
  }
  return g;
}

std::optional<std::vector<long long>> TorusInstance::coords_of(const GroupElement& g) const {
  if (g.blocks.size() != spec_.blocks.size()) return std::nullopt;
  std::vector<long long> logs(coords_.size());
  for (size_t j = 0; j < coords_.size(); ++j) {
    const Coord& c = coords_[j];
    const Mat& m = g.blocks[c.block];
    Mat sub(m.level, c.part, c.part);
    for (int r = 0; r < c.part; ++r)
      for (int s = 0; s < c.part; ++s) sub.at(r, s) = m.at(c.offset + r, c.offset + s);
    auto z = bases_[j].element_of_mult_matrix(sub);
    if (!z.has_value()) return std::nullopt;
    logs[j] = z->code;
  }
  // verify off-diagonal vanishing by reassembling
  if (!(element(logs) == g)) return std::nullopt;
  return logs;
}

std::vector<long long> TorusInstance::point_logs(long long index) const {
  std::vector<long long> logs(coords_.size());
  for (size_t j = 0; j < coords_.size(); ++j) {
    logs[j] = index % coords_[j].size;
    index /= coords_[j].size;
  }
  return logs;
}

long long TorusInstance::point_index(const std::vector<long long>& logs) const {
  long long idx = 0;
  for (size_t j = coords_.size(); j-- > 0;) idx = idx * coords_[j].size + logs[j];
  return idx;
}

cplx TorusInstance::char_eval(const TorusCharacter& theta,
                              const std::vector<long long>& logs) const {
  require(theta.residues.size() == coords_.size(), "character residue count mismatch");
  cplx v = 1;
  for (size_t j = 0; j < coords_.size(); ++j)
    v *= F_->mult_char_eval(theta.residues[j], F_->from_log(coords_[j].level, logs[j]));
  return v;
}

std::vector<cplx> TorusInstance::char_values(const TorusCharacter& theta) const {
  std::vector<cplx> out(order_);
  for (long long i = 0; i < order_; ++i) out[i] = char_eval(theta, point_logs(i));
  return out;
}

FFElem TorusInstance::trace_of_point(const std::vector<long long>& logs) const {
  FFElem acc = F_->zero(1);
  for (size_t j = 0; j < coords_.size(); ++j)
    acc = F_->add(acc, F_->trace_to(F_->from_log(coords_[j].level, logs[j]), 1));
  return acc;
}

int SemisimpleLabel::weight() const {
  int w = 0;
  for (const auto& blk : blocks)
    for (const auto& [fr, sm] : blk) w += sm.first * sm.second;
  return w;
}

std::string SemisimpleLabel::str() const {
  std::string s;
  for (size_t bi = 0; bi < blocks.size(); ++bi) {
    if (bi) s += ";";
    s += "{";
    bool first = true;
    for (const auto& [fr, sm] : blocks[bi]) {
      if (!first) s += ",";
      first = false;
      s += fr.str() + "(x" + std::to_string(sm.second) + ")";
    }
    s += "}";
  }
  return s;
}

bool SemisimpleLabel::operator<(const SemisimpleLabel& o) const {
  auto flat = [](const SemisimpleLabel& l) {
    std::vector<std::tuple<size_t, long long, long long, int, int>> v;
    for (size_t bi = 0; bi < l.blocks.size(); ++bi)
      for (const auto& [fr, sm] : l.blocks[bi])
        v.emplace_back(bi, fr.num, fr.den, sm.first, sm.second);
    return v;
  };
  return flat(*this) < flat(o);
}

SemisimpleLabel geometric_label(const FieldTower& F, const TorusInstance& torus,
                                const TorusCharacter& theta) {
  SemisimpleLabel label;
  label.blocks.resize(torus.group_spec().blocks.size());
  for (size_t j = 0; j < torus.coords().size(); ++j) {
    const TorusInstance::Coord& c = torus.coords()[j];
    Frac fr = F.fraction_of(theta.residues[j], c.level);
    auto [mn, e] = frobenius_orbit_frac(fr, F.q());
    int bump = c.level / e;  // = part / e for split blocks
    require(c.level % e == 0, "orbit size does not divide the coordinate level");
    auto& slot = label.blocks[c.block][mn];
    slot.first = e;
    slot.second += bump;
  }
  return label;
}

std::pair<TorusType, TorusCharacter> realize_dl_pair(const FieldTower& F,
                                                     const SemisimpleLabel& label) {
  require(label.blocks.size() == 1, "realize_dl_pair expects a single-block label");
  std::vector<std::pair<int, long long>> coords;  // (orbit size, residue)
  for (const auto& [fr, sm] : label.blocks[0]) {
    auto [e, mult] = sm;
    long long N = F.unit_order(e);
    require(N % fr.den == 0, "orbit denominator does not divide q^e - 1");
    long long k = fr.num * (N / fr.den);
    for (int i = 0; i < mult; ++i) coords.emplace_back(e, k);
  }
  std::sort(coords.begin(), coords.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first > b.first;
              return a.second < b.second;
            });
  std::vector<int> parts;
  TorusCharacter theta;
  for (auto& [e, k] : coords) {
    parts.push_back(e);
    theta.residues.push_back(k);
  }
  TorusType type;
  type.per_block.push_back(Partition(parts));
  return {type, theta};
}

DLEngine::DLEngine(const ClassTable& table, DLPath path) : table_(&table), path_(path) {}

const TorusInstance& DLEngine::torus(const TorusType& t) {
  auto key = t.per_block_parts();
  auto it = tori_.find(key);
  if (it == tori_.end())
    it = tori_.emplace(key, TorusInstance(table_->tower(), table_->spec(), t)).first;
  return it->second;
}

long long DLEngine::green_product(const TorusInstance& inst,
                                  const std::vector<long long>& logs, const ConjClass& cc) {
  const FieldTower& F = table_->tower();
  long long q = F.q();
  // bucket coordinates into centralizer factors by eigenvalue orbit
  long long product = 1;
  for (size_t bi = 0; bi < table_->spec().blocks.size(); ++bi) {
    const GroupBlock& b = table_->spec().blocks[bi];
    long long Q = ipow_checked(q, b.d, "Q");
    std::vector<std::vector<int>> factor_parts(cc.eigen[bi].size());
    for (size_t j = 0; j < inst.coords().size(); ++j) {
      const TorusInstance::Coord& c = inst.coords()[j];
      if (c.block != (int)bi) continue;
      Frac fr = F.fraction_of(logs[j], c.level);
      auto [mn, e] = frobenius_orbit_frac(fr, Q);
      int idx = -1;
      for (size_t a = 0; a < cc.eigen[bi].size(); ++a)
        if (cc.eigen[bi][a].orbit_min == mn && cc.eigen[bi][a].r == e) { idx = (int)a; break; }
      if (idx < 0) return 0;  // point not conjugate to s
      require(c.part % e == 0, "orbit size does not divide the torus part");
      factor_parts[idx].push_back(c.part / e);
    }
    for (size_t a = 0; a < cc.eigen[bi].size(); ++a) {
      const EigenFactor& ef = cc.eigen[bi][a];
      std::vector<int> parts = factor_parts[a];
      std::sort(parts.begin(), parts.end(), std::greater<int>());
      Partition mu(parts);
      if (mu.size() != ef.m) return 0;
      long long Qr = ipow_checked(Q, ef.r, "Q^r");
      auto key = std::make_pair(ef.m, Qr);
      auto it = green_.find(key);
      if (it == green_.end()) it = green_.emplace(key, build_green_table(ef.m, Qr)).first;
      product = checked_mul(product, it->second.value(mu, ef.unip), "green product");
    }
  }
  return product;
}

const std::vector<std::vector<DLEngine::Term>>& DLEngine::terms(const TorusType& T) {
  auto key = T.per_block_parts();
  auto it = terms_.find(key);
  if (it != terms_.end()) return it->second;
  const TorusInstance& inst = torus(T);
  const FieldTower& F = table_->tower();
  int r = table_->num_classes();
  std::vector<std::vector<Term>> all(r);
  if (path_ == DLPath::element_sum) {
    const auto& elems = table_->elements();
    if (inverses_.empty()) {
      inverses_.reserve(elems.size());
      for (const auto& x : elems) inverses_.push_back(ge_inverse(F, x));
    }
    for (int c = 0; c < r; ++c) {
      const ConjClass& cc = table_->cls(c);
      std::map<long long, long long> counts;
      for (size_t xi = 0; xi < elems.size(); ++xi) {
        GroupElement t = ge_mul(F, ge_mul(F, inverses_[xi], cc.s), elems[xi]);
        auto logs = inst.coords_of(t);
        if (!logs.has_value()) continue;
        ++counts[inst.point_index(*logs)];
      }
      for (auto& [idx, count] : counts) {
        require(count == cc.cent_s_order,
                "conjugation fiber is not a full centralizer coset");
        long long g = green_product(inst, inst.point_logs(idx), cc);
        if (g != 0) all[c].push_back({idx, g});
      }
    }
  } else {
    for (int c = 0; c < r; ++c) {
      const ConjClass& cc = table_->cls(c);
      int s_class = table_->class_index(cc.s);
      for (long long idx = 0; idx < inst.num_points(); ++idx) {
        std::vector<long long> logs = inst.point_logs(idx);
        GroupElement t = inst.element(logs);
        if (table_->class_index(t) != s_class) continue;
        long long g = green_product(inst, logs, cc);
        if (g != 0) all[c].push_back({idx, g});
      }
    }
  }
  return terms_.emplace(key, std::move(all)).first->second;
}

ClassFunction DLEngine::induce(const TorusType& T, const std::vector<cplx>& fvals) {
  const TorusInstance& inst = torus(T);
  require((long long)fvals.size() == inst.num_points(), "function length != |T^F|");
  const auto& tm = terms(T);
  ClassFunction out(*table_);
  for (int c = 0; c < table_->num_classes(); ++c) {
    cplx acc = 0;
    for (const Term& t : tm[c]) acc += double(t.green) * fvals[t.point];
    out[c] = acc;
  }
  return out;
}

ClassFunction DLEngine::dl_character(const TorusType& T, const TorusCharacter& theta) {
  return induce(T, torus(T).char_values(theta));
}

std::vector<cplx> DLEngine::restrict_to_torus(const ClassFunction& f, const TorusType& T) {
  const TorusInstance& inst = torus(T);
  std::vector<cplx> out(inst.num_points(), 0.0);
  for (const TorusCharacter& theta : all_characters(T)) {
    std::vector<cplx> tv = inst.char_values(theta);
    ClassFunction r = induce(T, tv);
    cplx coeff = inner_product(f, r);
    if (std::abs(coeff) < 1e-14) continue;
    for (long long i = 0; i < inst.num_points(); ++i) out[i] += coeff * tv[i];
  }
  return out;
}

std::vector<TorusCharacter> DLEngine::all_characters(const TorusType& T) {
  const TorusInstance& inst = torus(T);
  std::vector<TorusCharacter> out;
  for (long long idx = 0; idx < inst.num_points(); ++idx) {
    TorusCharacter th;
    th.residues = inst.point_logs(idx);
    out.push_back(std::move(th));
  }
  return out;
}

std::vector<LusztigSeries> DLEngine::lusztig_series(const CharacterTable& chars) {
  require(chars.table == table_, "character table belongs to another group");
  const FieldTower& F = table_->tower();
  std::map<SemisimpleLabel, std::vector<int>> parts;
  std::vector<int> assigned(chars.num_irreps(), -1);
  std::vector<SemisimpleLabel> labels;
  for (const TorusType& T : torus_types(table_->spec())) {
    const TorusInstance& inst = torus(T);
    for (const TorusCharacter& theta : all_characters(T)) {
      ClassFunction R = dl_character(T, theta);
      SemisimpleLabel label = geometric_label(F, inst, theta);
      auto mults = decompose(chars, R);
      for (int i = 0; i < chars.num_irreps(); ++i) {
        double m = mults[i].real();
        require(std::abs(mults[i].imag()) < 1e-6 && std::abs(m - std::llround(m)) < 1e-6,
                "non-integer multiplicity in a Deligne-Lusztig character");
        if (std::llround(m) == 0) continue;
        // Every constituent lies in the series of the pair's label
        // (disjointness of series; a violation means an upstream bug).
        size_t li;
        for (li = 0; li < labels.size(); ++li)
          if (labels[li] == label) break;
        if (li == labels.size()) labels.push_back(label);
        if (assigned[i] == -1) {
          assigned[i] = (int)li;
          parts[label].push_back(i);
        } else {
          require(labels[assigned[i]] == label,
                  "irreducible appears in two distinct Lusztig series");
        }
      }
    }
  }
  for (int i = 0; i < chars.num_irreps(); ++i)
    require(assigned[i] >= 0, "irreducible missed by every Deligne-Lusztig character");
  std::vector<LusztigSeries> out;
  for (auto& [label, members] : parts) {
    std::sort(members.begin(), members.end());
    out.push_back({label, members});
  }
  return out;
}

long long DLEngine::transporter_count(const TorusType& T1, const TorusCharacter& th1,
                                      const TorusType& T2, const TorusCharacter& th2) {
  const FieldTower& F = table_->tower();
  const TorusInstance& i1 = torus(T1);
  const TorusInstance& i2 = torus(T2);
  // generators of T1^F: one unit generator per coordinate
  std::vector<GroupElement> gens;
  std::vector<std::vector<long long>> gen_logs;
  for (int j = 0; j < i1.num_coords(); ++j) {
    std::vector<long long> logs(i1.num_coords(), 0);
    logs[j] = 1 % i1.coords()[j].size;
    gens.push_back(i1.element(logs));
    gen_logs.push_back(logs);
  }
  long long count = 0;
  const auto& elems = table_->elements();
  for (const auto& x : elems) {
    GroupElement xinv = ge_inverse(F, x);
    bool ok = true;
    for (size_t j = 0; j < gens.size() && ok; ++j) {
      GroupElement conj = ge_mul(F, ge_mul(F, x, gens[j]), xinv);
      auto logs2 = i2.coords_of(conj);
      if (!logs2.has_value()) { ok = false; break; }
      // theta2(x t x^{-1}) must equal theta1(t); both values are roots of
      // unity with exact rational exponents
      Frac lhs(0, 1), rhs(0, 1);
      for (int m = 0; m < i2.num_coords(); ++m)
        lhs = lhs.plus(Frac(th2.residues[m] * (*logs2)[m], i2.coords()[m].size));
      for (int m = 0; m < i1.num_coords(); ++m)
        rhs = rhs.plus(Frac(th1.residues[m] * gen_logs[j][m], i1.coords()[m].size));
      ok = lhs == rhs;
    }
    if (ok) ++count;
  }
  require(count % i1.order() == 0, "transporter count is not a multiple of |T^F|");
  return count / i1.order();
}

cplx torus_inner(const TorusInstance& inst, const std::vector<cplx>& a,
                 const std::vector<cplx>& b) {
  require(a.size() == b.size() && (long long)a.size() == inst.num_points(),
          "torus function length mismatch");
  cplx acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * std::conj(b[i]);
  return acc / double(inst.num_points());
}

}  // namespace glf
