#include "glf/field.hpp"

#include <algorithm>
#include <cmath>

namespace glf {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long i = 2; i * i <= n; ++i)
    if (n % i == 0) return false;
  return true;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> ps;
  for (long long i = 2; i * i <= n; ++i) {
    if (n % i == 0) {
      ps.push_back(i);
      while (n % i == 0) n /= i;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// dense F_p polynomials, little-endian coefficients
using PPoly = std::vector<long long>;

void ptrim(PPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pmod(PPoly f, const PPoly& m, long long p) {
  // m monic
  while (f.size() >= m.size()) {
    long long c = f.back();
    size_t shift = f.size() - m.size();
    if (c != 0)
      for (size_t i = 0; i < m.size(); ++i) {
        f[shift + i] = (f[shift + i] - c * m[i]) % p;
        if (f[shift + i] < 0) f[shift + i] += p;
      }
    f.pop_back();
  }
  ptrim(f);
  return f;
}

PPoly pmulmod(const PPoly& x, const PPoly& y, const PPoly& m, long long p) {
  if (x.empty() || y.empty()) return {};
  PPoly r(x.size() + y.size() - 1, 0);
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i])
      for (size_t j = 0; j < y.size(); ++j)
        r[i + j] = (r[i + j] + x[i] * y[j]) % p;
  return pmod(std::move(r), m, p);
}

PPoly ppowmod(PPoly x, long long e, const PPoly& m, long long p) {
  PPoly r = {1};
  x = pmod(std::move(x), m, p);
  while (e > 0) {
    if (e & 1) r = pmulmod(r, x, m, p);
    x = pmulmod(x, x, m, p);
    e >>= 1;
  }
  return r;
}

PPoly pgcd(PPoly a, PPoly b, long long p) {
  auto inv_mod = [p](long long c) {
    long long r = 1, b2 = c % p, e = p - 2;
    while (e) { if (e & 1) r = r * b2 % p; b2 = b2 * b2 % p; e >>= 1; }
    return r;
  };
  while (!b.empty()) {
    // a mod b with b made monic
    long long lc = b.back();
    if (lc != 1) {
      long long il = inv_mod(lc);
      for (auto& c : b) c = c * il % p;
    }
    a = pmod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const PPoly& f, long long p, int n) {
  if (n == 1) return true;
  // x^{p^n} == x mod f, and gcd(x^{p^{n/r}} - x, f) = 1 for prime r | n
  PPoly x = {0, 1};
  std::vector<PPoly> frob(n + 1);
  frob[0] = x;
  for (int k = 1; k <= n; ++k) frob[k] = ppowmod(frob[k - 1], p, f, p);
  PPoly diff = frob[n];
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = (diff[1] - 1 + p) % p;
  ptrim(diff);
  if (!diff.empty()) return false;
  for (long long r : prime_factors(n)) {
    PPoly d2 = frob[n / r];
    if (d2.size() < 2) d2.resize(2, 0);
    d2[1] = (d2[1] - 1 + p) % p;
    ptrim(d2);
    PPoly g = pgcd(f, d2, p);
    if (g.size() != 1) return false;
  }
  return true;
}

bool is_primitive_root_x(const PPoly& f, long long p, long long size) {
  long long N = size - 1;
  if (N == 1) return true;
  PPoly x = {0, 1};
  for (long long r : prime_factors(N)) {
    PPoly y = ppowmod(x, N / r, f, p);
    if (y.size() == 1 && y[0] == 1) return false;
  }
  return true;
}

}  // namespace

FieldTower::FieldTower(long long p, int a, std::vector<int> levels,
                       long long level_budget, GeneratorSystem gen)
    : p_(p), a_(a) {
  require(is_prime(p), "field characteristic must be prime: " + std::to_string(p));
  require(a >= 1, "base exponent must be positive");
  q_ = 1;
  for (int i = 0; i < a; ++i) q_ = checked_mul(q_, p, "q = p^a");
  levels.push_back(1);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (int d : levels) {
    require(d >= 1, "extension degree must be positive");
    build_level(d, level_budget, gen);
  }
}

std::vector<int> FieldTower::levels() const {
  std::vector<int> out;
  for (auto& [d, lv] : levels_) out.push_back(d);
  return out;
}

const FieldTower::Level& FieldTower::level(int d) const {
  auto it = levels_.find(d);
  if (it == levels_.end()) throw Error("field level " + std::to_string(d) + " not in tower");
  return it->second;
}

void FieldTower::build_level(int d, long long budget, GeneratorSystem gen) {
  Level lv;
  lv.d = d;
  lv.n = a_ * d;
  lv.size = 1;
  for (int i = 0; i < lv.n; ++i) {
    lv.size = checked_mul(lv.size, p_, "field size");
    if (lv.size > budget)
      throw BudgetError("field level " + std::to_string(d), lv.size, budget);
  }

  // sublevels whose generator systems must stay compatible
  std::vector<const Level*> subs;
  for (auto& [d0, l0] : levels_)
    if (d % d0 == 0 && d0 != d) subs.push_back(&l0);

  int found = 0;
  PPoly chosen;
  for (long long m = 0; m < lv.size && found < 2; ++m) {
    PPoly f(lv.n + 1, 0);
    long long t = m;
    for (int i = 0; i < lv.n; ++i) { f[i] = t % p_; t /= p_; }
    f[lv.n] = 1;
    if (f[0] == 0) continue;  // root 0 can never generate the units
    if (!is_irreducible(f, p_, lv.n)) continue;
    if (!is_primitive_root_x(f, p_, lv.size)) continue;
    bool ok = true;
    for (const Level* l0 : subs) {
      // l0->poly must vanish at x^{(p^n-1)/(p^m-1)} mod f
      long long ratio = (lv.size - 1) / (l0->size - 1);
      PPoly y = ppowmod({0, 1}, ratio, f, p_);
      PPoly acc = {};  // Horner
      for (auto it = l0->poly.rbegin(); it != l0->poly.rend(); ++it) {
        acc = pmulmod(acc, y, f, p_);
        if (*it) {
          if (acc.empty()) acc = {*it};
          else acc[0] = (acc[0] + *it) % p_;
          ptrim(acc);
        }
      }
      if (!acc.empty()) { ok = false; break; }
    }
    if (!ok) continue;
    ++found;
    if (chosen.empty() || gen == GeneratorSystem::alternate) chosen = f;
    if (gen == GeneratorSystem::canonical) break;
  }
  require(!chosen.empty(), "no compatible primitive polynomial found at level " + std::to_string(d));
  lv.poly = chosen;

  // discrete log tables: powers of the root x
  lv.exp_rep.assign(lv.size - 1, 0);
  lv.log_of.assign(lv.size, -1);
  PPoly cur = {1};
  for (long long k = 0; k < lv.size - 1; ++k) {
    long long packed = 0, mul = 1;
    for (int i = 0; i < lv.n; ++i) {
      long long c = i < (int)cur.size() ? cur[i] : 0;
      packed += c * mul;
      mul *= p_;
    }
    lv.exp_rep[k] = packed;
    lv.log_of[packed] = k;
    cur.insert(cur.begin(), 0);
    cur = pmod(std::move(cur), lv.poly, p_);
  }
  levels_[d] = std::move(lv);
}

FFElem FieldTower::from_log(int d, long long k) const {
  long long N = unit_order(d);
  k %= N;
  if (k < 0) k += N;
  return {d, k};
}

FFElem FieldTower::from_int(int d, long long c) const {
  c %= p_;
  if (c < 0) c += p_;
  if (c == 0) return zero(d);
  const Level& lv = level(d);
  return {d, lv.log_of[c]};
}

FFElem FieldTower::mul(FFElem x, FFElem y) const {
  require(x.level == y.level, "field level mismatch in mul");
  if (x.is_zero() || y.is_zero()) return zero(x.level);
  return from_log(x.level, x.code + y.code);
}

FFElem FieldTower::add(FFElem x, FFElem y) const {
  require(x.level == y.level, "field level mismatch in add");
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const Level& lv = level(x.level);
  long long rx = lv.exp_rep[x.code], ry = lv.exp_rep[y.code];
  long long packed = 0, mul = 1;
  for (int i = 0; i < lv.n; ++i) {
    long long c = (rx % p_ + ry % p_) % p_;
    packed += c * mul;
    mul *= p_;
    rx /= p_;
    ry /= p_;
  }
  return {x.level, lv.log_of[packed]};
}

FFElem FieldTower::neg(FFElem x) const {
  if (x.is_zero() || p_ == 2) return x;
  long long N = unit_order(x.level);
  return from_log(x.level, x.code + N / 2);
}

FFElem FieldTower::sub(FFElem x, FFElem y) const { return add(x, neg(y)); }

FFElem FieldTower::inv(FFElem x) const {
  require(!x.is_zero(), "division by zero field element");
  return from_log(x.level, -x.code);
}

FFElem FieldTower::pow(FFElem x, long long e) const {
  if (x.is_zero()) {
    require(e > 0, "0^e undefined for e <= 0");
    return x;
  }
  long long N = unit_order(x.level);
  long long k = (__int128)x.code * (e % N) % N;
  return from_log(x.level, k);
}

FFElem FieldTower::frobenius(FFElem x, int t) const {
  if (x.is_zero()) return x;
  long long N = unit_order(x.level);
  long long k = x.code;
  for (int i = 0; i < t; ++i) k = (__int128)k * (q_ % N) % N;
  return {x.level, k};
}

bool FieldTower::in_subfield(FFElem x, int dsub) const {
  require(x.level % dsub == 0, "not a sublevel");
  if (x.is_zero()) return true;
  long long ratio = unit_order(x.level) / unit_order(dsub);
  return x.code % ratio == 0;
}

FFElem FieldTower::embed(FFElem x, int dto) const {
  require(dto % x.level == 0, "embedding target must be a multiple level");
  if (x.is_zero()) return zero(dto);
  long long ratio = unit_order(dto) / unit_order(x.level);
  return {dto, x.code * ratio};
}

FFElem FieldTower::project(FFElem x, int dsub) const {
  if (x.is_zero()) return zero(dsub);
  long long ratio = unit_order(x.level) / unit_order(dsub);
  require(x.code % ratio == 0, "element does not lie in requested subfield");
  return {dsub, x.code / ratio};
}

FFElem FieldTower::norm_to(FFElem x, int dsub) const {
  require(x.level % dsub == 0, "norm target must divide the level");
  level(dsub);
  if (x.is_zero()) return zero(dsub);
  return {dsub, x.code % unit_order(dsub)};
}

FFElem FieldTower::trace_to(FFElem x, int dsub) const {
  require(x.level % dsub == 0, "trace target must divide the level");
  level(dsub);
  int m = x.level / dsub;
  FFElem acc = zero(x.level);
  for (int i = 0; i < m; ++i) acc = add(acc, frobenius(x, dsub * i));
  return project(acc, dsub);
}

long long FieldTower::trace_to_prime(FFElem x) const {
  if (x.is_zero()) return 0;
  const Level& lv = level(x.level);
  // sum of all p-power conjugates, componentwise on representations
  std::vector<long long> digits(lv.n, 0);
  long long N = lv.size - 1;
  long long k = x.code;
  for (int i = 0; i < lv.n; ++i) {
    long long rep = lv.exp_rep[k];
    for (int t = 0; t < lv.n; ++t) {
      digits[t] = (digits[t] + rep % p_) % p_;
      rep /= p_;
    }
    k = (__int128)k * (p_ % N) % N;
  }
  for (int t = 1; t < lv.n; ++t)
    require(digits[t] == 0, "trace result not in prime field");
  return digits[0];
}

cplx FieldTower::additive_char(FFElem x) const {
  long long t = trace_to_prime(x);
  return std::polar(1.0, kTwoPi * double(t) / double(p_));
}

cplx FieldTower::mult_char_eval(long long k, FFElem x) const {
  require(!x.is_zero(), "multiplicative character evaluated at zero");
  long long N = unit_order(x.level);
  long long e = (__int128)(k % N + N) * (x.code % N) % N;
  return std::polar(1.0, kTwoPi * double(e) / double(N));
}

std::vector<long long> FieldTower::rep_digits(FFElem x) const {
  const Level& lv = level(x.level);
  std::vector<long long> digits(lv.n, 0);
  if (x.is_zero()) return digits;
  long long rep = lv.exp_rep[x.code];
  for (int i = 0; i < lv.n; ++i) {
    digits[i] = rep % p_;
    rep /= p_;
  }
  return digits;
}

FFElem FieldTower::from_digits(int d, const std::vector<long long>& digits) const {
  const Level& lv = level(d);
  require((int)digits.size() == lv.n, "digit vector has wrong length");
  long long packed = 0, mul = 1;
  for (int i = 0; i < lv.n; ++i) {
    long long c = digits[i] % p_;
    if (c < 0) c += p_;
    packed += c * mul;
    mul *= p_;
  }
  return {d, lv.log_of[packed]};
}

std::pair<int, long long> FieldTower::frobenius_orbit(long long k, int d) const {
  long long N = unit_order(d);
  k %= N;
  if (k < 0) k += N;
  long long cur = k, best = k;
  int e = 0;
  do {
    best = std::min(best, cur);
    cur = (__int128)cur * (q_ % N) % N;
    ++e;
  } while (cur != k);
  return {e, best};
}

}  // namespace glf
