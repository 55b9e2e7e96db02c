#include "glf/partitions.hpp"

#include <algorithm>
#include <numeric>

namespace glf {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    require(parts[i] > 0, "partition parts must be positive");
    if (i > 0) require(parts[i - 1] >= parts[i], "partition parts must decrease");
  }
}

int Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

long long Partition::n_value() const {
  long long s = 0;
  for (size_t i = 0; i < parts.size(); ++i) s += (long long)i * parts[i];
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 1; !parts.empty() && j <= parts[0]; ++j) {
    int cnt = 0;
    for (int p : parts)
      if (p >= j) ++cnt;
    c.push_back(cnt);
  }
  return Partition(c);
}

std::string Partition::str() const {
  if (parts.empty()) return "()";
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s;
}

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int k = std::min(n, maxpart); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  require(n >= 0, "partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, out);
  if (n == 0) out = {Partition()};
  return out;
}

/*
  Murnaghan-Nakayama through beta-sets: border strips of length m in lambda
  correspond to beta-numbers b with b - m >= 0 absent from the set, the sign
  being (-1)^{number of beta-numbers strictly between b-m and b}.
*/
namespace {

long long mn_rec(std::vector<int> beta, std::vector<int> mu,
                 std::map<std::pair<std::vector<int>, std::vector<int>>, long long>& memo) {
  if (mu.empty()) return 1;
  auto key = std::make_pair(beta, mu);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int m = mu[0];
  std::vector<int> rest(mu.begin() + 1, mu.end());
  long long total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i];
    if (b < m) continue;
    if (std::find(beta.begin(), beta.end(), b - m) != beta.end()) continue;
    int ht = 0;
    for (int x : beta)
      if (x > b - m && x < b) ++ht;
    std::vector<int> nb = beta;
    nb[i] = b - m;
    std::sort(nb.begin(), nb.end());
    // strip trailing zeros-run normalization: beta-sets are unique up to shift,
    // keep the raw set (same length) for memo consistency
    long long sign = (ht % 2 == 0) ? 1 : -1;
    total += sign * mn_rec(nb, rest, memo);
  }
  memo[key] = total;
  return total;
}

}  // namespace

long long sym_char(const Partition& lambda, const Partition& mu) {
  require(lambda.size() == mu.size(), "sym_char: |lambda| != |mu|");
  int n = lambda.size();
  if (n == 0) return 1;
  int l = lambda.length();
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = lambda.parts[i] + (l - 1 - i);
  std::sort(beta.begin(), beta.end());
  std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;
  return mn_rec(beta, mu.parts, memo);
}

/*
  Charge of a word with partition content (Lascoux-Schutzenberger).  Standard
  subwords are extracted scanning right to left cyclically; the charge of a
  standard word gives letter r+1 the index of r, plus one when r+1 sits to
  the right of r.
*/
namespace {

int charge_standard(const std::vector<int>& word) {
  int maxl = 0;
  for (int x : word) maxl = std::max(maxl, x);
  std::vector<int> pos(maxl + 1, -1);
  for (size_t i = 0; i < word.size(); ++i) pos[word[i]] = (int)i;
  int idx = 0, total = 0;
  for (int r = 2; r <= maxl; ++r) {
    if (pos[r] > pos[r - 1]) ++idx;
    total += idx;
  }
  return total;
}

int charge(std::vector<int> word) {
  int total = 0;
  while (!word.empty()) {
    int maxl = 0;
    for (int x : word) maxl = std::max(maxl, x);
    std::vector<int> taken(word.size(), 0);
    int n = (int)word.size();
    int cursor = n - 1;
    std::vector<int> sub_pos;
    for (int letter = 1; letter <= maxl; ++letter) {
      int found = -1;
      for (int step = 0; step < n; ++step) {
        int i = (cursor - step % n + n) % n;
        if (!taken[i] && word[i] == letter) { found = i; break; }
      }
      require(found >= 0, "charge: content is not a partition");
      taken[found] = 1;
      sub_pos.push_back(found);
      cursor = (found - 1 + n) % n;
    }
    std::sort(sub_pos.begin(), sub_pos.end());
    std::vector<int> sub;
    for (int i : sub_pos) sub.push_back(word[i]);
    total += charge_standard(sub);
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
      if (!taken[i]) rest.push_back(word[i]);
    word = std::move(rest);
  }
  return total;
}

void gen_ssyt(const Partition& shape, std::vector<int>& remaining,
              std::vector<std::vector<int>>& tab, int row, int col,
              const std::function<void()>& emit) {
  int nrows = shape.length();
  if (row == nrows) { emit(); return; }
  if (col == shape.parts[row]) { gen_ssyt(shape, remaining, tab, row + 1, 0, emit); return; }
  int lo = 1;
  if (col > 0) lo = std::max(lo, tab[row][col - 1]);
  if (row > 0) lo = std::max(lo, tab[row - 1][col] + 1);
  for (int v = lo; v <= (int)remaining.size(); ++v) {
    if (remaining[v - 1] == 0) continue;
    --remaining[v - 1];
    tab[row][col] = v;
    gen_ssyt(shape, remaining, tab, row, col + 1, emit);
    ++remaining[v - 1];
  }
}

}  // namespace

std::vector<long long> kostka_foulkes(const Partition& lambda, const Partition& mu) {
  require(lambda.size() == mu.size(), "kostka_foulkes: |lambda| != |mu|");
  std::vector<long long> coeffs;
  if (lambda.size() == 0) return {1};
  std::vector<int> remaining = mu.parts;
  std::vector<std::vector<int>> tab(lambda.length());
  for (int i = 0; i < lambda.length(); ++i) tab[i].assign(lambda.parts[i], 0);
  auto emit = [&]() {
    // reading word: rows bottom to top, each left to right
    std::vector<int> word;
    for (int i = lambda.length() - 1; i >= 0; --i)
      for (int x : tab[i]) word.push_back(x);
    int c = charge(word);
    if ((int)coeffs.size() <= c) coeffs.resize(c + 1, 0);
    ++coeffs[c];
  };
  gen_ssyt(lambda, remaining, tab, 0, 0, emit);
  return coeffs;
}

long long green_polynomial(const Partition& rho, const Partition& mu, long long q) {
  require(rho.size() == mu.size(), "green_polynomial: |rho| != |mu|");
  long long nmu = mu.n_value();
  long long total = 0;
  for (const Partition& lambda : partitions(rho.size())) {
    std::vector<long long> kf = kostka_foulkes(lambda, mu);
    long long chi = sym_char(lambda, rho);
    if (chi == 0) continue;
    // q^{n(mu)} K_{lambda,mu}(1/q) = sum_c N_c q^{n(mu)-c}
    long long kval = 0;
    for (size_t c = 0; c < kf.size(); ++c) {
      if (kf[c] == 0) continue;
      require((long long)c <= nmu, "charge exceeds n(mu)");
      long long term = checked_mul(kf[c], ipow_checked(q, int(nmu - c), "green"), "green");
      kval += term;
    }
    total += checked_mul(chi, kval, "green");
  }
  return total;
}

long long GreenTable::value(const Partition& rho, const Partition& mu) const {
  for (size_t i = 0; i < index.size(); ++i)
    if (index[i] == rho)
      for (size_t j = 0; j < index.size(); ++j)
        if (index[j] == mu) return values[i][j];
  throw Error("GreenTable: partition not of size n");
}

GreenTable build_green_table(int n, long long q) {
  GreenTable t;
  t.n = n;
  t.q = q;
  t.index = partitions(n);
  t.values.assign(t.index.size(), std::vector<long long>(t.index.size(), 0));
  for (size_t i = 0; i < t.index.size(); ++i)
    for (size_t j = 0; j < t.index.size(); ++j)
      t.values[i][j] = green_polynomial(t.index[i], t.index[j], q);
  return t;
}

}  // namespace glf
