#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace glf {

using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-8;

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a computation would exceed a configured size budget.  The
// message always names the offending size so the CLI can surface it.
class BudgetError : public Error {
public:
  BudgetError(const std::string& what, long long size, long long budget)
      : Error(what + ": size " + std::to_string(size) + " exceeds budget " +
              std::to_string(budget)) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

// |a-b| up to an absolute tolerance scaled by the largest magnitude involved.
inline bool approx_eq(cplx a, cplx b, double tol = kDefaultTol) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

// Reduced fraction in [0,1), used for points of (Q/Z) with denominator prime
// to p.  Arithmetic is mod 1.
struct Frac {
  long long num = 0;
  long long den = 1;

  Frac() = default;
  Frac(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) { den = -den; num = -num; }
    num %= den;
    if (num < 0) num += den;
    long long g = std::gcd(num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  Frac times(long long k) const {
    long long m = ((k % den) * (num % den)) % den;
    return Frac(m, den);
  }
  Frac plus(const Frac& o) const {
    long long d = std::lcm(den, o.den);
    return Frac(num * (d / den) + o.num * (d / o.den), d);
  }
  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
  bool operator<(const Frac& o) const {
    return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
  }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// Orbit of f under multiplication by q mod 1.  Returns (minimal element, size).
inline std::pair<Frac, int> frobenius_orbit_frac(const Frac& f, long long q) {
  Frac cur = f, best = f;
  int e = 0;
  do {
    if (cur < best) best = cur;
    cur = cur.times(q);
    ++e;
  } while (!(cur == f));
  return {best, e};
}

// Static-chunked parallel loop.  Each index writes its own output slot, so
// results are deterministic regardless of the thread count.
inline void parallel_for(long long n, const std::function<void(long long)>& fn,
                         unsigned threads = 0) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads <= 1 || n < 64) {
    for (long long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  long long chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    long long lo = t * chunk, hi = std::min<long long>(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] {
      for (long long i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

inline long long checked_mul(long long a, long long b, const char* what) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(std::string("integer overflow in ") + what);
  return r;
}

inline long long ipow_checked(long long base, int exp, const char* what) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base, what);
  return r;
}

}  // namespace glf
