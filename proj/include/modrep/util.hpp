#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace modrep {

// splitmix64: deterministic across platforms, used for all seeded sampling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

 private:
  std::uint64_t state_;
};

// Evaluates pred(i) for i in [0, n); returns the smallest failing index or -1.
// Result is independent of the number of jobs.
inline long long parallel_first_failure(std::size_t n, int jobs,
                                        const std::function<bool(std::size_t)>& pred) {
  if (jobs <= 1 || n < 64) {
    for (std::size_t i = 0; i < n; ++i)
      if (!pred(i)) return static_cast<long long>(i);
    return -1;
  }
  std::atomic<long long> first{-1};
  std::vector<std::thread> threads;
  std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
  std::size_t chunk = (n + nthreads - 1) / nthreads;
  for (std::size_t t = 0; t < nthreads; ++t) {
    threads.emplace_back([&, t]() {
      std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
      for (std::size_t i = lo; i < hi; ++i) {
        long long cur = first.load(std::memory_order_relaxed);
        if (cur != -1 && cur < static_cast<long long>(i)) return;
        if (!pred(i)) {
          long long mine = static_cast<long long>(i);
          long long prev = first.load();
          while ((prev == -1 || mine < prev) && !first.compare_exchange_weak(prev, mine)) {
          }
          return;
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  return first.load();
}

inline bool parallel_all(std::size_t n, int jobs, const std::function<bool(std::size_t)>& pred) {
  return parallel_first_failure(n, jobs, pred) == -1;
}

// n mod p as a nonnegative residue, n may be negative.
inline long mod_residue(long long n, long p) {
  long long r = n % p;
  return static_cast<long>(r < 0 ? r + p : r);
}

// falling factorial [n]_m mod p: 1 if m == 0, n(n-1)...(n-m+1) if m > 0, 0 if m < 0.
inline long falling_factorial(long long n, long long m, long p) {
  if (m < 0) return 0;
  long r = 1 % p;
  for (long long t = 0; t < m; ++t) r = static_cast<long>(mod_residue(r * (n - t), p));
  return r;
}

// binomial C(n, k) mod p for n >= 0 (exact integer divisions before reduction stay small
// at desk scale, so compute multiplicatively mod p via falling factorial / k!).
inline long binom_mod(long long n, long long k, long p) {
  if (k < 0 || (n >= 0 && k > n)) return 0;
  long num = falling_factorial(n, k, p);
  long den = 1 % p;
  for (long long t = 1; t <= k; ++t) den = static_cast<long>(mod_residue(den * t, p));
  if (den == 0) {
    // k! divisible by p: fall back to Lucas' theorem (n >= 0 only at desk scale)
    long r = 1 % p;
    long long nn = n, kk = k;
    while (kk > 0) {
      long nd = static_cast<long>(nn % p), kd = static_cast<long>(kk % p);
      if (kd > nd) return 0;
      long part = falling_factorial(nd, kd, p);
      long fk = 1;
      for (long t = 1; t <= kd; ++t) fk = static_cast<long>(mod_residue(fk * t, p));
      // fk invertible: kd < p
      long inv = 1;
      for (long e = 0; e < p - 2; ++e) inv = static_cast<long>(mod_residue(inv * fk, p));
      r = static_cast<long>(mod_residue(static_cast<long long>(r) * part % p * inv, p));
      nn /= p;
      kk /= p;
    }
    return r;
  }
  long inv = 1;
  for (long e = 0; e < p - 2; ++e) inv = static_cast<long>(mod_residue(inv * den, p));
  return static_cast<long>(mod_residue(static_cast<long long>(num) * inv, p));
}

}  // namespace modrep
