#include "cauchykit/common.hpp"

#include <cmath>
#include <cstdlib>
#include <thread>

namespace cauchykit {

std::size_t thread_count() {
  static std::size_t cached = [] {
    if (const char* env = std::getenv("CAUCHYKIT_THREADS")) {
      long v = std::strtol(env, nullptr, 10);
      if (v >= 1 && v <= 256) return static_cast<std::size_t>(v);
    }
    return std::size_t{1};
  }();
  return cached;
}

real mul_mod_one(std::uint64_t n, real theta) {
  if (theta == 0.0L || n == 0) return 0.0L;
  if (theta < 0.0L || theta >= 1.0L) throw domain_error("mul_mod_one: theta must lie in [0,1)");
  int e = 0;
  const real m = std::frexp(theta, &e);  // theta = m * 2^e, m in [0.5, 1)
  const int shift = 64 - e;              // theta = M2 * 2^-shift with M2 below
  if (shift >= 128) {
    // n * theta < 2^64 * 2^(e) <= 2^(128-shift) <= 1
    return static_cast<real>(n) * theta;
  }
  const auto M2 = static_cast<unsigned __int128>(m * 18446744073709551616.0L);  // m * 2^64, exact
  unsigned __int128 prod = static_cast<unsigned __int128>(n) * M2;  // implicitly mod 2^128
  if (shift < 128) prod &= ((static_cast<unsigned __int128>(1) << shift) - 1);
  const auto top = static_cast<std::uint64_t>(prod >> 64);
  const auto low = static_cast<std::uint64_t>(prod);
  return std::ldexp(static_cast<real>(top), 64 - shift) + std::ldexp(static_cast<real>(low), -shift);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& chunk_fn) {
  const std::size_t nthreads = thread_count();
  if (nthreads <= 1 || n < 2 * nthreads) {
    chunk_fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  const std::size_t step = (n + nthreads - 1) / nthreads;
  for (std::size_t t = 0; t < nthreads; ++t) {
    const std::size_t lo = t * step;
    const std::size_t hi = std::min(n, lo + step);
    if (lo >= hi) break;
    pool.emplace_back(chunk_fn, lo, hi);
  }
  for (auto& th : pool) th.join();
}

}  // namespace cauchykit
