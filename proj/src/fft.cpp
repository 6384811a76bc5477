#include "cauchykit/fft.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace cauchykit {

namespace {

// Half-length twiddle table per size, computed once. Angles from sinl/cosl so
// table entries are accurate to long double ulp.
const std::vector<cplx>& twiddles(std::size_t n) {
  static std::map<std::size_t, std::vector<cplx>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<cplx> w(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const real ang = -kTwoPi * static_cast<real>(k) / static_cast<real>(n);
    w[k] = cplx(std::cos(ang), std::sin(ang));
  }
  return cache.emplace(n, std::move(w)).first->second;
}

}  // namespace

void fft(std::vector<cplx>& a) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  if (!is_power_of_two(n)) throw precondition_error("fft: length must be a power of two");
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const auto& w = twiddles(n);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cplx t = a[i + k + len / 2] * w[k * stride];
        a[i + k + len / 2] = a[i + k] - t;
        a[i + k] += t;
      }
    }
  }
}

void ifft(std::vector<cplx>& a) {
  for (auto& v : a) v = std::conj(v);
  fft(a);
  const real inv = 1.0L / static_cast<real>(a.size());
  for (auto& v : a) v = std::conj(v) * inv;
}

std::vector<cplx> analysis_coefficients(const std::vector<cplx>& samples) {
  std::vector<cplx> c = samples;
  fft(c);
  const real inv = 1.0L / static_cast<real>(c.size());
  for (auto& v : c) v *= inv;
  return c;
}

std::vector<cplx> synthesis_samples(const std::vector<cplx>& coeffs, std::size_t M) {
  if (!is_power_of_two(M)) throw precondition_error("synthesis_samples: M must be a power of two");
  std::vector<cplx> c(M, cplx(0, 0));
  for (std::size_t k = 0; k < coeffs.size() && k < M; ++k) c[k] = coeffs[k];
  ifft(c);
  for (auto& v : c) v *= static_cast<real>(M);
  return c;
}

}  // namespace cauchykit
