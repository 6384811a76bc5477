#include "cauchykit/series.hpp"

#include <cmath>

namespace cauchykit {

cplx series_eval(const TaylorSeries& f, cplx z) {
  if (std::abs(z) > 1.0L + 1e-12L)
    throw domain_error("series_eval: evaluation point outside the closed disk");
  cplx acc(0, 0);
  for (std::size_t i = f.coeffs.size(); i-- > 0;) acc = acc * z + f.coeffs[i];
  return acc;
}

TaylorSeries series_derivative(const TaylorSeries& f) {
  if (f.coeffs.size() <= 1) return TaylorSeries(CoefficientSequence{cplx(0, 0)});
  CoefficientSequence d(f.coeffs.size() - 1);
  for (std::size_t n = 1; n < f.coeffs.size(); ++n)
    d[n - 1] = f.coeffs[n] * static_cast<real>(n);
  return TaylorSeries(std::move(d));
}

TaylorSeries dilate(const TaylorSeries& f, real r) {
  CoefficientSequence c = f.coeffs;
  real rn = 1.0L;
  for (std::size_t n = 0; n < c.size(); ++n) {
    c[n] *= rn;
    rn *= r;
  }
  return TaylorSeries(std::move(c));
}

TaylorSeries series_add(const TaylorSeries& f, const TaylorSeries& g) {
  CoefficientSequence c(std::max(f.coeffs.size(), g.coeffs.size()), cplx(0, 0));
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = f.at(n) + g.at(n);
  return TaylorSeries(std::move(c));
}

TaylorSeries series_scale(const TaylorSeries& f, cplx c) {
  CoefficientSequence v = f.coeffs;
  for (auto& x : v) x *= c;
  return TaylorSeries(std::move(v));
}

TaylorSeries series_multiply(const TaylorSeries& f, const TaylorSeries& g, int degree) {
  CoefficientSequence c(static_cast<std::size_t>(degree) + 1, cplx(0, 0));
  for (std::size_t n = 0; n < c.size(); ++n) {
    cplx s(0, 0);
    for (std::size_t k = 0; k <= n; ++k) s += f.at(k) * g.at(n - k);
    c[n] = s;
  }
  return TaylorSeries(std::move(c));
}

TaylorSeries series_divide(const TaylorSeries& f, const TaylorSeries& g, int degree) {
  if (degree < 0) throw precondition_error("series_divide: negative degree");
  const cplx g0 = g.at(0);
  if (std::abs(g0) <= 1e-14L) throw division_error("series_divide: g(0) vanishes");
  CoefficientSequence h(static_cast<std::size_t>(degree) + 1, cplx(0, 0));
  for (std::size_t n = 0; n < h.size(); ++n) {
    cplx s = f.at(n);
    for (std::size_t k = 0; k < n; ++k) s -= h[k] * g.at(n - k);
    h[n] = s / g0;
  }
  return TaylorSeries(std::move(h));
}

TaylorSeries toeplitz_conj_apply(const TaylorSeries& b, const TaylorSeries& f) {
  CoefficientSequence h(f.coeffs.size(), cplx(0, 0));
  for (std::size_t n = 0; n < h.size(); ++n) {
    cplx s(0, 0);
    for (std::size_t k = 0; n + k < f.coeffs.size() && k < b.coeffs.size(); ++k)
      s += std::conj(b.coeffs[k]) * f.coeffs[n + k];
    h[n] = s;
  }
  return TaylorSeries(std::move(h));
}

real h2_norm(const TaylorSeries& f) {
  real s = 0;
  for (const cplx& c : f.coeffs) s += std::norm(c);
  return std::sqrt(s);
}

real l1_norm(const TaylorSeries& f) {
  real s = 0;
  for (const cplx& c : f.coeffs) s += std::abs(c);
  return s;
}

}  // namespace cauchykit
