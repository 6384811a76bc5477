#ifndef CAUCHYKIT_SERIES_HPP
#define CAUCHYKIT_SERIES_HPP

#include <vector>

#include "cauchykit/common.hpp"
#include "cauchykit/orlicz.hpp"

namespace cauchykit {

// Degree-truncated Taylor series; coefficient n is the z^n coefficient.
struct TaylorSeries {
  CoefficientSequence coeffs;

  TaylorSeries() = default;
  explicit TaylorSeries(CoefficientSequence c) : coeffs(std::move(c)) {
    if (coeffs.empty()) coeffs.push_back(cplx(0, 0));
  }
  static TaylorSeries monomial(int n, cplx c = cplx(1, 0)) {
    CoefficientSequence v(static_cast<std::size_t>(n) + 1, cplx(0, 0));
    v.back() = c;
    return TaylorSeries(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  cplx at(std::size_t n) const { return n < coeffs.size() ? coeffs[n] : cplx(0, 0); }
};

cplx series_eval(const TaylorSeries& f, cplx z);
TaylorSeries series_derivative(const TaylorSeries& f);
TaylorSeries dilate(const TaylorSeries& f, real r);
TaylorSeries series_add(const TaylorSeries& f, const TaylorSeries& g);
TaylorSeries series_scale(const TaylorSeries& f, cplx c);
TaylorSeries series_multiply(const TaylorSeries& f, const TaylorSeries& g, int degree);

// Coefficient recursion for f/g truncated at `degree`; requires g(0) != 0.
TaylorSeries series_divide(const TaylorSeries& f, const TaylorSeries& g, int degree);

// h(n) = sum_k conj(b(k)) f(n+k): the co-analytic Toeplitz action on coefficients.
TaylorSeries toeplitz_conj_apply(const TaylorSeries& b, const TaylorSeries& f);

real h2_norm(const TaylorSeries& f);
real l1_norm(const TaylorSeries& f);

}  // namespace cauchykit

#endif  // CAUCHYKIT_SERIES_HPP
