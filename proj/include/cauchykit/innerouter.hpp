#ifndef CAUCHYKIT_INNEROUTER_HPP
#define CAUCHYKIT_INNEROUTER_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "cauchykit/majorant.hpp"
#include "cauchykit/measure.hpp"
#include "cauchykit/series.hpp"

namespace cauchykit {

struct OuterFunction {
  TaylorSeries series;
  std::vector<cplx> boundary;  // exp(psi + i psi~) at the grid nodes
  bool accuracy_warning = false;
  real spectral_tail = 0.0L;  // max |psi^(n)| over M/4 <= |n| <= M/2
};

// G = exp(psi + i H psi) from real boundary samples of the log-modulus.
OuterFunction outer_from_log_modulus(const BoundaryGrid& psi, int degree);

// S_mu = exp(-Herglotz(mu)), coefficients extracted on the radius-rho circle.
TaylorSeries singular_inner(const BoundaryMeasure& mu, int degree);

struct ClarkPair {
  BoundaryMeasure mu;
  real alpha = 0.0L;
  TaylorSeries b;
};

// Pointwise b(z) = (H + i alpha - 1)/(H + i alpha + 1), exact for atomic mu.
cplx clark_b_value(const BoundaryMeasure& mu, real alpha, cplx z);
ClarkPair clark_b_from_mu(const BoundaryMeasure& mu, real alpha, int degree);

// | K_mu kappa_lambda(z) - (1 - conj(b(lambda)) b(z)) / (1 - conj(lambda) z) |
real kernel_identity_residual(const ClarkPair& pair, cplx lambda, cplx z);

struct RieszProductSpec {
  std::vector<std::uint64_t> frequencies;  // lacunary: n_{k+1} >= 3 n_k
  std::vector<real> amplitudes;            // |a_k| < 1
  std::size_t grid_m = 0;                  // 0: chosen automatically
  void validate() const;
};

struct RieszArcRow {
  int level_j = 0;
  std::uint64_t arc_k = 0;
  real ratio1 = 0.0L;  // mu(I) / (|I| alpha(|I|))
  real ratio2 = 0.0L;  // |mu(I) - mu(I')| / (|I| beta(|I|))
};

struct RieszDiagnostics {
  real mass = 0.0L;
  real max_ratio1 = 0.0L;
  real max_ratio2 = 0.0L;
  std::vector<RieszArcRow> rows;
};

std::pair<BoundaryMeasure, RieszDiagnostics> riesz_product_measure(
    const RieszProductSpec& spec, const std::function<real(real)>& alpha_profile,
    const std::function<real(real)>& beta_profile);

struct CyclicInnerCandidate {
  RieszProductSpec spec;
  BoundaryMeasure mu;
  TaylorSeries S;
  real dini_slope = 0.0L;
  real c1 = 1.0L;
  real inf_modulus_ratio = 0.0L;     // inf |S(z)| / exp(-c1 alpha(1-|z|))
  real sup_derivative_ratio = 0.0L;  // sup (1-|z|) |S'(z)| / beta(1-|z|)
  RieszDiagnostics riesz;
};

// Candidate cyclic singular inner function for B_0(w); all quality numbers are
// measured, nothing is asserted.
CyclicInnerCandidate cyclic_inner_candidate(const Majorant& w, real c1, int depth);

}  // namespace cauchykit

#endif  // CAUCHYKIT_INNEROUTER_HPP
