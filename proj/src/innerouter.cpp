#include "cauchykit/innerouter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cauchykit/fft.hpp"
#include "cauchykit/grid.hpp"

namespace cauchykit {

namespace {

constexpr int kDegreeCap = 1 << 14;
constexpr real kRho = 1.0L - 0.000244140625L;  // 1 - 2^-12

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Herglotz transform evaluated at all nodes of the radius-rho circle. Atom
// contributions are summed exactly; density parts go through their Fourier
// coefficients (exact for trigonometric-polynomial densities).
std::vector<cplx> herglotz_on_circle(const BoundaryMeasure& mu, real rho, std::size_t M) {
  std::vector<cplx> H(M, cplx(0, 0));
  if (!mu.atoms.empty()) {
    for (std::size_t j = 0; j < M; ++j) {
      const cplx z = rho * unit_at_turns(static_cast<real>(j) / static_cast<real>(M));
      cplx s(0, 0);
      for (const auto& a : mu.atoms) {
        const cplx zeta = unit_at_turns(a.theta);
        s += a.weight * (zeta + z) / (zeta - z);
      }
      H[j] += s;
    }
  }
  if (!mu.density.empty()) {
    const std::size_t Md = mu.density.size();
    std::vector<cplx> d(Md);
    for (std::size_t j = 0; j < Md; ++j) d[j] = cplx(mu.density[j], 0.0L);
    auto coef = analysis_coefficients(d);  // coef[n] = (1/Md) sum d_j e^{-2pi i jn/Md}
    // H(z) = mass + 2 sum_{n>=1} muhat(n) z^n, muhat(n) = coef[n] for n < Md/2
    const std::size_t top = std::min(Md / 2, M);
    std::vector<cplx> series(top, cplx(0, 0));
    series[0] = coef[0];
    real rn = rho;
    for (std::size_t n = 1; n < top; ++n) {
      series[n] = 2.0L * coef[n] * rn;
      rn *= rho;
    }
    auto vals = synthesis_samples(series, M);
    for (std::size_t j = 0; j < M; ++j) H[j] += vals[j];
  }
  return H;
}

TaylorSeries coefficients_from_rho_circle(const std::vector<cplx>& samples, real rho, int degree) {
  auto c = analysis_coefficients(samples);
  c.resize(static_cast<std::size_t>(degree) + 1);
  real scale = 1.0L;
  for (std::size_t n = 0; n < c.size(); ++n) {
    c[n] *= scale;
    scale /= rho;
  }
  return TaylorSeries(std::move(c));
}

}  // namespace

OuterFunction outer_from_log_modulus(const BoundaryGrid& psi, int degree) {
  const std::size_t M = psi.M();
  if (degree < 0 || static_cast<std::size_t>(degree) >= M)
    throw precondition_error("outer_from_log_modulus: degree must be below grid size");
  real psi_max = 0.0L, psi_absmax = 0.0L;
  for (const cplx& v : psi.samples) {
    if (std::abs(v.imag()) > 1e-12L * (1.0L + std::abs(v.real())))
      throw precondition_error("outer_from_log_modulus: psi must be real");
    psi_max = std::max(psi_max, v.real());
    psi_absmax = std::max(psi_absmax, std::abs(v.real()));
  }
  if (psi_max > 11300.0L)
    throw resource_error("outer_from_log_modulus: exp(psi) overflows extended precision");

  OuterFunction out;
  // spectral decay of psi measured on [M/4, M/2]
  auto spec = analysis_coefficients(psi.samples);
  real tail = 0.0L, head = 0.0L;
  for (std::size_t k = 1; k < M; ++k) {
    const std::size_t freq = std::min(k, M - k);
    const real mag = std::abs(spec[k]);
    if (freq >= M / 4)
      tail = std::max(tail, mag);
    else
      head = std::max(head, mag);
  }
  out.spectral_tail = tail;
  out.accuracy_warning = tail > 1e-12L * std::max<real>(1.0L, head);

  const BoundaryGrid conj = conjugate_function(psi);
  std::vector<cplx> g(M);
  for (std::size_t j = 0; j < M; ++j)
    g[j] = std::exp(cplx(psi.samples[j].real(), conj.samples[j].real()));
  out.boundary = g;
  out.series = coeffs_from_boundary(BoundaryGrid(std::move(g)), degree);
  return out;
}

TaylorSeries singular_inner(const BoundaryMeasure& mu, int degree) {
  mu.validate();
  if (!mu.is_positive()) throw precondition_error("singular_inner: mu must be positive");
  if (degree < 0 || degree > kDegreeCap)
    throw precondition_error("singular_inner: degree outside [0, 2^14]");
  if (std::abs(mu.total_mass()) == 0.0L) {
    CoefficientSequence one(static_cast<std::size_t>(degree) + 1, cplx(0, 0));
    one[0] = cplx(1, 0);
    return TaylorSeries(std::move(one));
  }
  // M large enough that rho^M aliasing sits well below coefficient tolerances
  const std::size_t M = std::max<std::size_t>(1 << 17, next_pow2(4 * (static_cast<std::size_t>(degree) + 1)));
  auto H = herglotz_on_circle(mu, kRho, M);
  for (auto& h : H) h = std::exp(-h);
  return coefficients_from_rho_circle(H, kRho, degree);
}

cplx clark_b_value(const BoundaryMeasure& mu, real alpha, cplx z) {
  const cplx H = herglotz(mu, z) + cplx(0, alpha);
  return (H - cplx(1, 0)) / (H + cplx(1, 0));
}

ClarkPair clark_b_from_mu(const BoundaryMeasure& mu, real alpha, int degree) {
  mu.validate();
  if (!mu.is_positive() || std::abs(mu.total_mass()) == 0.0L)
    throw precondition_error("clark_b_from_mu: mu must be positive with positive mass");
  if (degree < 0 || degree > kDegreeCap)
    throw precondition_error("clark_b_from_mu: degree outside [0, 2^14]");
  const std::size_t M = std::max<std::size_t>(1 << 17, next_pow2(4 * (static_cast<std::size_t>(degree) + 1)));
  auto H = herglotz_on_circle(mu, kRho, M);
  for (auto& h : H) {
    const cplx v = h + cplx(0, alpha);
    h = (v - cplx(1, 0)) / (v + cplx(1, 0));
  }
  ClarkPair pair;
  pair.mu = mu;
  pair.alpha = alpha;
  pair.b = coefficients_from_rho_circle(H, kRho, degree);
  return pair;
}

real kernel_identity_residual(const ClarkPair& pair, cplx lambda, cplx z) {
  if (std::abs(lambda) > 0.9L + 1e-12L || std::abs(z) > 0.9L + 1e-12L)
    throw precondition_error("kernel_identity_residual: need |lambda|, |z| <= 0.9");
  const BoundaryMeasure& mu = pair.mu;
  // K(kappa_lambda dmu)(z): fold the Cauchy kernel at lambda into the weights
  cplx num(0, 0);
  for (const auto& a : mu.atoms) {
    const cplx zeta = unit_at_turns(a.theta);
    const cplx klam = cplx(1, 0) / (cplx(1, 0) - std::conj(lambda) * zeta);
    num += a.weight * klam / (cplx(1, 0) - std::conj(zeta) * z);
  }
  if (!mu.density.empty()) {
    const std::size_t M = mu.density.size();
    cplx acc(0, 0);
    for (std::size_t j = 0; j < M; ++j) {
      const cplx zeta = unit_at_turns(static_cast<real>(j) / static_cast<real>(M));
      const cplx klam = cplx(1, 0) / (cplx(1, 0) - std::conj(lambda) * zeta);
      acc += mu.density[j] * klam / (cplx(1, 0) - std::conj(zeta) * z);
    }
    num += acc / static_cast<real>(M);
  }
  const cplx den = cauchy_transform(mu, z);
  if (std::abs(den) == 0.0L)
    throw domain_error("kernel_identity_residual: K(dmu)(z) vanishes");
  const cplx lhs = num / den;
  const cplx b_l = clark_b_value(mu, pair.alpha, lambda);
  const cplx b_z = clark_b_value(mu, pair.alpha, z);
  const cplx rhs = (cplx(1, 0) - std::conj(b_l) * b_z) / (cplx(1, 0) - std::conj(lambda) * z);
  return std::abs(lhs - rhs);
}

void RieszProductSpec::validate() const {
  if (frequencies.empty() || frequencies.size() != amplitudes.size())
    throw construction_error("RieszProductSpec: frequencies/amplitudes mismatch");
  for (std::size_t k = 0; k < frequencies.size(); ++k) {
    if (std::abs(amplitudes[k]) >= 1.0L)
      throw construction_error("RieszProductSpec: amplitudes must satisfy |a| < 1");
    if (k > 0 && frequencies[k] < 3 * frequencies[k - 1])
      throw construction_error("RieszProductSpec: frequencies must be lacunary (ratio >= 3)");
  }
  if (grid_m != 0 && !is_power_of_two(grid_m))
    throw construction_error("RieszProductSpec: grid must be a power of two");
}

std::pair<BoundaryMeasure, RieszDiagnostics> riesz_product_measure(
    const RieszProductSpec& spec, const std::function<real(real)>& alpha_profile,
    const std::function<real(real)>& beta_profile) {
  spec.validate();
  std::size_t M = spec.grid_m;
  if (M == 0) {
    std::uint64_t top = spec.frequencies.empty() ? 1 : spec.frequencies.back();
    M = std::max<std::size_t>(256, next_pow2(static_cast<std::size_t>(4 * top)));
  }
  BoundaryMeasure mu;
  mu.density.assign(M, 1.0L);
  for (std::size_t k = 0; k < spec.frequencies.size(); ++k) {
    const real nk = static_cast<real>(spec.frequencies[k]);
    const real ak = spec.amplitudes[k];
    for (std::size_t j = 0; j < M; ++j) {
      const real th = static_cast<real>(j) / static_cast<real>(M);
      mu.density[j] *= 1.0L + ak * std::cos(kTwoPi * nk * th);
    }
  }
  RieszDiagnostics diag;
  diag.mass = static_cast<real>(mu.total_mass().real());

  // prefix sums of the cell masses for O(1) dyadic arc masses
  std::vector<real> prefix(M + 1, 0.0L);
  for (std::size_t j = 0; j < M; ++j) prefix[j + 1] = prefix[j] + mu.density[j] / static_cast<real>(M);
  const int j_top = static_cast<int>(std::log2(static_cast<double>(M))) - 2;
  for (int j = 1; j <= j_top; ++j) {
    const std::uint64_t n_arcs = std::uint64_t{1} << j;
    const std::size_t cells = M >> j;
    const real len = std::exp2(-static_cast<real>(j));
    const real a_ref = alpha_profile(len);
    const real b_ref = beta_profile(len);
    for (std::uint64_t k = 0; k < n_arcs; ++k) {
      const real mass_k = prefix[(k + 1) * cells] - prefix[k * cells];
      const std::uint64_t k2 = (k + 1) % n_arcs;
      const real mass_next = (k2 == 0) ? prefix[cells] - prefix[0]
                                       : prefix[(k2 + 1) * cells] - prefix[k2 * cells];
      RieszArcRow row;
      row.level_j = j;
      row.arc_k = k;
      row.ratio1 = mass_k / (len * a_ref);
      row.ratio2 = std::abs(mass_k - mass_next) / (len * b_ref);
      diag.max_ratio1 = std::max(diag.max_ratio1, row.ratio1);
      diag.max_ratio2 = std::max(diag.max_ratio2, row.ratio2);
      diag.rows.push_back(row);
    }
  }
  return {std::move(mu), std::move(diag)};
}

CyclicInnerCandidate cyclic_inner_candidate(const Majorant& w, real c1, int depth) {
  if (depth < 1 || depth > 10)
    throw precondition_error("cyclic_inner_candidate: depth outside [1, 10]");
  CyclicInnerCandidate out;
  out.c1 = c1;

  const std::size_t n_max = static_cast<std::size_t>(w.levels());
  const auto dini = square_dini_partial(w, n_max);
  out.dini_slope = dini.growth_slope;
  if (!fails_square_dini(dini))
    throw precondition_error(
        "cyclic_inner_candidate: w satisfies the square Dini-condition at desk scale");

  auto alpha = [](real t) { return std::log(std::log(7.3890560989306495L + 1.0L / t)); };
  auto beta = [&](real t) { return w(t) * std::exp(-c1 * alpha(t)); };

  RieszProductSpec spec;
  std::uint64_t nk = 3;
  for (int k = 0; k < depth; ++k) {
    spec.frequencies.push_back(nk);
    spec.amplitudes.push_back(std::min<real>(0.99L, beta(1.0L / static_cast<real>(nk))));
    nk *= 3;
  }
  auto [mu, diag] = riesz_product_measure(spec, alpha, beta);
  out.spec = spec;
  out.riesz = std::move(diag);

  const int degree = 4096;
  out.S = singular_inner(mu, degree);
  out.mu = std::move(mu);

  const TaylorSeries dS = series_derivative(out.S);
  real inf_ratio = std::numeric_limits<real>::infinity();
  real sup_ratio = 0.0L;
  for (int l = 1; l <= 10; ++l) {
    const real r = 1.0L - std::exp2(-static_cast<real>(l));
    const real t = 1.0L - r;
    const real lower = std::exp(-c1 * alpha(t));
    const real bt = beta(t);
    for (int a = 0; a < 128; ++a) {
      const cplx z = r * unit_at_turns(static_cast<real>(a) / 128.0L);
      inf_ratio = std::min(inf_ratio, std::abs(series_eval(out.S, z)) / lower);
      sup_ratio = std::max(sup_ratio, t * std::abs(series_eval(dS, z)) / bt);
    }
  }
  out.inf_modulus_ratio = inf_ratio;
  out.sup_derivative_ratio = sup_ratio;
  return out;
}

}  // namespace cauchykit
