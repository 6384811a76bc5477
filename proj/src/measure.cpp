#include "cauchykit/measure.hpp"

#include <cmath>

namespace cauchykit {

void BoundaryMeasure::validate() const {
  for (const auto& a : atoms) {
    if (!(a.theta >= 0.0L && a.theta < 1.0L))
      throw construction_error("BoundaryMeasure: atom angle must lie in [0,1) turns");
    if (!std::isfinite(a.weight.real()) || !std::isfinite(a.weight.imag()))
      throw construction_error("BoundaryMeasure: nonfinite atom weight");
  }
  if (!density.empty() && !is_power_of_two(density.size()))
    throw construction_error("BoundaryMeasure: density grid must be a power of two");
}

bool BoundaryMeasure::is_positive() const {
  for (const auto& a : atoms) {
    if (std::abs(a.weight.imag()) > 1e-15L || a.weight.real() < 0.0L) return false;
  }
  for (real d : density) {
    if (d < 0.0L) return false;
  }
  return true;
}

cplx BoundaryMeasure::total_mass() const {
  cplx s(0, 0);
  for (const auto& a : atoms) s += a.weight;
  if (!density.empty()) {
    real ds = 0;
    for (real d : density) ds += d;
    s += cplx(ds / static_cast<real>(density.size()), 0.0L);
  }
  return s;
}

BoundaryMeasure BoundaryMeasure::lebesgue(std::size_t M) {
  BoundaryMeasure mu;
  mu.density.assign(M, 1.0L);
  mu.validate();
  return mu;
}

cplx cauchy_transform(const BoundaryMeasure& mu, cplx z) {
  if (std::abs(z) >= 1.0L) throw domain_error("cauchy_transform: need |z| < 1");
  cplx s(0, 0);
  for (const auto& a : mu.atoms) {
    const cplx zeta = unit_at_turns(a.theta);
    s += a.weight / (cplx(1, 0) - std::conj(zeta) * z);
  }
  if (!mu.density.empty()) {
    const std::size_t M = mu.density.size();
    cplx acc(0, 0);
    for (std::size_t j = 0; j < M; ++j) {
      const cplx zeta = unit_at_turns(static_cast<real>(j) / static_cast<real>(M));
      acc += mu.density[j] / (cplx(1, 0) - std::conj(zeta) * z);
    }
    s += acc / static_cast<real>(M);
  }
  return s;
}

cplx measure_fourier_coeff(const BoundaryMeasure& mu, std::uint64_t n) {
  cplx s(0, 0);
  for (const auto& a : mu.atoms) {
    // conj(zeta)^n = e^{-2 pi i n theta}
    const real phase = -kTwoPi * mul_mod_one(n, a.theta);
    s += a.weight * std::polar<real>(1.0L, phase);
  }
  if (!mu.density.empty()) {
    const std::size_t M = mu.density.size();
    cplx acc(0, 0);
    for (std::size_t j = 0; j < M; ++j) {
      const std::uint64_t idx = (n % M) * j % M;
      acc += mu.density[j] * std::polar<real>(1.0L, -kTwoPi * static_cast<real>(idx) / static_cast<real>(M));
    }
    s += acc / static_cast<real>(M);
  }
  return s;
}

cplx herglotz(const BoundaryMeasure& mu, cplx z) {
  if (std::abs(z) >= 1.0L) throw domain_error("herglotz: need |z| < 1");
  cplx s(0, 0);
  for (const auto& a : mu.atoms) {
    const cplx zeta = unit_at_turns(a.theta);
    if (std::abs(zeta - z) < 1e-15L) throw singularity_error("herglotz: z coincides with an atom");
    s += a.weight * (zeta + z) / (zeta - z);
  }
  if (!mu.density.empty()) {
    const std::size_t M = mu.density.size();
    cplx acc(0, 0);
    for (std::size_t j = 0; j < M; ++j) {
      const cplx zeta = unit_at_turns(static_cast<real>(j) / static_cast<real>(M));
      acc += mu.density[j] * (zeta + z) / (zeta - z);
    }
    s += acc / static_cast<real>(M);
  }
  return s;
}

}  // namespace cauchykit
