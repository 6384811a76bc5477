#include "cauchykit/grid.hpp"

#include <cmath>

#include "cauchykit/fft.hpp"

namespace cauchykit {

BoundaryGrid sample_boundary(const std::function<cplx(cplx)>& f, std::size_t M) {
  if (!is_power_of_two(M)) throw precondition_error("sample_boundary: M must be a power of two");
  std::vector<cplx> s(M);
  for (std::size_t j = 0; j < M; ++j)
    s[j] = f(unit_at_turns(static_cast<real>(j) / static_cast<real>(M)));
  return BoundaryGrid(std::move(s));
}

BoundaryGrid sample_boundary_real(const std::function<real(real)>& f_of_turns, std::size_t M) {
  if (!is_power_of_two(M)) throw precondition_error("sample_boundary_real: M must be a power of two");
  std::vector<cplx> s(M);
  for (std::size_t j = 0; j < M; ++j)
    s[j] = cplx(f_of_turns(static_cast<real>(j) / static_cast<real>(M)), 0.0L);
  return BoundaryGrid(std::move(s));
}

TaylorSeries coeffs_from_boundary(const BoundaryGrid& g, int degree) {
  if (degree < 0) throw precondition_error("coeffs_from_boundary: negative degree");
  if (static_cast<std::size_t>(degree) >= g.M())
    throw precondition_error("coeffs_from_boundary: degree must be below grid size");
  auto c = analysis_coefficients(g.samples);
  c.resize(static_cast<std::size_t>(degree) + 1);
  return TaylorSeries(std::move(c));
}

BoundaryGrid conjugate_function(const BoundaryGrid& g) {
  const std::size_t M = g.M();
  for (const cplx& v : g.samples) {
    if (std::abs(v.imag()) > 1e-12L * (1.0L + std::abs(v.real())))
      throw precondition_error("conjugate_function: samples must be real");
  }
  std::vector<cplx> c = analysis_coefficients(g.samples);
  // multiplier -i sgn(n); indices above M/2 carry the negative frequencies
  c[0] = cplx(0, 0);
  for (std::size_t k = 1; k < M; ++k) {
    if (k < M / 2)
      c[k] *= cplx(0, -1);
    else if (k == M / 2)
      c[k] = cplx(0, 0);  // Nyquist bin has no signed frequency
    else
      c[k] *= cplx(0, 1);
  }
  std::vector<cplx> out = c;
  ifft(out);
  for (auto& v : out) v = cplx(v.real() * static_cast<real>(M), 0.0L);
  return BoundaryGrid(std::move(out));
}

std::vector<cplx> series_grid_values(const TaylorSeries& f, std::size_t M) {
  if (f.coeffs.size() > M)
    throw precondition_error("series_grid_values: grid too small for the degree");
  return synthesis_samples(f.coeffs, M);
}

}  // namespace cauchykit
