#ifndef CAUCHYKIT_GRID_HPP
#define CAUCHYKIT_GRID_HPP

#include <functional>
#include <vector>

#include "cauchykit/common.hpp"
#include "cauchykit/series.hpp"

namespace cauchykit {

// Uniform power-of-two boundary grid: samples[j] = f(e^{2 pi i j / M}).
struct BoundaryGrid {
  std::vector<cplx> samples;

  BoundaryGrid() = default;
  explicit BoundaryGrid(std::vector<cplx> s) : samples(std::move(s)) {
    if (!is_power_of_two(samples.size()))
      throw construction_error("BoundaryGrid: size must be a power of two");
  }
  std::size_t M() const { return samples.size(); }
  real angle_turns(std::size_t j) const { return static_cast<real>(j) / static_cast<real>(M()); }
};

BoundaryGrid sample_boundary(const std::function<cplx(cplx)>& f, std::size_t M);
BoundaryGrid sample_boundary_real(const std::function<real(real)>& f_of_turns, std::size_t M);

// Forward Fourier analysis of boundary samples into Taylor coefficients 0..degree.
TaylorSeries coeffs_from_boundary(const BoundaryGrid& g, int degree);

// Harmonic conjugate on the grid via the -i sgn(n) multiplier; mean maps to 0.
BoundaryGrid conjugate_function(const BoundaryGrid& g);

// Grid values of a Taylor series at all M nodes (exact synthesis).
std::vector<cplx> series_grid_values(const TaylorSeries& f, std::size_t M);

}  // namespace cauchykit

#endif  // CAUCHYKIT_GRID_HPP
