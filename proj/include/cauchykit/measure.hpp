#ifndef CAUCHYKIT_MEASURE_HPP
#define CAUCHYKIT_MEASURE_HPP

#include <cstdint>
#include <vector>

#include "cauchykit/common.hpp"
#include "cauchykit/grid.hpp"

namespace cauchykit {

// Finite Borel measure on the circle: atoms (angle in turns, complex weight)
// plus an optional nonnegative density sampled on the uniform M-point grid.
struct BoundaryMeasure {
  struct Atom {
    real theta;  // turns in [0, 1)
    cplx weight;
  };
  std::vector<Atom> atoms;
  std::vector<real> density;  // empty when absent; size must be a power of two

  void validate() const;
  bool is_positive() const;  // real nonnegative atom weights, nonnegative density
  cplx total_mass() const;

  static BoundaryMeasure point_mass(real theta, cplx weight) {
    BoundaryMeasure mu;
    mu.atoms.push_back({theta, weight});
    return mu;
  }
  static BoundaryMeasure lebesgue(std::size_t M);
};

// K(dmu)(z) = int dmu / (1 - conj(zeta) z), |z| < 1.
cplx cauchy_transform(const BoundaryMeasure& mu, cplx z);

// hat mu(n) = int conj(zeta)^n dmu, the Taylor coefficients of the Cauchy transform.
cplx measure_fourier_coeff(const BoundaryMeasure& mu, std::uint64_t n);

// H(z) = int (zeta + z)/(zeta - z) dmu, positive real part for positive mu.
cplx herglotz(const BoundaryMeasure& mu, cplx z);

}  // namespace cauchykit

#endif  // CAUCHYKIT_MEASURE_HPP
