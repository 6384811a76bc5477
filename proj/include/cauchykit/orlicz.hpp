#ifndef CAUCHYKIT_ORLICZ_HPP
#define CAUCHYKIT_ORLICZ_HPP

#include <limits>
#include <utility>
#include <vector>

#include "cauchykit/common.hpp"

namespace cauchykit {

// Finite coefficient sequence, index n <-> n-th Taylor coefficient.
using CoefficientSequence = std::vector<cplx>;

enum class YoungFamily { kPower, kPowerLog, kTabulated };

// Convex gauge Phi on [0, x_max] with Phi(0) = 0. Closed-form families are
// evaluated exactly; tabulated ones interpolate linearly and extend past the
// last sample along the final chord.
class YoungFunction {
 public:
  static YoungFunction power(real p);
  // Phi(t) = t^p * log(e + 1/t)^q
  static YoungFunction power_log(real p, real q = 1.0L);
  static YoungFunction tabulated(std::vector<std::pair<real, real>> samples);

  real operator()(real x) const;        // domain-checked evaluation
  real eval_extended(real x) const;     // chord extension beyond the table

  YoungFamily family() const { return family_; }
  const std::vector<real>& params() const { return params_; }
  const std::vector<std::pair<real, real>>& samples() const { return samples_; }
  real x_max() const { return x_max_; }
  real doubling_constant() const { return doubling_constant_; }

 private:
  YoungFunction() = default;
  void validate();

  YoungFamily family_ = YoungFamily::kPower;
  std::vector<real> params_;
  std::vector<std::pair<real, real>> samples_;
  real x_max_ = std::numeric_limits<real>::infinity();
  real doubling_constant_ = 1.0L;
};

real eval_young(const YoungFunction& phi, real x);

// Pointwise Legendre-Fenchel value Phi*(x) = sup_{y>=0} (x y - Phi(y)).
real legendre_conjugate_value(const YoungFunction& phi, real x);

// Tabulated conjugate on the given grid; (0, 0) is prepended so the result is
// again a Young function.
YoungFunction legendre_conjugate(const YoungFunction& phi, const std::vector<real>& x_grid);

// Luxemburg-type norm inf{ M > 0 : sum Phi(|a_n|/M) <= 1 }, by bisection.
real orlicz_norm(const CoefficientSequence& a, const YoungFunction& phi);

struct ConjugateProfileReport {
  bool hypothesis_met = false;  // Phi(x)/x^2 nondecreasing as x decreases, dyadically
  std::vector<std::pair<int, real>> table;  // (k, Phi*(2^-k) / 4^-k)
  bool nonincreasing = false;
  bool final_below_first = false;
  bool verdict = false;
};

ConjugateProfileReport conjugate_profile_check(const YoungFunction& phi, int k_max);

// Max over pairs of x*y - Phi(x) - Phi*(y); nonpositive up to rounding.
real young_inequality_check(const YoungFunction& phi,
                            const std::vector<std::pair<real, real>>& pairs);

}  // namespace cauchykit

#endif  // CAUCHYKIT_ORLICZ_HPP
