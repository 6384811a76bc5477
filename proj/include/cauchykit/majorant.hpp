#ifndef CAUCHYKIT_MAJORANT_HPP
#define CAUCHYKIT_MAJORANT_HPP

#include <functional>
#include <string>
#include <vector>

#include "cauchykit/common.hpp"
#include "cauchykit/orlicz.hpp"

namespace cauchykit {

// Piecewise-linear positive gauge on (0, 1] with nodes at dyadic points
// t_k = 2^-k; below the last node the final slope is continued.
class Majorant {
 public:
  // node_values[k] = w(2^-k), k = 0..K
  Majorant(std::vector<real> node_values, real gamma_candidate);
  static Majorant from_function(const std::function<real(real)>& w, int levels,
                                real gamma_candidate);

  real operator()(real t) const;

  const std::vector<real>& nodes() const { return node_values_; }
  int levels() const { return static_cast<int>(node_values_.size()) - 1; }
  real gamma_candidate() const { return gamma_candidate_; }
  real consecutive_ratio() const { return c_ratio_; }

 private:
  std::vector<real> node_values_;
  real gamma_candidate_;
  real c_ratio_;
};

struct SquareDiniReport {
  std::vector<real> partial_sums;  // S_N = sum_{n<=N} w(2^-n)^2
  real growth_slope = 0.0L;        // least-squares slope of S_N against log N
  // first N with S_N > threshold, or 0 if never reached
  std::size_t first_passage(real threshold) const;
};

SquareDiniReport square_dini_partial(const Majorant& w, std::size_t n_max);

// Divergence proxy gate used by the cyclic-inner pipeline.
bool fails_square_dini(const SquareDiniReport& rep, real slope_threshold = 0.1L);

struct MajorantConstruction {
  Majorant w;
  std::vector<real> block_roots;      // t_n solving alpha(t)/t = 1/n^2
  std::vector<std::size_t> block_sizes;  // N_n (after cap)
  bool block_cap_hit = false;
  std::vector<real> partial_sum_w;       // running sum of the merged sequence
  std::vector<real> partial_sum_alpha;   // running sum of alpha over the merged sequence
  std::size_t sequence_length = 0;
  real max_consecutive_ratio = 0.0L;  // of the merged sequence, after interleaving
};

// Builds the majorant adapted to Psi: alpha(t) = Psi(sqrt t), block roots by
// bisection, uniform block partitions, dyadic interleaving, nodes w(2^-j) = sqrt(w_j).
MajorantConstruction construct_majorant(const YoungFunction& psi, int n_blocks);

struct RegularityReport {
  real c_ratio = 0.0L;
  std::vector<std::pair<real, bool>> ratio_nondecreasing;  // (gamma, w/t^gamma nondecreasing)
  std::vector<std::pair<real, bool>> ratio_nonincreasing;
  bool w_over_t_nonincreasing = false;
};

RegularityReport majorant_regularity_check(const Majorant& w);

}  // namespace cauchykit

#endif  // CAUCHYKIT_MAJORANT_HPP
