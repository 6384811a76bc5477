#ifndef CAUCHYKIT_BLOCH_HPP
#define CAUCHYKIT_BLOCH_HPP

#include <utility>
#include <vector>

#include "cauchykit/majorant.hpp"
#include "cauchykit/orlicz.hpp"
#include "cauchykit/series.hpp"

namespace cauchykit {

// Tensor evaluation grid for disk suprema; angles must be a power of two so
// circles are evaluated by synthesis.
struct BlochGrid {
  std::vector<real> radii;
  std::size_t angles = 256;
};

// radii 1 - 2^-j for j <= 12, 256 angles
BlochGrid default_bloch_grid();

struct BlochNorm {
  real value = 0.0L;      // |f(0)| + seminorm
  real seminorm = 0.0L;   // sup (1-|z|)/w(1-|z|) |f'(z)| over the grid
  real arg_radius = 0.0L;
  std::size_t arg_angle = 0;  // first maximizer in row-major grid order
};

BlochNorm bloch_norm(const TaylorSeries& f, const Majorant& w, const BlochGrid& grid);

struct FourierBoundReport {
  real norm = 0.0L;  // reference norm on the enriched grid
  bool trivially_satisfied = false;
  std::vector<real> ratio_by_n;    // ratio_N, N = 1..degree
  std::vector<real> coeff_ratio;   // |f^(n)| / (w(1/n) * norm), n = 1..degree
  real max_ratio_from2 = 0.0L;
  real max_coeff_ratio = 0.0L;
  std::vector<real> radii_used;
  std::size_t angles_used = 0;
};

// Quadratic-mean coefficient bound diagnostics; the reference norm enriches the
// radial grid with the radii 1 - 1/N that drive the bound's derivation.
FourierBoundReport fourier_bound_report(const TaylorSeries& f, const Majorant& w);

struct EmbeddingReport {
  bool zero_input = false;   // 0/0 sentinel
  real orlicz = 0.0L;
  real bloch = 0.0L;
  real ratio = 0.0L;
  std::vector<real> dyadic_blocks;  // sum over 2^{n-1} <= j < 2^n of Psi(|f^(j)|)
};

EmbeddingReport embedding_report(const TaylorSeries& f, const Majorant& w,
                                 const YoungFunction& psi);

// Monotone function given by a table with linear interpolation.
class MonotoneTable {
 public:
  explicit MonotoneTable(std::vector<std::pair<real, real>> pts);
  static MonotoneTable from_function(const std::function<real(real)>& f, real t_min,
                                     real t_max, std::size_t n);
  real operator()(real t) const;

 private:
  std::vector<std::pair<real, real>> pts_;
};

struct CyclicityReport {
  real c1 = 0.0L;  // inf |f(z)| / u(1-|z|)
  real c2 = 0.0L;  // sup (1-|z|) |f'(z)| / v(1-|z|)
  std::vector<std::pair<real, real>> hypothesis_profile;  // (t, v/(u w))
  std::vector<std::pair<real, real>> sweep;               // (r, ||f/f_r - 1||_w)
};

CyclicityReport cyclicity_diagnostic(const TaylorSeries& f, const MonotoneTable& u,
                                     const MonotoneTable& v, const Majorant& w,
                                     const std::vector<real>& r_list);

}  // namespace cauchykit

#endif  // CAUCHYKIT_BLOCH_HPP
