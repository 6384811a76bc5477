#include "cauchykit/majorant.hpp"

#include <algorithm>
#include <cmath>

namespace cauchykit {

namespace {
constexpr std::size_t kBlockCap = 1000000;     // points per block
constexpr std::size_t kNodeStoreCap = 262144;  // stored dyadic nodes
}  // namespace

Majorant::Majorant(std::vector<real> node_values, real gamma_candidate)
    : node_values_(std::move(node_values)), gamma_candidate_(gamma_candidate) {
  if (node_values_.size() < 2) throw construction_error("Majorant: need at least two nodes");
  if (!(gamma_candidate_ > 0.0L && gamma_candidate_ < 1.0L))
    throw construction_error("Majorant: gamma candidate must lie in (0,1)");
  real cr = 0.0L;
  for (std::size_t k = 0; k < node_values_.size(); ++k) {
    if (!(node_values_[k] > 0.0L)) throw construction_error("Majorant: nodes must be positive");
    if (k > 0) {
      if (node_values_[k] > node_values_[k - 1] * (1.0L + 1e-15L))
        throw construction_error("Majorant: w must be nondecreasing in t on nodes");
      cr = std::max(cr, node_values_[k - 1] / node_values_[k]);
    }
  }
  c_ratio_ = cr;
}

Majorant Majorant::from_function(const std::function<real(real)>& w, int levels,
                                 real gamma_candidate) {
  if (levels < 1) throw construction_error("Majorant::from_function: levels >= 1");
  std::vector<real> nodes(static_cast<std::size_t>(levels) + 1);
  for (int k = 0; k <= levels; ++k) nodes[static_cast<std::size_t>(k)] = w(std::exp2(-static_cast<real>(k)));
  return Majorant(std::move(nodes), gamma_candidate);
}

real Majorant::operator()(real t) const {
  if (!(t > 0.0L)) throw domain_error("Majorant: argument must be positive");
  if (t >= 1.0L) return node_values_.front();
  const std::size_t K = node_values_.size() - 1;
  const real tK = std::exp2(-static_cast<real>(K));
  if (t <= tK) {
    // constant-slope extension below the last node
    const real tK1 = std::exp2(-static_cast<real>(K - 1));
    const real slope = (node_values_[K - 1] - node_values_[K]) / (tK1 - tK);
    return node_values_[K] + slope * (t - tK);
  }
  const int k = static_cast<int>(std::floor(-std::log2(t)));
  // t in (2^-(k+1), 2^-k]
  const real t_hi = std::exp2(-static_cast<real>(k));
  const real t_lo = 0.5L * t_hi;
  const std::size_t kk = static_cast<std::size_t>(k);
  if (t >= t_hi) return node_values_[kk];
  const real frac = (t - t_lo) / (t_hi - t_lo);
  return node_values_[kk + 1] + frac * (node_values_[kk] - node_values_[kk + 1]);
}

SquareDiniReport square_dini_partial(const Majorant& w, std::size_t n_max) {
  if (n_max > static_cast<std::size_t>(w.levels()))
    throw precondition_error("square_dini_partial: n_max exceeds node count");
  SquareDiniReport rep;
  rep.partial_sums.resize(n_max);
  real s = 0.0L;
  for (std::size_t n = 1; n <= n_max; ++n) {
    s += sqr(w.nodes()[n]);
    rep.partial_sums[n - 1] = s;
  }
  // least-squares slope of S_N against log N
  real sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t cnt = 0;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const real x = std::log(static_cast<real>(n));
    const real y = rep.partial_sums[n - 1];
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++cnt;
  }
  if (cnt >= 2) {
    const real denom = cnt * sxx - sx * sx;
    if (denom > 0) rep.growth_slope = (cnt * sxy - sx * sy) / denom;
  }
  return rep;
}

std::size_t SquareDiniReport::first_passage(real threshold) const {
  for (std::size_t i = 0; i < partial_sums.size(); ++i) {
    if (partial_sums[i] > threshold) return i + 1;
  }
  return 0;
}

bool fails_square_dini(const SquareDiniReport& rep, real slope_threshold) {
  return rep.growth_slope >= slope_threshold;
}

MajorantConstruction construct_majorant(const YoungFunction& psi, int n_blocks) {
  if (n_blocks < 1) throw precondition_error("construct_majorant: n_blocks >= 1");
  // hypothesis: Psi(x)/x^2 strictly decreasing to 0 as x decreases, dyadically
  {
    real first = 0, prev = 0;
    for (int k = 0; k <= 40; ++k) {
      const real x = std::exp2(-static_cast<real>(k));
      const real r = psi.eval_extended(x) / (x * x);
      if (k == 0)
        first = r;
      else if (r >= prev * (1.0L - 1e-12L))
        throw precondition_error("construct_majorant: Psi(x)/x^2 must strictly decrease to 0");
      prev = r;
    }
    if (!(prev <= 0.01L * first))
      throw precondition_error("construct_majorant: Psi(x)/x^2 does not tend to 0");
  }
  auto alpha = [&](real t) { return psi.eval_extended(std::sqrt(t)); };

  MajorantConstruction out{Majorant({1.0L, 0.5L}, 0.5L), {}, {}, false, {}, {}, 0, 0.0L};
  out.block_roots.reserve(static_cast<std::size_t>(n_blocks) + 1);
  // t_n solves alpha(t)/t = 1/n^2; alpha(t)/t inherits the strict decrease
  auto solve_root = [&](real target) {
    real lo = std::exp2(-60.0L), hi = 1.0L;
    auto val = [&](real t) { return alpha(t) / t; };
    if (val(hi) < target)
      throw construction_error("construct_majorant: root bracketing failed (target above alpha(1))");
    if (val(lo) > target)
      throw construction_error("construct_majorant: root bracketing failed (target below range)");
    for (int it = 0; it < 200 && (hi - lo) > 1e-13L * hi; ++it) {
      const real mid = 0.5L * (lo + hi);
      if (val(mid) > target)
        hi = mid;
      else
        lo = mid;
    }
    return 0.5L * (lo + hi);
  };
  std::vector<real> roots(static_cast<std::size_t>(n_blocks) + 2);
  for (int n = 1; n <= n_blocks + 1; ++n) {
    const real tgt = 1.0L / (static_cast<real>(n) * static_cast<real>(n));
    roots[static_cast<std::size_t>(n)] = solve_root(tgt);
    if (n <= n_blocks) out.block_roots.push_back(roots[static_cast<std::size_t>(n)]);
  }

  constexpr std::size_t kTotalCap = 8000000;
  std::vector<real> seq;
  for (int n = 1; n <= n_blocks; ++n) {
    const real tn = roots[static_cast<std::size_t>(n)];
    const real tn1 = roots[static_cast<std::size_t>(n) + 1];
    std::size_t Nn = static_cast<std::size_t>(std::ceil(1.0L / tn));
    if (Nn > kBlockCap) {
      Nn = kBlockCap;
      out.block_cap_hit = true;
    }
    if (seq.size() + Nn > kTotalCap)
      throw resource_error("construct_majorant: sequence exceeds desk-scale cap");
    out.block_sizes.push_back(Nn);
    const real step = (tn - tn1) / static_cast<real>(Nn);
    for (std::size_t k = 1; k <= Nn; ++k) seq.push_back(tn1 + step * static_cast<real>(k));
  }
  std::sort(seq.begin(), seq.end(), std::greater<real>());

  // interleave one value into every dyadic gap (2^-(j+1), 2^-j] covered by the sequence
  const int j_max = static_cast<int>(std::ceil(-std::log2(seq.back())));
  for (int j = 0; j < j_max; ++j) {
    const real lo = std::exp2(-static_cast<real>(j + 1));
    const real hi = std::exp2(-static_cast<real>(j));
    // geometric mean of the values sandwiching the gap, clipped into the gap
    real above = 1.0L, below = lo;
    for (real v : seq) {
      if (v > hi)
        above = v;
      else if (v <= lo) {
        below = v;
        break;
      }
    }
    real g = std::sqrt(above * below);
    g = std::min(hi, std::max(g, std::nextafter(lo, hi)));
    seq.push_back(g);
  }
  std::sort(seq.begin(), seq.end(), std::greater<real>());
  // repair sweep: any remaining consecutive ratio above 2 gets a geometric mean
  for (int sweep = 0; sweep < 64; ++sweep) {
    bool inserted = false;
    std::vector<real> extra;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      if (seq[i] > 2.0L * seq[i + 1]) {
        extra.push_back(std::sqrt(seq[i] * seq[i + 1]));
        inserted = true;
      }
    }
    if (!inserted) break;
    seq.insert(seq.end(), extra.begin(), extra.end());
    std::sort(seq.begin(), seq.end(), std::greater<real>());
  }

  out.sequence_length = seq.size();
  real rmax = 0.0L;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) rmax = std::max(rmax, seq[i] / seq[i + 1]);
  out.max_consecutive_ratio = rmax;

  out.partial_sum_w.resize(seq.size());
  out.partial_sum_alpha.resize(seq.size());
  real sw = 0, sa = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    sw += seq[i];
    sa += alpha(seq[i]);
    out.partial_sum_w[i] = sw;
    out.partial_sum_alpha[i] = sa;
  }

  const std::size_t n_nodes = std::min(seq.size(), kNodeStoreCap);
  std::vector<real> nodes(n_nodes);
  for (std::size_t j = 0; j < n_nodes; ++j) nodes[j] = std::sqrt(seq[j]);
  out.w = Majorant(std::move(nodes), 0.5L);
  return out;
}

RegularityReport majorant_regularity_check(const Majorant& w) {
  RegularityReport rep;
  rep.c_ratio = w.consecutive_ratio();
  const auto& nv = w.nodes();
  for (int g = 1; g <= 9; ++g) {
    const real gamma = 0.1L * static_cast<real>(g);
    bool nondec = true, noninc = true;
    // w(t)/t^gamma at t = 2^-k equals nv[k] * 2^(k*gamma); nondecreasing in t
    // means nonincreasing in k.
    real prev = nv[0];
    for (std::size_t k = 1; k < nv.size(); ++k) {
      const real cur = nv[k] * std::exp2(gamma * static_cast<real>(k));
      if (cur > prev * (1.0L + 1e-12L)) nondec = false;
      if (cur < prev * (1.0L - 1e-12L)) noninc = false;
      prev = cur;
    }
    rep.ratio_nondecreasing.emplace_back(gamma, nondec);
    rep.ratio_nonincreasing.emplace_back(gamma, noninc);
  }
  bool wt_noninc = true;
  real prev = nv[0];
  for (std::size_t k = 1; k < nv.size(); ++k) {
    const real cur = nv[k] * std::exp2(static_cast<real>(k));
    if (cur < prev * (1.0L - 1e-12L)) wt_noninc = false;
    prev = cur;
  }
  rep.w_over_t_nonincreasing = wt_noninc;
  return rep;
}

}  // namespace cauchykit
