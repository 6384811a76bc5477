#include "cauchykit/orlicz.hpp"

#include <algorithm>
#include <cmath>

namespace cauchykit {

namespace {

constexpr real kE = 2.71828182845904523536028747135266250L;

// Dyadic check grid used by the construction-time invariants.
std::vector<real> invariant_grid(const YoungFunction& phi) {
  real hi = std::min<real>(phi.x_max(), 8.0L);
  if (!std::isfinite(hi) || hi <= 0) hi = 8.0L;
  std::vector<real> g;
  for (int k = 0; k < 72; ++k) g.push_back(hi * std::exp2(-static_cast<real>(k)));
  std::sort(g.begin(), g.end());
  return g;
}

}  // namespace

YoungFunction YoungFunction::power(real p) {
  if (!(p >= 1.0L)) throw construction_error("YoungFunction::power: need exponent p >= 1");
  YoungFunction f;
  f.family_ = YoungFamily::kPower;
  f.params_ = {p};
  f.validate();
  return f;
}

YoungFunction YoungFunction::power_log(real p, real q) {
  if (!(p >= 1.0L) || !(q > 0.0L))
    throw construction_error("YoungFunction::power_log: need p >= 1, q > 0");
  YoungFunction f;
  f.family_ = YoungFamily::kPowerLog;
  f.params_ = {p, q};
  f.validate();
  return f;
}

YoungFunction YoungFunction::tabulated(std::vector<std::pair<real, real>> samples) {
  if (samples.size() < 2) throw construction_error("YoungFunction::tabulated: need >= 2 samples");
  std::sort(samples.begin(), samples.end());
  if (samples.front().first != 0.0L || std::abs(samples.front().second) > 1e-15L)
    throw construction_error("YoungFunction::tabulated: table must start at (0, 0)");
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i].second + 1e-18L < samples[i - 1].second)
      throw construction_error("YoungFunction::tabulated: values must be nondecreasing");
  }
  YoungFunction f;
  f.family_ = YoungFamily::kTabulated;
  f.samples_ = std::move(samples);
  f.x_max_ = f.samples_.back().first;
  f.validate();
  return f;
}

void YoungFunction::validate() {
  const auto grid = invariant_grid(*this);
  // convexity: second divided differences on the dyadic grid
  for (std::size_t i = 0; i + 2 < grid.size(); ++i) {
    const real x0 = grid[i], x1 = grid[i + 1], x2 = grid[i + 2];
    const real d1 = (eval_extended(x1) - eval_extended(x0)) / (x1 - x0);
    const real d2 = (eval_extended(x2) - eval_extended(x1)) / (x2 - x1);
    const real dd = (d2 - d1) / (x2 - x0);
    if (dd < -1e-12L)
      throw construction_error("YoungFunction: convexity violated on dyadic grid");
  }
  // doubling constant near zero, recorded
  real cdbl = 1.0L;
  for (real x : grid) {
    if (x > x_max_ / 4.0L) continue;
    const real lo = eval_extended(x);
    if (lo <= 0) continue;
    cdbl = std::max(cdbl, eval_extended(2.0L * x) / lo);
  }
  doubling_constant_ = cdbl;
}

real YoungFunction::eval_extended(real x) const {
  if (x < 0) throw domain_error("YoungFunction: negative argument");
  switch (family_) {
    case YoungFamily::kPower:
      return std::pow(x, params_[0]);
    case YoungFamily::kPowerLog: {
      if (x == 0.0L) return 0.0L;
      return std::pow(x, params_[0]) * std::pow(std::log(kE + 1.0L / x), params_[1]);
    }
    case YoungFamily::kTabulated: {
      const auto& s = samples_;
      if (x >= s.back().first) {
        // final chord extension
        const auto& a = s[s.size() - 2];
        const auto& b = s.back();
        const real slope = (b.second - a.second) / (b.first - a.first);
        return b.second + slope * (x - b.first);
      }
      auto it = std::upper_bound(s.begin(), s.end(), std::make_pair(x, std::numeric_limits<real>::infinity()));
      const std::size_t hi = static_cast<std::size_t>(it - s.begin());
      const std::size_t lo = hi - 1;
      const real t = (x - s[lo].first) / (s[hi].first - s[lo].first);
      return s[lo].second + t * (s[hi].second - s[lo].second);
    }
  }
  return 0.0L;
}

real YoungFunction::operator()(real x) const {
  if (x < 0 || x > x_max_) throw domain_error("eval_young: argument outside [0, x_max]");
  return eval_extended(x);
}

real eval_young(const YoungFunction& phi, real x) { return phi(x); }

real legendre_conjugate_value(const YoungFunction& phi, real x) {
  if (x < 0) throw domain_error("legendre_conjugate_value: x must be nonnegative");
  if (x == 0.0L) return 0.0L;
  auto g = [&](real y) { return x * y - phi.eval_extended(y); };
  // widen until the concave objective has started to decrease
  real y_hi = std::max<real>(1.0L, x);
  int widen = 0;
  while (g(y_hi) >= g(0.5L * y_hi) && widen < 140) {
    y_hi *= 2.0L;
    ++widen;
  }
  if (widen >= 140)
    throw range_error("legendre_conjugate_value: supremum not attained within bracket cap");
  // golden-section maximization of the concave map y -> x y - Phi(y)
  constexpr real kInvPhi = 0.6180339887498948482045868343656381L;
  real lo = 0.0L, hi = y_hi;
  real c = hi - kInvPhi * (hi - lo);
  real d = lo + kInvPhi * (hi - lo);
  real gc = g(c), gd = g(d);
  for (int it = 0; it < 220 && (hi - lo) > 1e-12L * std::max<real>(1.0L, hi); ++it) {
    if (gc >= gd) {
      hi = d;
      d = c;
      gd = gc;
      c = hi - kInvPhi * (hi - lo);
      gc = g(c);
    } else {
      lo = c;
      c = d;
      gc = gd;
      d = lo + kInvPhi * (hi - lo);
      gd = g(d);
    }
  }
  const real y_star = 0.5L * (lo + hi);
  return std::max<real>(0.0L, std::max(g(y_star), std::max(gc, gd)));
}

YoungFunction legendre_conjugate(const YoungFunction& phi, const std::vector<real>& x_grid) {
  if (x_grid.empty()) throw precondition_error("legendre_conjugate: empty grid");
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    if (x_grid[i] <= 0 || (i > 0 && x_grid[i] <= x_grid[i - 1]))
      throw precondition_error("legendre_conjugate: grid must be sorted positive");
  }
  std::vector<std::pair<real, real>> table;
  table.reserve(x_grid.size() + 1);
  table.emplace_back(0.0L, 0.0L);
  for (real x : x_grid) table.emplace_back(x, legendre_conjugate_value(phi, x));
  return YoungFunction::tabulated(std::move(table));
}

real orlicz_norm(const CoefficientSequence& a, const YoungFunction& phi) {
  real max_abs = 0.0L, sum_abs = 0.0L;
  for (const cplx& v : a) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw precondition_error("orlicz_norm: nonfinite coefficient");
    const real m = std::abs(v);
    max_abs = std::max(max_abs, m);
    sum_abs += m;
  }
  if (max_abs == 0.0L) return 0.0L;
  auto excess = [&](real M) {
    real s = 0.0L;
    for (const cplx& v : a) {
      const real m = std::abs(v);
      if (m > 0) s += phi.eval_extended(m / M);
    }
    return s;
  };
  real hi = std::max(max_abs, sum_abs);
  int guard = 0;
  while (excess(hi) > 1.0L && guard++ < 200) hi *= 2.0L;
  real lo = hi;
  guard = 0;
  while (excess(lo) <= 1.0L && guard++ < 400) lo *= 0.5L;
  if (excess(lo) <= 1.0L) return lo;  // sum never exceeds 1: e.g. Phi vanishing near 0
  while ((hi - lo) > 1e-12L * hi) {
    const real mid = 0.5L * (lo + hi);
    if (excess(mid) > 1.0L)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

ConjugateProfileReport conjugate_profile_check(const YoungFunction& phi, int k_max) {
  if (k_max < 1) throw precondition_error("conjugate_profile_check: k_max >= 1");
  ConjugateProfileReport rep;
  // hypothesis: Phi(x)/x^2 nondecreasing as x decreases along the dyadic grid
  bool ok = true;
  real prev = phi.eval_extended(1.0L);
  for (int k = 1; k <= std::max(k_max, 20); ++k) {
    const real x = std::exp2(-static_cast<real>(k));
    const real r = phi.eval_extended(x) / (x * x);
    if (r < prev * (1.0L - 1e-12L)) {
      ok = false;
      break;
    }
    prev = r;
  }
  rep.hypothesis_met = ok;
  if (!ok) return rep;
  for (int k = 1; k <= k_max; ++k) {
    const real x = std::exp2(-static_cast<real>(k));
    const real ratio = legendre_conjugate_value(phi, x) / (x * x);
    rep.table.emplace_back(k, ratio);
  }
  rep.nonincreasing = true;
  for (std::size_t i = 1; i < rep.table.size(); ++i) {
    if (rep.table[i].second > rep.table[i - 1].second + 1e-9L) rep.nonincreasing = false;
  }
  rep.final_below_first = rep.table.back().second < rep.table.front().second;
  rep.verdict = rep.nonincreasing && rep.final_below_first;
  return rep;
}

real young_inequality_check(const YoungFunction& phi,
                            const std::vector<std::pair<real, real>>& pairs) {
  real worst = -std::numeric_limits<real>::infinity();
  for (const auto& [x, y] : pairs) {
    const real viol = x * y - phi.eval_extended(x) - legendre_conjugate_value(phi, y);
    worst = std::max(worst, viol);
  }
  return worst;
}

}  // namespace cauchykit
