#ifndef CAUCHYKIT_ARCS_HPP
#define CAUCHYKIT_ARCS_HPP

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "cauchykit/common.hpp"

namespace cauchykit {

// Sorted disjoint closed arcs on the circle, angles in turns, exact rational
// endpoints. Arithmetic (intersection, union, measure) is exact.
class ArcSet {
 public:
  struct Arc {
    mpq_class lo, hi;  // 0 <= lo < hi <= 1
  };

  ArcSet() = default;
  static ArcSet full_circle();
  // Single arc [lo, hi] on the circle; wraps modulo 1 and splits if needed.
  static ArcSet from_arc(const mpq_class& lo, const mpq_class& hi);
  static ArcSet centered(const mpq_class& center, const mpq_class& length);

  ArcSet intersect(const ArcSet& other) const;
  ArcSet unite(const ArcSet& other) const;
  mpq_class measure() const;
  bool contains(const mpq_class& x) const;  // x taken mod 1
  // measure of set ∩ [0, x]
  mpq_class cdf(const mpq_class& x) const;
  bool empty() const { return arcs_.empty(); }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  // Preimage under z -> z^m: m shrunken translates of every arc.
  static ArcSet preimage_under_power(const ArcSet& base, unsigned long m);

  std::vector<std::pair<double, double>> to_double_pairs() const;

 private:
  void normalize();
  std::vector<Arc> arcs_;
};

// base ∩ T_{q_0}^{-1}( A_0 ∩ T_{q_1}^{-1}( A_1 ∩ ... ) ), T_q(x) = q x mod 1.
// Represents intersections of preimage patterns whose arc counts are far past
// anything materializable; measure and membership stay exact.
class NestedArcSet {
 public:
  NestedArcSet() : base_(ArcSet::full_circle()) {}
  explicit NestedArcSet(ArcSet base) : base_(std::move(base)) {}

  void intersect_base(const ArcSet& s) { base_ = base_.intersect(s); }
  // Attach a new innermost level: current innermost content gets intersected
  // with T_q^{-1}(arcs). q is the ratio to the previous level's absolute order.
  void push_level(const mpz_class& q, ArcSet arcs);

  mpq_class measure() const;
  bool contains(const mpq_class& x) const;
  bool is_materializable(std::size_t arc_budget) const;
  // Flattens to an explicit ArcSet; only valid when within budget.
  ArcSet materialize(std::size_t arc_budget) const;

  const ArcSet& base() const { return base_; }
  std::size_t level_count() const { return levels_.size(); }
  const mpz_class& level_order(std::size_t i) const { return levels_[i].q; }
  const ArcSet& level_arcs(std::size_t i) const { return levels_[i].arcs; }

 private:
  struct Level {
    mpz_class q;
    ArcSet arcs;
  };
  // measure of S_i ∩ [0, x] where S_i is the content from level i inward
  mpq_class level_cdf(std::size_t i, const mpq_class& x) const;
  mpq_class level_measure(std::size_t i) const;

  ArcSet base_;
  std::vector<Level> levels_;
  mutable std::vector<std::optional<mpq_class>> level_measure_cache_;
};

mpq_class exact_rational(double x);
mpq_class frac_part(const mpq_class& x);

}  // namespace cauchykit

#endif  // CAUCHYKIT_ARCS_HPP
