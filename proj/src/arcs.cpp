#include "cauchykit/arcs.hpp"

#include <algorithm>

namespace cauchykit {

mpq_class exact_rational(double x) {
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

mpq_class frac_part(const mpq_class& x) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  mpq_class r = x - mpq_class(fl);
  r.canonicalize();
  return r;
}

ArcSet ArcSet::full_circle() {
  ArcSet s;
  s.arcs_.push_back({mpq_class(0), mpq_class(1)});
  return s;
}

ArcSet ArcSet::from_arc(const mpq_class& lo, const mpq_class& hi) {
  if (hi <= lo) throw construction_error("ArcSet: arc needs lo < hi");
  if (hi - lo >= 1) return full_circle();
  ArcSet s;
  mpq_class l = frac_part(lo);
  mpq_class h = l + (hi - lo);
  if (h <= 1) {
    s.arcs_.push_back({l, h});
  } else {
    s.arcs_.push_back({mpq_class(0), frac_part(h)});
    s.arcs_.push_back({l, mpq_class(1)});
  }
  s.normalize();
  return s;
}

ArcSet ArcSet::centered(const mpq_class& center, const mpq_class& length) {
  if (length <= 0) throw construction_error("ArcSet: length must be positive");
  const mpq_class half = length / 2;
  return from_arc(center - half, center + half);
}

void ArcSet::normalize() {
  std::sort(arcs_.begin(), arcs_.end(),
            [](const Arc& a, const Arc& b) { return a.lo < b.lo; });
  std::vector<Arc> merged;
  for (auto& a : arcs_) {
    if (a.lo < 0 || a.hi > 1 || a.lo >= a.hi)
      throw construction_error("ArcSet: arc outside [0,1] after normalization");
    if (!merged.empty() && a.lo <= merged.back().hi) {
      if (a.hi > merged.back().hi) merged.back().hi = a.hi;
    } else {
      merged.push_back(a);
    }
  }
  arcs_ = std::move(merged);
}

ArcSet ArcSet::intersect(const ArcSet& other) const {
  ArcSet out;
  std::size_t i = 0, j = 0;
  while (i < arcs_.size() && j < other.arcs_.size()) {
    const Arc& a = arcs_[i];
    const Arc& b = other.arcs_[j];
    const mpq_class lo = std::max(a.lo, b.lo);
    const mpq_class hi = std::min(a.hi, b.hi);
    if (lo < hi) out.arcs_.push_back({lo, hi});
    if (a.hi < b.hi)
      ++i;
    else
      ++j;
  }
  return out;
}

ArcSet ArcSet::unite(const ArcSet& other) const {
  ArcSet out;
  out.arcs_ = arcs_;
  out.arcs_.insert(out.arcs_.end(), other.arcs_.begin(), other.arcs_.end());
  out.normalize();
  return out;
}

mpq_class ArcSet::measure() const {
  mpq_class m(0);
  for (const auto& a : arcs_) m += a.hi - a.lo;
  return m;
}

bool ArcSet::contains(const mpq_class& x) const {
  const mpq_class y = frac_part(x);
  for (const auto& a : arcs_) {
    if (y >= a.lo && y <= a.hi) return true;
  }
  // the wrap point: an arc that ends exactly at 1 also contains 0
  if (y == 0 && !arcs_.empty() && arcs_.back().hi == 1) return true;
  return false;
}

mpq_class ArcSet::cdf(const mpq_class& x) const {
  mpq_class m(0);
  for (const auto& a : arcs_) {
    if (a.lo >= x) break;
    m += std::min(a.hi, x) - a.lo;
  }
  return m;
}

ArcSet ArcSet::preimage_under_power(const ArcSet& base, unsigned long m) {
  if (m == 0) throw precondition_error("preimage_under_power: m >= 1");
  ArcSet out;
  const mpq_class inv(1, m);
  for (const auto& a : base.arcs_) {
    for (unsigned long i = 0; i < m; ++i) {
      out.arcs_.push_back({(a.lo + i) / static_cast<long>(m), (a.hi + i) / static_cast<long>(m)});
    }
  }
  out.normalize();
  return out;
}

std::vector<std::pair<double, double>> ArcSet::to_double_pairs() const {
  std::vector<std::pair<double, double>> v;
  v.reserve(arcs_.size());
  for (const auto& a : arcs_) v.emplace_back(a.lo.get_d(), a.hi.get_d());
  return v;
}

void NestedArcSet::push_level(const mpz_class& q, ArcSet arcs) {
  if (q < 1) throw precondition_error("NestedArcSet: level order must be >= 1");
  levels_.push_back({q, std::move(arcs)});
  level_measure_cache_.assign(levels_.size(), std::nullopt);
}

mpq_class NestedArcSet::level_measure(std::size_t i) const {
  if (level_measure_cache_.size() != levels_.size())
    level_measure_cache_.assign(levels_.size(), std::nullopt);
  if (level_measure_cache_[i]) return *level_measure_cache_[i];
  const mpq_class m = level_cdf(i, mpq_class(1));
  level_measure_cache_[i] = m;
  return m;
}

// measure of (arcs_i ∩ T_{q_{i+1}}^{-1}(S_{i+1})) ∩ [0, x]
mpq_class NestedArcSet::level_cdf(std::size_t i, const mpq_class& x) const {
  const ArcSet& A = levels_[i].arcs;
  if (i + 1 == levels_.size()) return A.cdf(x);
  const mpz_class& q = levels_[i + 1].q;
  const mpq_class inner_measure = level_measure(i + 1);
  auto W = [&](const mpq_class& y) {
    // measure of T_q^{-1}(S_{i+1}) ∩ [0, y]
    const mpq_class qy = y * mpq_class(q);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), qy.get_num_mpz_t(), qy.get_den_mpz_t());
    mpq_class frac = qy - mpq_class(fl);
    frac.canonicalize();
    mpq_class total = mpq_class(fl) * inner_measure + level_cdf(i + 1, frac);
    total /= mpq_class(q);
    total.canonicalize();
    return total;
  };
  mpq_class m(0);
  for (const auto& a : A.arcs()) {
    if (a.lo >= x) break;
    m += W(std::min(a.hi, x)) - W(a.lo);
  }
  return m;
}

mpq_class NestedArcSet::measure() const {
  if (levels_.empty()) return base_.measure();
  const mpz_class& q = levels_[0].q;
  const mpq_class inner = level_measure(0);
  auto W = [&](const mpq_class& y) {
    const mpq_class qy = y * mpq_class(q);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), qy.get_num_mpz_t(), qy.get_den_mpz_t());
    mpq_class frac = qy - mpq_class(fl);
    frac.canonicalize();
    mpq_class total = mpq_class(fl) * inner + level_cdf(0, frac);
    total /= mpq_class(q);
    return total;
  };
  mpq_class m(0);
  for (const auto& a : base_.arcs()) m += W(a.hi) - W(a.lo);
  return m;
}

bool NestedArcSet::contains(const mpq_class& x) const {
  if (!base_.contains(x)) return false;
  mpq_class cur = frac_part(x);
  for (const auto& lvl : levels_) {
    cur = frac_part(cur * mpq_class(lvl.q));
    if (!lvl.arcs.contains(cur)) return false;
  }
  return true;
}

bool NestedArcSet::is_materializable(std::size_t arc_budget) const {
  mpz_class total(base_.arc_count());
  mpz_class order(1);
  for (const auto& lvl : levels_) {
    order *= lvl.q;
    total += order * static_cast<long>(lvl.arcs.arc_count());
    if (total > static_cast<long>(arc_budget)) return false;
  }
  return true;
}

ArcSet NestedArcSet::materialize(std::size_t arc_budget) const {
  if (!is_materializable(arc_budget))
    throw resource_error("NestedArcSet: too many arcs to materialize");
  ArcSet acc = base_;
  mpz_class order(1);
  for (const auto& lvl : levels_) {
    order *= lvl.q;
    acc = acc.intersect(ArcSet::preimage_under_power(lvl.arcs, order.get_ui()));
  }
  return acc;
}

}  // namespace cauchykit
