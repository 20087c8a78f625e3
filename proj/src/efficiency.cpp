#include "paretocert/efficiency.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace paretocert {

namespace {

bool same_point(const Vec& a, const Vec& b, double tau) {
  for (std::size_t r = 0; r < a.size(); ++r)
    if (std::abs(a[r] - b[r]) > tau) return false;
  return true;
}

Vec ones(std::size_t ell) { return Vec(ell, 1.0); }

}  // namespace

PointCloud PointCloud::from_points(Matrix points, Tolerance tol,
                                   std::vector<std::string> labels) {
  if (points.empty()) throw std::invalid_argument("PointCloud: empty point set");
  const std::size_t ell = points.front().size();
  require_outcome_dim(ell, "PointCloud");
  if (!labels.empty() && labels.size() != points.size())
    throw std::invalid_argument("PointCloud: label count must match point count");

  PointCloud cloud;
  cloud.ell_ = ell;
  for (std::size_t i = 0; i < points.size(); ++i) {
    require_point(points[i], ell, "PointCloud");
    bool duplicate = false;
    for (const Vec& kept : cloud.points_)
      if (same_point(points[i], kept, tol.tau)) {
        duplicate = true;
        break;
      }
    if (duplicate) {
      ++cloud.merged_;
      continue;
    }
    cloud.points_.push_back(std::move(points[i]));
    if (!labels.empty()) cloud.labels_.push_back(std::move(labels[i]));
  }
  return cloud;
}

std::optional<std::size_t> PointCloud::find(const Vec& y, Tolerance tol) const {
  require_point(y, ell_, "PointCloud::find");
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (same_point(points_[i], y, tol.tau)) return i;
  return std::nullopt;
}

DominationOracle DominationOracle::orthant_closed(std::size_t ell) {
  require_outcome_dim(ell, "DominationOracle");
  return DominationOracle(Kind::OrthantClosed, ell);
}

DominationOracle DominationOracle::orthant_open(std::size_t ell) {
  require_outcome_dim(ell, "DominationOracle");
  return DominationOracle(Kind::OrthantOpen, ell);
}

DominationOracle DominationOracle::cone_closed(HalfspaceCone cone) {
  DominationOracle oracle(Kind::ConeClosed, cone.dim());
  oracle.cone_ = std::move(cone);
  return oracle;
}

DominationOracle DominationOracle::cone_open(HalfspaceCone cone) {
  DominationOracle oracle(Kind::ConeOpen, cone.dim());
  oracle.cone_ = std::move(cone);
  return oracle;
}

DominationOracle DominationOracle::union_open(double bound, std::size_t ell) {
  DominationOracle oracle(Kind::UnionOpen, ell);
  oracle.union_ = TradeoffUnionCone(bound, ell);
  return oracle;
}

DominationOracle DominationOracle::union_closure(double bound, std::size_t ell) {
  DominationOracle oracle(Kind::UnionClosure, ell);
  oracle.union_ = TradeoffUnionCone(bound, ell);
  return oracle;
}

bool DominationOracle::contains(const Vec& diff, Tolerance tol) const {
  require_point(diff, ell_, "DominationOracle::contains");
  switch (kind_) {
    case Kind::OrthantClosed:
      for (double x : diff)
        if (x < -tol.tau) return false;
      return true;
    case Kind::OrthantOpen:
      for (double x : diff)
        if (!(x > tol.tau)) return false;
      return true;
    case Kind::ConeClosed:
      return contains_closed(*cone_, diff, tol);
    case Kind::ConeOpen:
      return contains_interior(*cone_, diff, tol);
    case Kind::UnionOpen:
      return union_contains(*union_, diff, UnionMode::Open, tol);
    case Kind::UnionClosure:
      return union_contains(*union_, diff, UnionMode::Closure, tol);
  }
  return false;
}

std::vector<std::size_t> min_set(const PointCloud& cloud, const DominationOracle& oracle,
                                 Tolerance tol) {
  if (oracle.dim() != cloud.dim()) throw std::invalid_argument("min_set: dimension mismatch");
  std::vector<std::size_t> out;
  const std::size_t n = cloud.size();
  Vec diff(cloud.dim());
  for (std::size_t i = 0; i < n; ++i) {
    bool efficient = true;
    for (std::size_t j = 0; efficient && j < n; ++j) {
      if (j == i) continue;
      for (std::size_t r = 0; r < diff.size(); ++r) diff[r] = cloud.point(i)[r] - cloud.point(j)[r];
      if (oracle.contains(diff, tol)) efficient = false;
    }
    if (efficient) out.push_back(i);
  }
  return out;
}

Tradeoff geoffrion_minimal_tradeoff(const PointCloud& cloud, std::size_t index, Tolerance tol) {
  if (index >= cloud.size())
    throw std::invalid_argument("geoffrion_minimal_tradeoff: index out of range");
  const Vec& base = cloud.point(index);
  const std::size_t ell = cloud.dim();
  double worst = 0.0;  // empty max: no competitor constrains the point
  for (std::size_t c = 0; c < cloud.size(); ++c) {
    if (c == index) continue;
    const Vec& other = cloud.point(c);
    for (std::size_t i = 0; i < ell; ++i) {
      if (!(other[i] < base[i] - tol.tau)) continue;
      // Smallest constant making some coordinate j compensate the loss at i.
      double pair_best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < ell; ++j) {
        if (j == i || !(other[j] > base[j] + tol.tau)) continue;
        pair_best = std::min(pair_best, (base[i] - other[i]) / (other[j] - base[j]));
      }
      if (!std::isfinite(pair_best)) return Tradeoff::infinite();
      worst = std::max(worst, pair_best);
    }
  }
  return Tradeoff{true, worst};
}

std::vector<GminEntry> geoffrion_min_set(const PointCloud& cloud, Tolerance tol) {
  std::vector<GminEntry> out;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const Tradeoff t = geoffrion_minimal_tradeoff(cloud, i, tol);
    if (t.finite) out.push_back(GminEntry{i, t.value});
  }
  return out;
}

std::vector<std::size_t> geoffrion_min_via_union(const PointCloud& cloud, double bound,
                                                 Tolerance tol) {
  return min_set(cloud, DominationOracle::union_open(bound, cloud.dim()), tol);
}

std::vector<std::size_t> geoffrion_min_via_cone(const PointCloud& cloud,
                                                const HalfspaceCone& cone, Tolerance tol) {
  return min_set(cloud, DominationOracle::cone_closed(cone), tol);
}

Certificate henig_certificate(const PointCloud& cloud, std::size_t index, Tolerance tol) {
  const Tradeoff t = geoffrion_minimal_tradeoff(cloud, index, tol);
  if (!t.finite)
    throw std::invalid_argument(
        "henig_certificate: not properly efficient; minimal trade-off constant is infinite");
  const double ell = static_cast<double>(cloud.dim());
  const double weight = ell * (t.value > 0.0 ? t.value * (1.0 + kStrictMargin) : 1.0);
  const HalfspaceCone cone = make_sum_weighted_cone(weight, cloud.dim());
  const std::vector<std::size_t> members = geoffrion_min_via_cone(cloud, cone, tol);
  if (std::find(members.begin(), members.end(), index) == members.end())
    throw VerificationError("henig_certificate: point left the certified cone-efficient set");

  Certificate cert;
  cert.index = index;
  if (!cloud.labels().empty()) cert.label = cloud.labels()[index];
  cert.tradeoff_finite = true;
  cert.tradeoff = t.value;
  cert.cone_param = ConeParam{ConeParam::Family::SumWeighted, weight, {}};
  cert.verified_min = 0.0;
  return cert;
}

namespace {

// Feasibility of {lambda >= 0, sum lambda = 1, combo(lambda) <= tau, some
// coordinate <= -tau} for the generators of one shifted competitor, decided by
// active-set vertex enumeration. Exact at the documented scale; no external
// solver.
class CompetitorConeLP {
 public:
  CompetitorConeLP(const Vec& shifted, double tau) : ell_(shifted.size()), tau_(tau) {
    // Generator columns: the shifted competitor, then the unit axes.
    gens_.assign(ell_ + 1, Vec(ell_, 0.0));
    gens_[0] = shifted;
    for (std::size_t k = 0; k < ell_; ++k) gens_[k + 1][k] = 1.0;
  }

  /// True iff some feasible combination reaches <= -tau in a coordinate.
  bool reaches_negative() {
    const std::size_t d = ell_ + 1;  // variables
    // Inequality pool: d nonnegativity rows, then ell_ cap rows.
    const std::size_t pool = d + ell_;
    std::vector<std::size_t> pick(ell_);
    bool found = false;
    enumerate_subsets(pool, ell_, pick, 0, 0, found);
    return found;
  }

 private:
  void enumerate_subsets(std::size_t pool, std::size_t want, std::vector<std::size_t>& pick,
                         std::size_t start, std::size_t depth, bool& found) {
    if (found) return;
    if (depth == want) {
      found = probe_vertex(pick);
      return;
    }
    for (std::size_t c = start; c + (want - depth) <= pool; ++c) {
      pick[depth] = c;
      enumerate_subsets(pool, want, pick, c + 1, depth + 1, found);
      if (found) return;
    }
  }

  double combo_coord(const Vec& lambda, std::size_t r) const {
    double v = 0.0;
    for (std::size_t k = 0; k < lambda.size(); ++k) v += lambda[k] * gens_[k][r];
    return v;
  }

  bool probe_vertex(const std::vector<std::size_t>& active) {
    const std::size_t d = ell_ + 1;
    // System: sum lambda = 1 plus the active rows at equality.
    Matrix a(d, Vec(d, 0.0));
    Vec rhs(d, 0.0);
    for (std::size_t k = 0; k < d; ++k) a[0][k] = 1.0;
    rhs[0] = 1.0;
    for (std::size_t s = 0; s < active.size(); ++s) {
      const std::size_t c = active[s];
      if (c < d) {
        a[s + 1][c] = 1.0;  // lambda_c = 0
        rhs[s + 1] = 0.0;
      } else {
        const std::size_t r = c - d;  // combo coordinate r at the cap
        for (std::size_t k = 0; k < d; ++k) a[s + 1][k] = gens_[k][r];
        rhs[s + 1] = tau_;
      }
    }
    Vec lambda;
    if (!solve(a, rhs, lambda)) return false;

    const double feas = 1e-10;
    for (double l : lambda)
      if (l < -feas) return false;
    for (std::size_t r = 0; r < ell_; ++r)
      if (combo_coord(lambda, r) > tau_ + feas) return false;
    for (std::size_t r = 0; r < ell_; ++r)
      if (combo_coord(lambda, r) <= -tau_) return true;
    return false;
  }

  static bool solve(Matrix a, Vec rhs, Vec& out) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      for (std::size_t r = col + 1; r < n; ++r)
        if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
      if (std::abs(a[pivot][col]) < 1e-12) return false;
      std::swap(a[pivot], a[col]);
      std::swap(rhs[pivot], rhs[col]);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col) continue;
        const double f = a[r][col] / a[col][col];
        if (f == 0.0) continue;
        for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
        rhs[r] -= f * rhs[col];
      }
    }
    out.assign(n, 0.0);
    for (std::size_t r = 0; r < n; ++r) out[r] = rhs[r] / a[r][r];
    return true;
  }

  std::size_t ell_;
  double tau_;
  Matrix gens_;
};

}  // namespace

bool benson_check(const PointCloud& cloud, std::size_t index, Tolerance tol) {
  if (index >= cloud.size()) throw std::invalid_argument("benson_check: index out of range");
  if (cloud.dim() > 6 || cloud.size() > 64)
    throw std::invalid_argument(
        "benson_check: exact enumeration is limited to dim <= 6 and 64 points; use "
        "geoffrion_minimal_tradeoff for larger instances");
  const Vec& base = cloud.point(index);
  Vec shifted(cloud.dim());
  for (std::size_t c = 0; c < cloud.size(); ++c) {
    if (c == index) continue;
    for (std::size_t r = 0; r < shifted.size(); ++r) shifted[r] = cloud.point(c)[r] - base[r];
    CompetitorConeLP lp(shifted, tol.tau);
    if (lp.reaches_negative()) return false;
  }
  return true;
}

bool existence_check(const PointCloud& cloud, const Vec& reference, const ExistenceQuery& query,
                     Tolerance tol) {
  require_point(reference, cloud.dim(), "existence_check");
  const std::size_t ell = cloud.dim();
  Vec w(ell);

  if (query.family == ExistenceFamily::TradeoffUnion) {
    const TradeoffUnionCone cone(query.param, ell);
    for (std::size_t c = 0; c < cloud.size(); ++c) {
      for (std::size_t r = 0; r < ell; ++r) w[r] = reference[r] - cloud.point(c)[r];
      if (union_contains(cone, w, UnionMode::Open, tol)) return false;
    }
    return true;
  }

  HalfspaceCone cone;
  switch (query.family) {
    case ExistenceFamily::SumWeighted:
      cone = make_sum_weighted_cone(query.param, ell);
      break;
    case ExistenceFamily::LinearForm:
      cone = make_linear_form_cone(query.base, query.param);
      break;
    case ExistenceFamily::WeightedForm:
      cone = make_weighted_form_cone(query.base, query.param);
      break;
    default:
      throw std::invalid_argument("existence_check: unknown family");
  }
  for (std::size_t c = 0; c < cloud.size(); ++c) {
    double max_abs = 0.0;
    for (std::size_t r = 0; r < ell; ++r) {
      w[r] = reference[r] - cloud.point(c)[r];
      max_abs = std::max(max_abs, std::abs(w[r]));
    }
    if (max_abs <= tol.tau) continue;  // the origin is allowed by the "subset of {0}" form
    if (contains_closed(cone, w, tol)) return false;
  }
  return true;
}

ExistenceEquivalence existence_equivalence(const PointCloud& cloud, const Vec& reference,
                                           const Vec& s, const Vec& w, double min_bound,
                                           Tolerance tol) {
  require_point(reference, cloud.dim(), "existence_equivalence");
  if (!(min_bound > 0.0))
    throw std::invalid_argument("existence_equivalence: min_bound must be positive");
  const std::size_t ell = cloud.dim();

  // Smallest union bound (up to margin) excluding every shifted point, if one exists.
  bool attainable = true;
  double need = min_bound;
  Vec diff(ell);
  for (std::size_t c = 0; c < cloud.size() && attainable; ++c) {
    double max_abs = 0.0;
    double most_negative = 0.0;
    for (std::size_t r = 0; r < ell; ++r) {
      diff[r] = reference[r] - cloud.point(c)[r];
      max_abs = std::max(max_abs, std::abs(diff[r]));
      most_negative = std::min(most_negative, diff[r]);
    }
    if (max_abs <= tol.tau) continue;
    for (std::size_t i = 0; i < ell; ++i) {
      if (!(diff[i] > tol.tau)) continue;
      if (most_negative >= -tol.tau) {
        attainable = false;  // inside the orthant band: no bound can exclude it
        break;
      }
      need = std::max(need, (diff[i] - tol.tau) / (-most_negative));
    }
  }

  ExistenceEquivalence eq;
  eq.exists = attainable;
  eq.bound_used = (1.0 + kStrictMargin) * (attainable ? need : std::max(min_bound, 1.0));

  double s_sum = 0.0;
  for (double x : s) s_sum += x;
  double w_sum = 0.0, w_min = w.empty() ? 0.0 : w.front();
  for (double x : w) {
    w_sum += x;
    w_min = std::min(w_min, x);
  }

  eq.via_union =
      existence_check(cloud, reference, {ExistenceFamily::TradeoffUnion, eq.bound_used, {}}, tol);
  eq.via_sum_weighted = existence_check(
      cloud, reference,
      {ExistenceFamily::SumWeighted, std::max(1.0, static_cast<double>(ell) * eq.bound_used), {}},
      tol);
  eq.via_linear_form = existence_check(
      cloud, reference, {ExistenceFamily::LinearForm, 1.0 + eq.bound_used * s_sum, s}, tol);
  eq.via_weighted_form = existence_check(
      cloud, reference, {ExistenceFamily::WeightedForm, w_min / (2.0 * eq.bound_used * w_sum), w},
      tol);

  if (!eq.consistent())
    throw VerificationError("existence_equivalence: family answers disagree");
  return eq;
}

std::vector<GminEntry> ni_proper_min_set(const PointCloud& cloud, Tolerance tol) {
  std::vector<GminEntry> entries = geoffrion_min_set(cloud, tol);
  const std::size_t ell = cloud.dim();
  for (const GminEntry& entry : entries) {
    const double bound = entry.tradeoff > 0.0 ? entry.tradeoff * (1.0 + kStrictMargin) : 1.0;
    const SumForm form = make_sum_form(bound, ones(ell), ell, tol);
    const Vec& base = cloud.point(entry.index);
    Vec diff(ell);
    for (std::size_t c = 0; c < cloud.size(); ++c) {
      for (std::size_t r = 0; r < ell; ++r) diff[r] = cloud.point(c)[r] - base[r];
      const double value = eval_sum(form, diff);
      const bool ok = c == entry.index ? std::abs(value) <= tol.tau : value > tol.tau;
      if (!ok)
        throw VerificationError("ni_proper_min_set: sum-form certificate failed verification");
    }
  }
  return entries;
}

OrthantInvarianceReport plus_orthant_invariance(const PointCloud& cloud, std::size_t n_extra,
                                                std::uint64_t seed, Tolerance tol) {
  if (n_extra < 1) throw std::invalid_argument("plus_orthant_invariance: n_extra must be >= 1");
  const std::size_t ell = cloud.dim();
  Rng rng(seed);

  Matrix augmented = cloud.points();
  for (std::size_t t = 0; t < n_extra; ++t) {
    const Vec& base = cloud.point(static_cast<std::size_t>(rng.next_u64() % cloud.size()));
    Vec d = rng.unit_sphere(ell);
    const double scale = rng.uniform(0.5, 2.0);
    Vec extra(ell);
    for (std::size_t r = 0; r < ell; ++r) extra[r] = base[r] + scale * std::abs(d[r]);
    augmented.push_back(std::move(extra));
  }
  const PointCloud aug = PointCloud::from_points(std::move(augmented), tol);

  std::vector<std::size_t> base_set;
  for (const GminEntry& e : geoffrion_min_set(cloud, tol)) base_set.push_back(e.index);

  OrthantInvarianceReport report;
  report.seed = seed;
  report.added = aug.size() - cloud.size();
  std::vector<std::size_t> aug_original;
  for (const GminEntry& e : geoffrion_min_set(aug, tol)) {
    if (e.index < cloud.size())
      aug_original.push_back(e.index);
    else
      ++report.added_in_min_set;
  }
  report.index_set_changed = aug_original != base_set;
  return report;
}

}  // namespace paretocert
