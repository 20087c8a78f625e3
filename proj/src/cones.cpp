#include "paretocert/cones.hpp"

#include <algorithm>
#include <string>

#include "paretocert/rng.hpp"

namespace paretocert {

namespace {

void require_cone_point(const HalfspaceCone& cone, const Vec& y, const char* where) {
  require_point(y, cone.dim(), where);
}

void require_strictly_positive(const Vec& v, const char* name, const char* where) {
  for (double x : v)
    if (!(x > 0.0))
      throw std::invalid_argument(std::string(where) + ": " + name + " must be strictly positive");
  if (v.size() < 2) throw std::invalid_argument(std::string(where) + ": dimension must be >= 2");
}

}  // namespace

TradeoffUnionCone::TradeoffUnionCone(double bound_, std::size_t dim_) : bound(bound_), dim(dim_) {
  if (!(bound > 0.0)) throw std::invalid_argument("TradeoffUnionCone: bound must be positive");
  require_outcome_dim(dim, "TradeoffUnionCone");
}

bool contains_closed(const HalfspaceCone& cone, const Vec& y, Tolerance tol) {
  require_cone_point(cone, y, "contains_closed");
  for (const Vec& row : cone.rows)
    if (dot(row, y) < -tol.tau) return false;
  return true;
}

bool contains_interior(const HalfspaceCone& cone, const Vec& y, Tolerance tol) {
  require_cone_point(cone, y, "contains_interior");
  for (const Vec& row : cone.rows)
    if (!(dot(row, y) > tol.tau)) return false;
  return true;
}

bool union_contains(const TradeoffUnionCone& cone, const Vec& y, UnionMode mode, Tolerance tol) {
  require_point(y, cone.dim, "union_contains");
  const bool open = mode == UnionMode::Open;
  for (std::size_t i = 0; i < cone.dim; ++i) {
    bool ok = open ? y[i] > tol.tau : y[i] >= -tol.tau;
    for (std::size_t j = 0; ok && j < cone.dim; ++j) {
      if (j == i) continue;
      const double slack = y[i] + cone.bound * y[j];
      ok = open ? slack > tol.tau : slack >= -tol.tau;
    }
    if (ok) return true;
  }
  return false;
}

HalfspaceCone make_orthant(std::size_t ell) {
  require_outcome_dim(ell, "make_orthant");
  Matrix rows(ell, Vec(ell, 0.0));
  for (std::size_t i = 0; i < ell; ++i) rows[i][i] = 1.0;
  return HalfspaceCone{std::move(rows)};
}

HalfspaceCone make_sum_weighted_cone(double weight, std::size_t ell) {
  require_outcome_dim(ell, "make_sum_weighted_cone");
  if (!(weight > 0.0))
    throw std::invalid_argument("make_sum_weighted_cone: weight must be positive");
  Matrix rows(ell, Vec(ell, 1.0));
  for (std::size_t i = 0; i < ell; ++i) rows[i][i] = weight;
  return HalfspaceCone{std::move(rows)};
}

HalfspaceCone make_linear_form_cone(const Vec& s, double m) {
  require_strictly_positive(s, "s", "make_linear_form_cone");
  if (!(m > 0.0)) throw std::invalid_argument("make_linear_form_cone: m must be positive");
  const std::size_t ell = s.size();
  Matrix rows(ell, Vec(ell));
  for (std::size_t i = 0; i < ell; ++i) {
    for (std::size_t j = 0; j < ell; ++j) rows[i][j] = s[j] / m;
    rows[i][i] += 1.0;
  }
  return HalfspaceCone{std::move(rows)};
}

HalfspaceCone make_weighted_form_cone(const Vec& w, double eps) {
  require_strictly_positive(w, "w", "make_weighted_form_cone");
  if (!(eps > 0.0)) throw std::invalid_argument("make_weighted_form_cone: eps must be positive");
  const std::size_t ell = w.size();
  Matrix rows(ell, Vec(ell));
  for (std::size_t i = 0; i < ell; ++i) {
    for (std::size_t j = 0; j < ell; ++j) rows[i][j] = eps * w[j];
    rows[i][i] += w[i];
  }
  return HalfspaceCone{std::move(rows)};
}

HalfspaceCone make_weighted_sum_cone(const Vec& w, double eps) {
  require_strictly_positive(w, "w", "make_weighted_sum_cone");
  if (!(eps > 0.0)) throw std::invalid_argument("make_weighted_sum_cone: eps must be positive");
  const std::size_t ell = w.size();
  Matrix rows(ell, Vec(ell, eps));
  for (std::size_t i = 0; i < ell; ++i) rows[i][i] += w[i];
  return HalfspaceCone{std::move(rows)};
}

HalfspaceCone make_convex_weight_cone(double eps, std::size_t ell) {
  require_outcome_dim(ell, "make_convex_weight_cone");
  if (!(eps > 0.0 && eps < 1.0 / static_cast<double>(ell)))
    throw std::invalid_argument(
        "make_convex_weight_cone: eps must lie in (0, 1/ell), got eps=" + std::to_string(eps) +
        " with 1/ell=" + std::to_string(1.0 / static_cast<double>(ell)));
  Matrix rows(ell, Vec(ell, eps));
  const double diag = 1.0 - (static_cast<double>(ell) - 1.0) * eps;
  for (std::size_t i = 0; i < ell; ++i) rows[i][i] = diag;
  return HalfspaceCone{std::move(rows)};
}

HalfspaceCone tradeoff_slice_closure(std::size_t axis, double bound, std::size_t ell) {
  require_outcome_dim(ell, "tradeoff_slice_closure");
  if (axis >= ell) throw std::invalid_argument("tradeoff_slice_closure: axis out of range");
  if (!(bound > 0.0)) throw std::invalid_argument("tradeoff_slice_closure: bound must be positive");
  Matrix rows;
  rows.reserve(ell);
  Vec axis_row(ell, 0.0);
  axis_row[axis] = 1.0;
  rows.push_back(axis_row);
  for (std::size_t j = 0; j < ell; ++j) {
    if (j == axis) continue;
    Vec row = axis_row;
    row[j] = bound;
    rows.push_back(std::move(row));
  }
  return HalfspaceCone{std::move(rows)};
}

double union_bound_inside_sum_weighted(double weight, std::size_t ell) {
  require_outcome_dim(ell, "union_bound_inside_sum_weighted");
  if (!(weight > 0.0))
    throw std::invalid_argument("union_bound_inside_sum_weighted: weight must be positive");
  const double d = static_cast<double>(ell);
  return (1.0 + kStrictMargin) * std::max((d - 1.0) / weight, weight + d - 2.0);
}

double sum_weight_inside_union(double bound, std::size_t ell) {
  require_outcome_dim(ell, "sum_weight_inside_union");
  if (!(bound > 0.0)) throw std::invalid_argument("sum_weight_inside_union: bound must be positive");
  return static_cast<double>(ell) * bound;
}

double union_bound_for_linear_form(const Vec& s, double m) {
  require_strictly_positive(s, "s", "union_bound_for_linear_form");
  if (!(m > 1.0)) throw std::invalid_argument("union_bound_for_linear_form: m must exceed 1");
  double sum = 0.0;
  for (double x : s) sum += x;
  return (m - 1.0) / sum;
}

double union_bound_for_weighted_form(const Vec& w, double eps) {
  require_strictly_positive(w, "w", "union_bound_for_weighted_form");
  if (!(eps > 0.0))
    throw std::invalid_argument("union_bound_for_weighted_form: eps must be positive");
  double sum = 0.0;
  double lo = w.front();
  for (double x : w) {
    sum += x;
    lo = std::min(lo, x);
  }
  return lo / (2.0 * eps * sum);
}

double union_bound_inside_cone(const HalfspaceCone& cone, Tolerance tol) {
  const std::size_t ell = cone.dim();
  require_outcome_dim(ell, "union_bound_inside_cone");
  for (const Vec& row : cone.rows)
    for (double entry : row)
      if (!(entry > tol.tau))
        throw std::invalid_argument(
            "union_bound_inside_cone: cone does not strictly contain the orthant");
  // Per axis: largest t with the test vector (1 at axis, -t elsewhere) still
  // inside every face.
  double worst = 0.0;
  for (std::size_t i = 0; i < ell; ++i) {
    double t = 1.0;
    bool constrained = false;
    for (const Vec& row : cone.rows) {
      double off_sum = 0.0;
      for (std::size_t r = 0; r < ell; ++r)
        if (r != i) off_sum += row[r];
      if (off_sum > 0.0) {
        const double limit = row[i] / off_sum;
        t = constrained ? std::min(t, limit) : limit;
        constrained = true;
      }
    }
    worst = std::max(worst, 1.0 / t);
  }
  return (1.0 + kStrictMargin) * worst;
}

namespace {

constexpr std::size_t kRejectionBudget = 1000000;

template <typename Accept>
std::vector<Vec> rejection_sample(std::size_t ell, std::size_t n, std::uint64_t seed,
                                  Accept&& accept) {
  Rng rng(seed);
  std::vector<Vec> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t draws = 0;
    for (;;) {
      if (++draws > kRejectionBudget)
        throw std::runtime_error("sample_cone: rejection budget exceeded");
      Vec y = rng.unit_sphere(ell);
      if (accept(y)) {
        out.push_back(std::move(y));
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Vec> sample_sphere(std::size_t ell, std::size_t n, std::uint64_t seed) {
  require_outcome_dim(ell, "sample_sphere");
  return rejection_sample(ell, n, seed, [](const Vec&) { return true; });
}

std::vector<Vec> sample_cone_interior(const HalfspaceCone& cone, std::size_t n, std::uint64_t seed,
                                      Tolerance tol) {
  // Margin 10*tau keeps samples clear of the classification band.
  const double margin = 10.0 * tol.tau;
  return rejection_sample(cone.dim(), n, seed, [&](const Vec& y) {
    for (const Vec& row : cone.rows)
      if (!(dot(row, y) > margin)) return false;
    return true;
  });
}

std::vector<Vec> sample_union_open(const TradeoffUnionCone& cone, std::size_t n, std::uint64_t seed,
                                   Tolerance tol) {
  const double margin = 10.0 * tol.tau;
  return rejection_sample(cone.dim, n, seed, [&](const Vec& y) {
    for (std::size_t i = 0; i < cone.dim; ++i) {
      if (!(y[i] > margin)) continue;
      bool ok = true;
      for (std::size_t j = 0; ok && j < cone.dim; ++j)
        if (j != i) ok = y[i] + cone.bound * y[j] > margin;
      if (ok) return true;
    }
    return false;
  });
}

std::vector<Vec> sample_union_closure(const TradeoffUnionCone& cone, std::size_t n,
                                      std::uint64_t seed, Tolerance tol) {
  return rejection_sample(cone.dim, n, seed,
                          [&](const Vec& y) { return union_contains(cone, y, UnionMode::Closure, tol); });
}

std::vector<Vec> sample_orthant_interior(std::size_t ell, std::size_t n, std::uint64_t seed,
                                         Tolerance tol) {
  const double margin = 10.0 * tol.tau;
  return rejection_sample(ell, n, seed, [&](const Vec& y) {
    for (double x : y)
      if (!(x > margin)) return false;
    return true;
  });
}

}  // namespace paretocert
