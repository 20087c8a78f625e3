#pragma once

#include <cstdint>

#include "paretocert/types.hpp"

namespace paretocert {

/// Closed polyhedral cone {y : row_j . y >= 0 for every row}.
struct HalfspaceCone {
  Matrix rows;  // m x ell, no all-zero row

  std::size_t dim() const { return rows.empty() ? 0 : rows.front().size(); }
  std::size_t face_count() const { return rows.size(); }
};

/// Union of the open cones {y : y_axis > 0, y_axis + bound * y_j > 0 for j != axis}
/// over all axes. Non-convex in general; never materialized as halfspaces.
struct TradeoffUnionCone {
  double bound;     // trade-off constant, > 0
  std::size_t dim;  // outcome dimension, >= 2

  TradeoffUnionCone(double bound_, std::size_t dim_);

  /// Convexity of (union + origin); a function of (dim, bound) only.
  bool is_convex() const { return dim == 2 && bound >= 1.0; }
};

enum class UnionMode { Open, Closure };

/// Non-strict membership: every face slack >= -tau.
bool contains_closed(const HalfspaceCone& cone, const Vec& y, Tolerance tol);

/// Strict membership: every face slack > +tau. Correct as an interior test for
/// the full-dimensional irredundant cones produced by the factories below;
/// caller-supplied cones are not de-redundified.
bool contains_interior(const HalfspaceCone& cone, const Vec& y, Tolerance tol);

bool union_contains(const TradeoffUnionCone& cone, const Vec& y, UnionMode mode, Tolerance tol);

/// Nonnegative orthant as identity rows.
HalfspaceCone make_orthant(std::size_t ell);

/// Faces weight * y_i + sum_{j != i} y_j >= 0, one per coordinate. weight > 0.
HalfspaceCone make_sum_weighted_cone(double weight, std::size_t ell);

/// Faces y_i + (s/m) . y >= 0 with s strictly positive, m > 0.
HalfspaceCone make_linear_form_cone(const Vec& s, double m);

/// Faces w_i y_i + eps * (w . y) >= 0 with w strictly positive, eps > 0.
HalfspaceCone make_weighted_form_cone(const Vec& w, double eps);

/// Faces w_i y_i + eps * sum_j y_j >= 0 with w strictly positive, eps > 0.
HalfspaceCone make_weighted_sum_cone(const Vec& w, double eps);

/// Faces (1 - (ell-1) eps) y_i + eps * sum_{j != i} y_j >= 0; eps in (0, 1/ell).
/// Row-proportional to make_sum_weighted_cone((1 - (ell-1) eps) / eps, ell).
HalfspaceCone make_convex_weight_cone(double eps, std::size_t ell);

/// Closure of one slice of the trade-off union: rows e_axis and
/// e_axis + bound * e_j for j != axis (ell rows, axis 0-based).
HalfspaceCone tradeoff_slice_closure(std::size_t axis, double bound, std::size_t ell);

/// Smallest safe trade-off bound with union(bound') inside the sum-weighted
/// cone for every bound' >= result. weight > 0.
double union_bound_inside_sum_weighted(double weight, std::size_t ell);

/// Weight w with (sum-weighted cone minus origin) inside the open union(bound).
double sum_weight_inside_union(double bound, std::size_t ell);

/// Bound with (linear-form cone minus origin) inside the open union. m > 1.
double union_bound_for_linear_form(const Vec& s, double m);

/// Bound with (weighted-form cone minus origin) inside the open union.
double union_bound_for_weighted_form(const Vec& w, double eps);

/// Bound with the open union inside the interior of an arbitrary cone that
/// strictly contains the orthant (every matrix entry > tau).
double union_bound_inside_cone(const HalfspaceCone& cone, Tolerance tol);

// Rejection sampling on the unit sphere. Deterministic given seed; each
// returned point passes the region's membership test with margin. Throws if a
// single point needs more than 10^6 draws.
std::vector<Vec> sample_sphere(std::size_t ell, std::size_t n, std::uint64_t seed);
std::vector<Vec> sample_cone_interior(const HalfspaceCone& cone, std::size_t n, std::uint64_t seed,
                                      Tolerance tol);
std::vector<Vec> sample_union_open(const TradeoffUnionCone& cone, std::size_t n, std::uint64_t seed,
                                   Tolerance tol);
std::vector<Vec> sample_union_closure(const TradeoffUnionCone& cone, std::size_t n, std::uint64_t seed,
                                      Tolerance tol);
/// Strictly positive directions (orthant interior).
std::vector<Vec> sample_orthant_interior(std::size_t ell, std::size_t n, std::uint64_t seed,
                                         Tolerance tol);

}  // namespace paretocert
