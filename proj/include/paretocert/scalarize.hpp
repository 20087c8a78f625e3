#pragma once

#include "paretocert/efficiency.hpp"

namespace paretocert {

/// Sum-form certificate with verified zero minimum at the point and strict
/// positivity everywhere else on the cloud.
Certificate build_proper_functional(const PointCloud& cloud, std::size_t index,
                                    const Vec& direction, Tolerance tol);

/// Indices attaining the functional's minimum over the cloud within tau.
std::vector<std::size_t> argmin_scan(const PointCloud& cloud, const Functional& f, Tolerance tol);

/// Minimizers of a cone form over the cloud. Preconditions (orthant strictly
/// inside the cone, direction interior) are checked; every returned index is
/// asserted to be properly efficient.
std::vector<std::size_t> cone_scalarization_argmin(const PointCloud& cloud, const Vec& anchor,
                                                   const HalfspaceCone& cone, const Vec& direction,
                                                   Tolerance tol);

/// Point-anchored cone form with the point as verified unique minimizer.
Certificate unique_minimizer_certificate(const PointCloud& cloud, std::size_t index,
                                         const Vec& direction, Tolerance tol);

/// Weighted-sum baseline; minimizers are asserted properly efficient.
std::vector<std::size_t> linear_scalarization(const PointCloud& cloud, const Vec& weights,
                                              Tolerance tol);

}  // namespace paretocert
