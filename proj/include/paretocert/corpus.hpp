#pragma once

#include <cstdint>

#include "paretocert/efficiency.hpp"

namespace paretocert {

enum class RandomDistribution { SphereShell, Gaussian, ConvexFrontier };

/// Deterministic instance description: same spec, same cloud.
struct InstanceSpec {
  enum class Kind { Hyperbola, TwoBoxes, SqrtNotch, Random };

  Kind kind = Kind::Random;
  double range = 10.0;       // hyperbola parameter range bound
  double step = 0.05;        // grid step for the box fixtures
  std::size_t count = 31;    // sample count
  std::size_t ell = 2;       // dimension (random kind only)
  std::uint64_t seed = 0;    // random kind only
  RandomDistribution distribution = RandomDistribution::Gaussian;
};

/// Points (t, 1/t) with t log-spaced in [-range, -1/range]. Odd counts include
/// (-1, -1). The whole cloud sits on a strictly decreasing convex frontier.
PointCloud gen_hyperbola(double range, std::size_t n, Tolerance tol);

/// Grid sample of the union of the box [-1,0] x [t >= -y1, 1] and the box
/// [0,1] x [-1,1]. The step is snapped to 1/round(1/step) so the anti-diagonal
/// segment points (t, -t) and the corner (0, -1) land on the grid exactly.
PointCloud gen_two_boxes(double step, Tolerance tol);

/// Grid sample of the box [-1,0] x [-y1, 1] joined with the region
/// 0 <= y1 <= 1, -sqrt(y1)/2 <= y2 <= 1; the sqrt boundary is included exactly.
PointCloud gen_sqrt_notch(double step, Tolerance tol);

PointCloud gen_random(std::size_t n, std::size_t ell, std::uint64_t seed,
                      RandomDistribution distribution, Tolerance tol);

PointCloud generate(const InstanceSpec& spec, Tolerance tol);

/// Scalar fixture: exp(x) - 1 below zero, x^2 + 2x above. Strictly increasing,
/// strictly convex, zero at zero.
double piecewise_exp_quad(double x);

/// Separable fixture functional: sum of piecewise_exp_quad over coordinates.
double piecewise_exp_quad_sum(const Vec& y);

/// Grid sample of the segment {y1 + y2 = 0, y1 in [-1, 1]} joined with the ray
/// {y1 = 1, y2 <= -1}, cut at depth. The minimal trade-off constant at the
/// origin equals the cut depth.
PointCloud gen_segment_with_ray(double depth, double step, Tolerance tol);

}  // namespace paretocert
