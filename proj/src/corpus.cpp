#include "paretocert/corpus.hpp"

#include <cmath>

#include "paretocert/rng.hpp"

namespace paretocert {

PointCloud gen_hyperbola(double range, std::size_t n, Tolerance tol) {
  if (!(range > 1.0)) throw std::invalid_argument("gen_hyperbola: range must exceed 1");
  if (n < 3) throw std::invalid_argument("gen_hyperbola: need at least 3 samples");
  const double top = std::log10(range);
  Matrix points;
  points.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double expo = top * (1.0 - 2.0 * static_cast<double>(k) / static_cast<double>(n - 1));
    const double t = -std::pow(10.0, expo);
    points.push_back({t, 1.0 / t});
  }
  return PointCloud::from_points(std::move(points), tol);
}

namespace {

std::size_t snapped_steps(double step, const char* where) {
  if (!(step > 0.0 && step <= 0.1))
    throw std::invalid_argument(std::string(where) + ": step must lie in (0, 0.1]");
  return static_cast<std::size_t>(std::llround(1.0 / step));
}

}  // namespace

PointCloud gen_two_boxes(double step, Tolerance tol) {
  const std::size_t steps = snapped_steps(step, "gen_two_boxes");
  const double h = 1.0 / static_cast<double>(steps);
  Matrix points;
  // Left box: -1 <= y1 <= 0, -y1 <= y2 <= 1.
  for (std::size_t k = 0; k <= steps; ++k) {
    const double y1 = -static_cast<double>(k) * h;
    for (std::size_t j = k; j <= steps; ++j) points.push_back({y1, static_cast<double>(j) * h});
  }
  // Right box: 0 <= y1 <= 1, -1 <= y2 <= 1.
  for (std::size_t k = 0; k <= steps; ++k) {
    const double y1 = static_cast<double>(k) * h;
    for (std::size_t j = 0; j <= 2 * steps; ++j)
      points.push_back({y1, -1.0 + static_cast<double>(j) * h});
  }
  return PointCloud::from_points(std::move(points), tol);
}

PointCloud gen_sqrt_notch(double step, Tolerance tol) {
  const std::size_t steps = snapped_steps(step, "gen_sqrt_notch");
  const double h = 1.0 / static_cast<double>(steps);
  Matrix points;
  for (std::size_t k = 0; k <= steps; ++k) {
    const double y1 = -static_cast<double>(k) * h;
    for (std::size_t j = k; j <= steps; ++j) points.push_back({y1, static_cast<double>(j) * h});
  }
  for (std::size_t k = 0; k <= steps; ++k) {
    const double y1 = static_cast<double>(k) * h;
    const double lip = -0.5 * std::sqrt(y1);
    points.push_back({y1, lip});
    const auto first = static_cast<long long>(std::ceil(lip / h));
    for (long long j = first; j <= static_cast<long long>(steps); ++j)
      points.push_back({y1, static_cast<double>(j) * h});
  }
  return PointCloud::from_points(std::move(points), tol);
}

PointCloud gen_random(std::size_t n, std::size_t ell, std::uint64_t seed,
                      RandomDistribution distribution, Tolerance tol) {
  if (n < 1) throw std::invalid_argument("gen_random: need at least one point");
  require_outcome_dim(ell, "gen_random");
  Rng rng(seed);
  Matrix points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    switch (distribution) {
      case RandomDistribution::SphereShell: {
        Vec y = rng.unit_sphere(ell);
        const double radius = rng.uniform(0.8, 1.2);
        for (double& x : y) x *= radius;
        points.push_back(std::move(y));
        break;
      }
      case RandomDistribution::Gaussian:
        points.push_back(rng.gaussian_vec(ell));
        break;
      case RandomDistribution::ConvexFrontier: {
        // Negative part of the unit sphere: mutually non-dominated by
        // construction (equal norms force equality under coordinate order).
        Vec y = rng.unit_sphere(ell);
        for (double& x : y) x = -std::abs(x);
        points.push_back(std::move(y));
        break;
      }
    }
  }
  return PointCloud::from_points(std::move(points), tol);
}

PointCloud generate(const InstanceSpec& spec, Tolerance tol) {
  switch (spec.kind) {
    case InstanceSpec::Kind::Hyperbola:
      return gen_hyperbola(spec.range, spec.count, tol);
    case InstanceSpec::Kind::TwoBoxes:
      return gen_two_boxes(spec.step, tol);
    case InstanceSpec::Kind::SqrtNotch:
      return gen_sqrt_notch(spec.step, tol);
    case InstanceSpec::Kind::Random:
      return gen_random(spec.count, spec.ell, spec.seed, spec.distribution, tol);
  }
  throw std::invalid_argument("generate: unknown instance kind");
}

double piecewise_exp_quad(double x) { return x < 0.0 ? std::exp(x) - 1.0 : x * x + 2.0 * x; }

double piecewise_exp_quad_sum(const Vec& y) {
  double s = 0.0;
  for (double x : y) s += piecewise_exp_quad(x);
  return s;
}

PointCloud gen_segment_with_ray(double depth, double step, Tolerance tol) {
  if (!(depth >= 1.0)) throw std::invalid_argument("gen_segment_with_ray: depth must be >= 1");
  const std::size_t steps = snapped_steps(step, "gen_segment_with_ray");
  const double h = 1.0 / static_cast<double>(steps);
  Matrix points;
  for (long long k = -static_cast<long long>(steps); k <= static_cast<long long>(steps); ++k) {
    const double t = static_cast<double>(k) * h;
    points.push_back({t, -t});
  }
  const auto tail = static_cast<std::size_t>(std::llround((depth - 1.0) / h));
  for (std::size_t j = 0; j <= tail; ++j)
    points.push_back({1.0, -1.0 - static_cast<double>(j) * h});
  return PointCloud::from_points(std::move(points), tol);
}

}  // namespace paretocert
