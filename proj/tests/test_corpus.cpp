#include <cmath>

#include "doctest.h"
#include "paretocert/corpus.hpp"

using namespace paretocert;

namespace {
const Tolerance kTol;
}

TEST_CASE("hyperbola samples") {
  const PointCloud tiny = gen_hyperbola(10.0, 3, kTol);
  REQUIRE(tiny.size() == 3);
  const auto center = tiny.find({-1.0, -1.0}, kTol);
  REQUIRE(center.has_value());
  // Grid {-10, -1, -0.1}: the far competitor fixes the constant at 9/0.9.
  const Tradeoff t = geoffrion_minimal_tradeoff(tiny, *center, kTol);
  REQUIRE(t.finite);
  CHECK(t.value == doctest::Approx(10.0).epsilon(1e-12));

  const PointCloud cloud = gen_hyperbola(100.0, 21, kTol);
  CHECK(cloud.find({-1.0, -1.0}, kTol).has_value());
  CHECK(min_set(cloud, DominationOracle::orthant_closed(2), kTol).size() == cloud.size());
  for (const Vec& y : cloud.points()) {
    CHECK(y[0] < 0.0);
    CHECK(y[1] == doctest::Approx(1.0 / y[0]).epsilon(1e-12));
  }

  CHECK_THROWS_AS(gen_hyperbola(1.0, 5, kTol), std::invalid_argument);
  CHECK_THROWS_AS(gen_hyperbola(10.0, 2, kTol), std::invalid_argument);
}

TEST_CASE("two-box fixture") {
  const PointCloud cloud = gen_two_boxes(0.05, kTol);
  REQUIRE(cloud.find({0.0, -1.0}, kTol).has_value());
  REQUIRE(cloud.find({-1.0, 1.0}, kTol).has_value());

  SUBCASE("efficient set is the segment plus the corner") {
    const auto pareto = min_set(cloud, DominationOracle::orthant_closed(2), kTol);
    std::size_t segment_points = 0;
    for (std::size_t i : pareto) {
      const Vec& y = cloud.point(i);
      const bool corner = std::abs(y[0]) <= kTol.tau && std::abs(y[1] + 1.0) <= kTol.tau;
      const bool segment =
          y[0] < -kTol.tau && y[0] >= -1.0 - kTol.tau && std::abs(y[1] + y[0]) <= kTol.tau;
      CHECK((corner || segment));
      if (segment) ++segment_points;
    }
    CHECK(segment_points == 20);  // -1, -0.95, ..., -0.05
    CHECK(pareto.size() == 21);

    std::vector<std::size_t> proper;
    for (const GminEntry& e : geoffrion_min_set(cloud, kTol)) proper.push_back(e.index);
    CHECK(proper == pareto);
  }

  SUBCASE("trade-off constant blows up along the segment") {
    // Competitor (0,-1) forces (1+eps)/eps at the segment point (-eps, eps).
    const auto near_corner = cloud.find({-0.05, 0.05}, kTol);
    REQUIRE(near_corner.has_value());
    CHECK(geoffrion_minimal_tradeoff(cloud, *near_corner, kTol).value ==
          doctest::Approx(1.05 / 0.05).epsilon(1e-9));

    const auto mid = cloud.find({-0.5, 0.5}, kTol);
    REQUIRE(mid.has_value());
    CHECK(geoffrion_minimal_tradeoff(cloud, *mid, kTol).value ==
          doctest::Approx(1.5 / 0.5).epsilon(1e-9));
  }

  SUBCASE("deterministic regeneration") {
    const PointCloud again = gen_two_boxes(0.05, kTol);
    CHECK(again.points() == cloud.points());
  }

  SUBCASE("largest segment constant scales like the inverse step") {
    double previous = 0.0;
    for (double h : {0.1, 0.05, 0.02}) {
      const PointCloud grid = gen_two_boxes(h, kTol);
      double largest = 0.0;
      for (const GminEntry& e : geoffrion_min_set(grid, kTol))
        largest = std::max(largest, e.tradeoff);
      // The extreme sits at the segment point closest to the corner column.
      CHECK(largest == doctest::Approx((1.0 + h) / h).epsilon(1e-9));
      CHECK(largest > previous);
      previous = largest;
    }
  }

  CHECK_THROWS_AS(gen_two_boxes(0.2, kTol), std::invalid_argument);
  CHECK_THROWS_AS(gen_two_boxes(0.0, kTol), std::invalid_argument);
}

TEST_CASE("sqrt-notch fixture") {
  const PointCloud cloud = gen_sqrt_notch(0.1, kTol);
  CHECK(cloud.find({0.0, 0.0}, kTol).has_value());
  CHECK(cloud.find({1.0, -0.5}, kTol).has_value());
  for (const Vec& y : cloud.points()) {
    if (y[0] <= 0.0) {
      CHECK(y[1] >= -y[0] - kTol.tau);
    } else {
      CHECK(y[1] >= -0.5 * std::sqrt(y[0]) - kTol.tau);
    }
    CHECK(y[1] <= 1.0 + kTol.tau);
  }
  const PointCloud again = gen_sqrt_notch(0.1, kTol);
  CHECK(again.points() == cloud.points());
}

TEST_CASE("piecewise scalar fixture and the segment-with-ray set") {
  CHECK(piecewise_exp_quad(0.0) == 0.0);
  CHECK(piecewise_exp_quad(-1.0) == doctest::Approx(std::exp(-1.0) - 1.0));
  CHECK(piecewise_exp_quad(2.0) == doctest::Approx(8.0));

  const PointCloud cloud = gen_segment_with_ray(3.0, 0.05, kTol);
  const auto origin = cloud.find({0.0, 0.0}, kTol);
  REQUIRE(origin.has_value());

  // The separable fixture functional is zero at the origin and positive
  // elsewhere on the set, even though no finite trade-off bound is uniform.
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    if (i == *origin) {
      CHECK(piecewise_exp_quad_sum(cloud.point(i)) == 0.0);
    } else {
      CHECK(piecewise_exp_quad_sum(cloud.point(i)) > 0.0);
    }
  }

  // The ray's cut depth is exactly the origin's minimal trade-off constant.
  CHECK(geoffrion_minimal_tradeoff(cloud, *origin, kTol).value == doctest::Approx(3.0));
  const PointCloud deeper = gen_segment_with_ray(5.0, 0.05, kTol);
  const auto origin2 = deeper.find({0.0, 0.0}, kTol);
  REQUIRE(origin2.has_value());
  CHECK(geoffrion_minimal_tradeoff(deeper, *origin2, kTol).value == doctest::Approx(5.0));
}

TEST_CASE("random instance families") {
  const PointCloud single = gen_random(1, 2, 0, RandomDistribution::Gaussian, kTol);
  CHECK(single.size() == 1);

  for (std::size_t ell : {std::size_t{2}, std::size_t{3}}) {
    const PointCloud frontier = gen_random(50, ell, 5, RandomDistribution::ConvexFrontier, kTol);
    CHECK(min_set(frontier, DominationOracle::orthant_closed(ell), kTol).size() ==
          frontier.size());
  }

  const PointCloud a = gen_random(30, 3, 12, RandomDistribution::SphereShell, kTol);
  const PointCloud b = gen_random(30, 3, 12, RandomDistribution::SphereShell, kTol);
  CHECK(a.points() == b.points());

  InstanceSpec spec;
  spec.kind = InstanceSpec::Kind::Random;
  spec.count = 30;
  spec.ell = 3;
  spec.seed = 12;
  spec.distribution = RandomDistribution::SphereShell;
  CHECK(generate(spec, kTol).points() == a.points());
}
