#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "paretocert/corpus.hpp"
#include "paretocert/efficiency.hpp"

using namespace paretocert;

namespace {

const Tolerance kTol;

PointCloud cloud_of(Matrix points) { return PointCloud::from_points(std::move(points), kTol); }

bool has_index(const std::vector<std::size_t>& set, std::size_t index) {
  return std::find(set.begin(), set.end(), index) != set.end();
}

std::vector<std::size_t> gmin_indices(const PointCloud& cloud) {
  std::vector<std::size_t> out;
  for (const GminEntry& e : geoffrion_min_set(cloud, kTol)) out.push_back(e.index);
  return out;
}

}  // namespace

TEST_CASE("point cloud ingestion") {
  const PointCloud cloud = cloud_of({{0.0, 0.0}, {0.0, kTol.tau / 2.0}, {1.0, 1.0}});
  CHECK(cloud.size() == 2);
  CHECK(cloud.merged_count() == 1);
  CHECK(cloud.find({0.0, 0.0}, kTol).value() == 0);
  CHECK_FALSE(cloud.find({5.0, 5.0}, kTol).has_value());
  CHECK_THROWS_AS(cloud_of({}), std::invalid_argument);
  CHECK_THROWS_AS(cloud_of({{1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(cloud_of({{1.0, std::nan("")}}), std::invalid_argument);
}

TEST_CASE("efficient and weakly efficient sets") {
  const PointCloud cloud = cloud_of({{0.0, 0.0}, {1.0, 1.0}, {1.0, -1.0}});
  const auto pareto = min_set(cloud, DominationOracle::orthant_closed(2), kTol);
  CHECK(pareto == std::vector<std::size_t>{0, 2});

  const PointCloud single = cloud_of({{3.0, 4.0}});
  CHECK(min_set(single, DominationOracle::orthant_closed(2), kTol) ==
        std::vector<std::size_t>{0});

  const PointCloud weak = cloud_of({{0.0, 0.0}, {0.0, 1.0}});
  CHECK(min_set(weak, DominationOracle::orthant_open(2), kTol) ==
        std::vector<std::size_t>{0, 1});
  CHECK(min_set(weak, DominationOracle::orthant_closed(2), kTol) ==
        std::vector<std::size_t>{0});
}

TEST_CASE("minimal trade-off constants") {
  const PointCloud cloud = cloud_of({{0.0, 0.0}, {-1.0, 3.0}});
  const Tradeoff first = geoffrion_minimal_tradeoff(cloud, 0, kTol);
  REQUIRE(first.finite);
  CHECK(first.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  const Tradeoff second = geoffrion_minimal_tradeoff(cloud, 1, kTol);
  REQUIRE(second.finite);
  CHECK(second.value == doctest::Approx(3.0).epsilon(1e-12));

  const PointCloud single = cloud_of({{2.0, 2.0}});
  CHECK(geoffrion_minimal_tradeoff(single, 0, kTol).value == 0.0);

  const PointCloud dominated = cloud_of({{0.0, 0.0}, {1.0, 1.0}});
  CHECK_FALSE(geoffrion_minimal_tradeoff(dominated, 1, kTol).finite);
  CHECK(geoffrion_minimal_tradeoff(dominated, 0, kTol).value == 0.0);
}

TEST_CASE("properly efficient set and the finite-cloud collapse") {
  const PointCloud pair = cloud_of({{0.0, 0.0}, {-1.0, 3.0}});
  const auto entries = geoffrion_min_set(pair, kTol);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].tradeoff == doctest::Approx(1.0 / 3.0));
  CHECK(entries[1].tradeoff == doctest::Approx(3.0));

  const PointCloud dominated = cloud_of({{0.0, 0.0}, {1.0, 1.0}});
  CHECK(gmin_indices(dominated) == std::vector<std::size_t>{0});

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t ell = 2 + seed % 4;
    const PointCloud cloud =
        gen_random(20, ell, seed, RandomDistribution::Gaussian, kTol);
    const auto proper = gmin_indices(cloud);
    CHECK(proper == min_set(cloud, DominationOracle::orthant_closed(ell), kTol));
    for (std::size_t i = 0; i < cloud.size(); ++i)
      CHECK(has_index(proper, i) == testoracle::brute_pareto_minimal(cloud.points(), i, kTol.tau));
  }
}

TEST_CASE("efficiency through the trade-off union") {
  const PointCloud cloud = cloud_of({{0.0, 0.0}, {-1.0, 3.0}});
  // Both trade-off constants exceed 0.1, so both points fall to the union.
  CHECK(geoffrion_min_via_union(cloud, 0.1, kTol).empty());
  // At the first point's own constant the boundary keeps it efficient.
  CHECK(geoffrion_min_via_union(cloud, 1.0 / 3.0, kTol) == std::vector<std::size_t>{0});
  CHECK(geoffrion_min_via_union(cloud, 3.0, kTol) == std::vector<std::size_t>{0, 1});

  SUBCASE("membership ladder per certified point") {
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
      const PointCloud random = gen_random(15, 3, seed, RandomDistribution::Gaussian, kTol);
      for (const GminEntry& e : geoffrion_min_set(random, kTol)) {
        const double base = e.tradeoff > 0.0 ? e.tradeoff * (1.0 + kStrictMargin) : 1.0;
        for (double factor : {1.0, 2.0, 10.0})
          CHECK(has_index(geoffrion_min_via_union(random, base * factor, kTol), e.index));
      }
    }
  }
  SUBCASE("membership is monotone in the bound") {
    for (std::uint64_t seed = 200; seed < 210; ++seed) {
      const PointCloud random = gen_random(15, 3, seed, RandomDistribution::Gaussian, kTol);
      const Vec ladder = {0.3, 1.0, 4.0, 16.0};
      for (std::size_t step = 0; step + 1 < ladder.size(); ++step) {
        const auto small = geoffrion_min_via_union(random, ladder[step], kTol);
        const auto large = geoffrion_min_via_union(random, ladder[step + 1], kTol);
        for (std::size_t i : small) CHECK(has_index(large, i));
      }
    }
  }
}

TEST_CASE("efficiency through enclosing cones") {
  for (std::uint64_t seed = 300; seed < 310; ++seed) {
    const PointCloud cloud = gen_random(12, 2, seed, RandomDistribution::SphereShell, kTol);
    const auto proper = gmin_indices(cloud);
    double max_tradeoff = 0.0;
    for (const GminEntry& e : geoffrion_min_set(cloud, kTol))
      max_tradeoff = std::max(max_tradeoff, e.tradeoff);
    const double weight = 2.0 * std::max(1.0, max_tradeoff * (1.0 + kStrictMargin));
    for (std::size_t i : geoffrion_min_via_cone(cloud, make_sum_weighted_cone(weight, 2), kTol))
      CHECK(has_index(proper, i));
  }
}

TEST_CASE("certified points stay efficient for every cone family") {
  // Per certified point: the sum-weighted cone at dim * constant, the
  // linear-form cone once its scale exceeds 1 + constant * sum(s), and the
  // weighted-form cone once eps drops below min(w) / (2 * constant * sum(w)).
  for (std::uint64_t seed = 900; seed < 930; ++seed) {
    const std::size_t ell = 2 + seed % 3;
    const PointCloud cloud = gen_random(14, ell, seed, RandomDistribution::Gaussian, kTol);
    Rng rng(seed);
    Vec s(ell), w(ell);
    for (double& x : s) x = rng.uniform(0.3, 2.0);
    for (double& x : w) x = rng.uniform(0.3, 2.0);
    double s_sum = 0.0, w_sum = 0.0, w_min = w[0];
    for (double x : s) s_sum += x;
    for (double x : w) {
      w_sum += x;
      w_min = std::min(w_min, x);
    }
    for (const GminEntry& e : geoffrion_min_set(cloud, kTol)) {
      const double safe = std::max(e.tradeoff * (1.0 + kStrictMargin), kStrictMargin);
      const double weight = static_cast<double>(ell) * safe;
      CHECK(has_index(
          geoffrion_min_via_cone(cloud, make_sum_weighted_cone(weight, ell), kTol), e.index));
      const double m = 1.0 + safe * s_sum;
      CHECK(has_index(geoffrion_min_via_cone(cloud, make_linear_form_cone(s, m), kTol), e.index));
      const double eps = w_min / (2.0 * safe * w_sum);
      CHECK(has_index(geoffrion_min_via_cone(cloud, make_weighted_form_cone(w, eps), kTol),
                      e.index));
    }
  }
}

TEST_CASE("weak efficiency contains efficiency for matching oracles") {
  for (std::uint64_t seed = 950; seed < 970; ++seed) {
    const std::size_t ell = 2 + seed % 3;
    const PointCloud cloud = gen_random(18, ell, seed, RandomDistribution::Gaussian, kTol);
    const auto efficient = min_set(cloud, DominationOracle::orthant_closed(ell), kTol);
    const auto weak = min_set(cloud, DominationOracle::orthant_open(ell), kTol);
    for (std::size_t i : efficient) CHECK(has_index(weak, i));

    const HalfspaceCone cone = make_sum_weighted_cone(2.5, ell);
    const auto cone_eff = min_set(cloud, DominationOracle::cone_closed(cone), kTol);
    const auto cone_weak = min_set(cloud, DominationOracle::cone_open(cone), kTol);
    for (std::size_t i : cone_eff) CHECK(has_index(cone_weak, i));
  }
}

TEST_CASE("open oracles accept only what the closed ones accept") {
  Rng rng(980);
  const auto open_oracle = DominationOracle::orthant_open(3);
  const auto closed_oracle = DominationOracle::orthant_closed(3);
  const auto union_open_oracle = DominationOracle::union_open(1.5, 3);
  const auto union_closed_oracle = DominationOracle::union_closure(1.5, 3);
  for (int i = 0; i < 2000; ++i) {
    const Vec diff = rng.gaussian_vec(3);
    if (open_oracle.contains(diff, kTol)) CHECK(closed_oracle.contains(diff, kTol));
    if (union_open_oracle.contains(diff, kTol)) CHECK(union_closed_oracle.contains(diff, kTol));
  }
}

TEST_CASE("enclosing-cone certificates") {
  const PointCloud cloud = cloud_of({{0.0, 0.0}, {-1.0, 3.0}});
  const Certificate cert = henig_certificate(cloud, 0, kTol);
  CHECK(cert.tradeoff == doctest::Approx(1.0 / 3.0));
  REQUIRE(cert.cone_param.has_value());
  CHECK(cert.cone_param->value ==
        doctest::Approx(2.0 * (1.0 / 3.0) * (1.0 + kStrictMargin)).epsilon(1e-12));

  const PointCloud single = cloud_of({{1.0, 2.0}});
  CHECK(henig_certificate(single, 0, kTol).cone_param->value == doctest::Approx(2.0));

  const PointCloud dominated = cloud_of({{0.0, 0.0}, {1.0, 1.0}});
  CHECK_THROWS_WITH_AS(henig_certificate(dominated, 1, kTol),
                       doctest::Contains("minimal trade-off constant is infinite"),
                       std::invalid_argument);

  SUBCASE("random harness") {
    for (std::uint64_t seed = 400; seed < 430; ++seed) {
      const std::size_t ell = 2 + seed % 3;
      const PointCloud random = gen_random(15, ell, seed, RandomDistribution::Gaussian, kTol);
      for (const GminEntry& e : geoffrion_min_set(random, kTol))
        CHECK_NOTHROW(henig_certificate(random, e.index, kTol));
    }
  }
}

TEST_CASE("projecting-cone criterion") {
  const PointCloud pair = cloud_of({{0.0, 0.0}, {-1.0, 3.0}});
  CHECK(benson_check(pair, 0, kTol));
  CHECK(benson_check(pair, 1, kTol));

  const PointCloud dominated = cloud_of({{0.0, 0.0}, {1.0, 1.0}});
  CHECK_FALSE(benson_check(dominated, 1, kTol));
  CHECK(benson_check(dominated, 0, kTol));

  // Two mutually compensating competitors whose convex mix is negative; the
  // projecting-cone criterion must still accept the origin.
  const PointCloud mix = cloud_of({{0.0, 0.0}, {-2.0, 1.0}, {1.0, -2.0}});
  CHECK(benson_check(mix, 0, kTol));
  CHECK(geoffrion_minimal_tradeoff(mix, 0, kTol).value == doctest::Approx(2.0));

  SUBCASE("agreement with the trade-off constant on random clouds") {
    for (std::uint64_t seed = 500; seed < 540; ++seed) {
      const std::size_t ell = 2 + seed % 3;
      const PointCloud cloud = gen_random(12, ell, seed, RandomDistribution::Gaussian, kTol);
      for (std::size_t i = 0; i < cloud.size(); ++i)
        CHECK(benson_check(cloud, i, kTol) == geoffrion_minimal_tradeoff(cloud, i, kTol).finite);
    }
  }
  SUBCASE("size bound is enforced") {
    const PointCloud big = gen_random(12, 7, 1, RandomDistribution::Gaussian, kTol);
    CHECK_THROWS_WITH_AS(benson_check(big, 0, kTol), doctest::Contains("geoffrion"),
                         std::invalid_argument);
  }
}

TEST_CASE("existence of properly efficient points relative to a reference") {
  const PointCloud cloud = cloud_of({{1.0, 0.0}, {0.0, 1.0}});
  CHECK(existence_check(cloud, {0.0, 0.0}, {ExistenceFamily::TradeoffUnion, 1.0, {}}, kTol));

  const PointCloud below = cloud_of({{-1.0, -1.0}, {5.0, 5.0}});
  const Vec origin = {0.0, 0.0};
  CHECK_FALSE(existence_check(below, origin, {ExistenceFamily::TradeoffUnion, 1.0, {}}, kTol));
  CHECK_FALSE(existence_check(below, origin, {ExistenceFamily::SumWeighted, 2.0, {}}, kTol));
  CHECK_FALSE(
      existence_check(below, origin, {ExistenceFamily::LinearForm, 3.0, {1.0, 1.0}}, kTol));
  CHECK_FALSE(
      existence_check(below, origin, {ExistenceFamily::WeightedForm, 0.25, {1.0, 1.0}}, kTol));

  SUBCASE("four families answer as one") {
    for (std::uint64_t seed = 600; seed < 650; ++seed) {
      const std::size_t ell = 2 + seed % 3;
      const PointCloud random = gen_random(10, ell, seed, RandomDistribution::Gaussian, kTol);
      Rng rng(seed + 1);
      const Vec reference = rng.gaussian_vec(ell);
      const ExistenceEquivalence eq =
          existence_equivalence(random, reference, Vec(ell, 1.0), Vec(ell, 1.0), 1.0, kTol);
      CHECK(eq.consistent());
    }
  }
}

TEST_CASE("proper efficiency with convex certificates matches the trade-off route") {
  const PointCloud pair = cloud_of({{0.0, 0.0}, {-1.0, 3.0}});
  const auto ni = ni_proper_min_set(pair, kTol);
  REQUIRE(ni.size() == 2);

  const PointCloud single = cloud_of({{4.0, 4.0}});
  CHECK(ni_proper_min_set(single, kTol).size() == 1);

  for (std::uint64_t seed = 700; seed < 720; ++seed) {
    const std::size_t ell = 2 + seed % 3;
    const PointCloud cloud = gen_random(15, ell, seed, RandomDistribution::Gaussian, kTol);
    std::vector<std::size_t> ni_indices;
    for (const GminEntry& e : ni_proper_min_set(cloud, kTol)) ni_indices.push_back(e.index);
    CHECK(ni_indices == gmin_indices(cloud));
    CHECK(ni_indices == min_set(cloud, DominationOracle::orthant_closed(ell), kTol));
  }
}

TEST_CASE("adding orthant-shifted points never changes the proper set") {
  const PointCloud pair = cloud_of({{0.0, 0.0}, {-1.0, 3.0}});
  CHECK(plus_orthant_invariance(pair, 5, 1, kTol).passed());

  for (std::uint64_t seed = 800; seed < 900; ++seed) {
    const std::size_t ell = 2 + seed % 3;
    const PointCloud cloud = gen_random(12, ell, seed, RandomDistribution::Gaussian, kTol);
    const auto report = plus_orthant_invariance(cloud, 8, seed, kTol);
    CHECK(report.passed());
  }
}
