#include "paretocert/scalarize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace paretocert {

namespace {

bool is_member(const std::vector<std::size_t>& set, std::size_t index) {
  return std::find(set.begin(), set.end(), index) != set.end();
}

Tradeoff require_proper(const PointCloud& cloud, std::size_t index, Tolerance tol,
                        const char* where) {
  const Tradeoff t = geoffrion_minimal_tradeoff(cloud, index, tol);
  if (!t.finite)
    throw std::invalid_argument(std::string(where) +
                                ": not properly efficient; minimal trade-off constant is infinite");
  return t;
}

}  // namespace

Certificate build_proper_functional(const PointCloud& cloud, std::size_t index,
                                    const Vec& direction, Tolerance tol) {
  const Tradeoff t = require_proper(cloud, index, tol, "build_proper_functional");
  const std::size_t ell = cloud.dim();
  require_point(direction, ell, "build_proper_functional(direction)");
  if (!strictly_positive(direction, tol.tau))
    throw std::invalid_argument("build_proper_functional: direction must be strictly positive");

  const double bound = t.value > 0.0 ? t.value * (1.0 + kStrictMargin) : 1.0;
  SumForm form = make_sum_form(bound, direction, ell, tol);

  const Vec& base = cloud.point(index);
  Vec diff(ell);
  double at_point = 0.0;
  for (std::size_t c = 0; c < cloud.size(); ++c) {
    for (std::size_t r = 0; r < ell; ++r) diff[r] = cloud.point(c)[r] - base[r];
    const double value = eval_sum(form, diff);
    if (c == index) {
      at_point = value;
      if (!(std::abs(value) <= tol.tau))
        throw VerificationError("build_proper_functional: nonzero value at the certified point");
    } else if (!(value > tol.tau)) {
      throw VerificationError("build_proper_functional: certificate not strictly positive at " +
                              std::to_string(c));
    }
  }

  Certificate cert;
  cert.index = index;
  if (!cloud.labels().empty()) cert.label = cloud.labels()[index];
  cert.tradeoff_finite = true;
  cert.tradeoff = t.value;
  cert.sum_form = std::move(form);
  cert.verified_min = at_point;
  return cert;
}

std::vector<std::size_t> argmin_scan(const PointCloud& cloud, const Functional& f, Tolerance tol) {
  Vec values(cloud.size());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    values[i] = f(cloud.point(i));
    best = std::min(best, values[i]);
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cloud.size(); ++i)
    if (values[i] <= best + tol.tau) out.push_back(i);
  return out;
}

std::vector<std::size_t> cone_scalarization_argmin(const PointCloud& cloud, const Vec& anchor,
                                                   const HalfspaceCone& cone, const Vec& direction,
                                                   Tolerance tol) {
  if (cone.dim() != cloud.dim())
    throw std::invalid_argument("cone_scalarization_argmin: dimension mismatch");
  for (const Vec& row : cone.rows)
    for (double entry : row)
      if (!(entry > tol.tau))
        throw std::invalid_argument(
            "cone_scalarization_argmin: cone does not strictly contain the orthant");
  // make_cone_form rejects directions outside the cone's interior.
  const GerstewitzForm form = make_cone_form(cone, anchor, direction, tol);

  const std::vector<std::size_t> argmin = argmin_scan(cloud, as_functional(form), tol);
  std::vector<std::size_t> proper;
  for (const GminEntry& e : geoffrion_min_set(cloud, tol)) proper.push_back(e.index);
  for (std::size_t i : argmin)
    if (!is_member(proper, i))
      throw VerificationError(
          "cone_scalarization_argmin: minimizer outside the properly efficient set");
  return argmin;
}

Certificate unique_minimizer_certificate(const PointCloud& cloud, std::size_t index,
                                         const Vec& direction, Tolerance tol) {
  const Tradeoff t = require_proper(cloud, index, tol, "unique_minimizer_certificate");
  const std::size_t ell = cloud.dim();
  const double weight =
      static_cast<double>(ell) * (t.value > 0.0 ? t.value * (1.0 + kStrictMargin) : 1.0);
  const HalfspaceCone cone = make_sum_weighted_cone(weight, ell);
  GerstewitzForm form = make_cone_form(cone, cloud.point(index), direction, tol);

  const std::vector<std::size_t> argmin = argmin_scan(cloud, as_functional(form), tol);
  if (argmin.size() != 1 || argmin.front() != index)
    throw VerificationError("unique_minimizer_certificate: minimizer not unique at the point");
  const double at_point = eval(form, cloud.point(index));
  if (!(std::abs(at_point) <= tol.tau))
    throw VerificationError("unique_minimizer_certificate: nonzero minimum value");

  Certificate cert;
  cert.index = index;
  if (!cloud.labels().empty()) cert.label = cloud.labels()[index];
  cert.tradeoff_finite = true;
  cert.tradeoff = t.value;
  cert.cone_param = ConeParam{ConeParam::Family::SumWeighted, weight, {}};
  cert.point_form = std::move(form);
  cert.verified_min = at_point;
  return cert;
}

std::vector<std::size_t> linear_scalarization(const PointCloud& cloud, const Vec& weights,
                                              Tolerance tol) {
  require_point(weights, cloud.dim(), "linear_scalarization(weights)");
  if (!strictly_positive(weights, 0.0))
    throw std::invalid_argument("linear_scalarization: weights must be strictly positive");
  const std::vector<std::size_t> argmin =
      argmin_scan(cloud, [&](const Vec& y) { return dot(weights, y); }, tol);
  std::vector<std::size_t> proper;
  for (const GminEntry& e : geoffrion_min_set(cloud, tol)) proper.push_back(e.index);
  for (std::size_t i : argmin)
    if (!is_member(proper, i))
      throw VerificationError("linear_scalarization: minimizer outside the properly efficient set");
  return argmin;
}

}  // namespace paretocert
