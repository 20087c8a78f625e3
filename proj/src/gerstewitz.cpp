#include "paretocert/gerstewitz.hpp"

#include <algorithm>
#include <cmath>

namespace paretocert {

namespace {

// Verification slack for the sublinearity identities, fixed by contract.
constexpr double kSublinearSlack = 1e-9;

}  // namespace

GerstewitzForm make_form(Matrix rows, Vec offsets, Vec anchor, Vec direction, Tolerance tol) {
  if (rows.empty()) throw std::invalid_argument("make_form: empty row matrix");
  const std::size_t ell = rows.front().size();
  require_outcome_dim(ell, "make_form");
  for (const Vec& row : rows)
    if (row.size() != ell) throw std::invalid_argument("make_form: ragged row matrix");
  if (offsets.size() != rows.size())
    throw std::invalid_argument("make_form: offsets size must match row count");
  require_point(anchor, ell, "make_form(anchor)");
  require_point(direction, ell, "make_form(direction)");

  Vec denoms(rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    denoms[j] = dot(rows[j], direction);
    if (!(denoms[j] > tol.tau))
      throw std::invalid_argument("make_form: direction not interior to recession cone");
  }
  return GerstewitzForm{std::move(rows), std::move(offsets), std::move(anchor),
                        std::move(direction), std::move(denoms)};
}

GerstewitzForm make_cone_form(const HalfspaceCone& cone, Vec anchor, Vec direction, Tolerance tol) {
  return make_form(cone.rows, Vec(cone.rows.size(), 0.0), std::move(anchor), std::move(direction),
                   tol);
}

double eval(const GerstewitzForm& form, const Vec& y) {
  require_point(y, form.dim(), "eval");
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < form.rows.size(); ++j) {
    double num = form.offsets[j];
    const Vec& row = form.rows[j];
    for (std::size_t r = 0; r < row.size(); ++r) num += row[r] * (y[r] - form.anchor[r]);
    best = std::max(best, num / form.denoms[j]);
  }
  return best;
}

SumForm make_sum_form(double bound, Vec direction, std::size_t ell, Tolerance tol) {
  require_outcome_dim(ell, "make_sum_form");
  if (!(bound > 0.0)) throw std::invalid_argument("make_sum_form: bound must be positive");
  require_point(direction, ell, "make_sum_form(direction)");
  if (!strictly_positive(direction, tol.tau))
    throw std::invalid_argument("make_sum_form: direction must be strictly positive");

  SumForm out;
  out.bound = bound;
  out.direction = direction;
  out.terms.reserve(ell);
  for (std::size_t axis = 0; axis < ell; ++axis)
    out.terms.push_back(
        make_cone_form(tradeoff_slice_closure(axis, bound, ell), Vec(ell, 0.0), direction, tol));
  return out;
}

double eval_sum(const SumForm& form, const Vec& y) {
  require_point(y, form.dim(), "eval_sum");
  double total = 0.0;
  for (const GerstewitzForm& term : form.terms) total += eval(term, y);
  return total;
}

DirectionSampler orthant_direction_sampler(std::size_t ell) {
  require_outcome_dim(ell, "orthant_direction_sampler");
  return [ell](Rng& rng) {
    Vec d = rng.unit_sphere(ell);
    for (double& x : d) x = std::abs(x);
    return d;
  };
}

DirectionSampler cone_direction_sampler(HalfspaceCone cone, Tolerance) {
  return [cone = std::move(cone)](Rng& rng) {
    for (std::size_t draws = 0; draws < 1000000; ++draws) {
      Vec d = rng.unit_sphere(cone.dim());
      bool inside = true;
      for (const Vec& row : cone.rows)
        if (dot(row, d) < 0.0) {
          inside = false;
          break;
        }
      if (inside) return d;
    }
    throw std::runtime_error("cone_direction_sampler: rejection budget exceeded");
  };
}

DirectionSampler union_closure_direction_sampler(TradeoffUnionCone cone, Tolerance tol) {
  return [cone, tol](Rng& rng) {
    for (std::size_t draws = 0; draws < 1000000; ++draws) {
      Vec d = rng.unit_sphere(cone.dim);
      if (union_contains(cone, d, UnionMode::Closure, tol)) return d;
    }
    throw std::runtime_error("union_closure_direction_sampler: rejection budget exceeded");
  };
}

MonotonicityReport check_monotone(const Functional& f, std::size_t ell, Strictness strictness,
                                  const DirectionSampler& sample_direction, std::size_t n,
                                  std::uint64_t seed, Tolerance tol) {
  if (n < 1) throw std::invalid_argument("check_monotone: need at least one sample");
  Rng rng(seed);
  MonotonicityReport report;
  report.seed = seed;
  for (std::size_t i = 0; i < n; ++i) {
    Vec y = rng.gaussian_vec(ell);
    Vec d = sample_direction(rng);
    const double scale = rng.uniform(0.1, 3.0);
    Vec y2 = y;
    for (std::size_t r = 0; r < ell; ++r) y2[r] += scale * d[r];
    const double margin = f(y2) - f(y);
    report.worst_margin = std::min(report.worst_margin, margin);
    const bool violated =
        strictness == Strictness::Strict ? (margin <= tol.tau) : (margin < -tol.tau);
    if (violated) ++report.violations;
  }
  report.samples = n;
  return report;
}

namespace {

SublinearityReport run_sublinear(const Functional& f, std::size_t ell, std::size_t n,
                                 std::uint64_t seed) {
  SublinearityReport report;
  report.seed = seed;
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    Vec y = rng.gaussian_vec(ell);
    Vec z = rng.gaussian_vec(ell);
    const double lambda = rng.uniform(0.0, 4.0);
    Vec ly(ell);
    Vec yz(ell);
    for (std::size_t r = 0; r < ell; ++r) {
      ly[r] = lambda * y[r];
      yz[r] = y[r] + z[r];
    }
    const double fy = f(y);
    const double scale_ref = lambda * fy;
    const double scale_err = std::abs(f(ly) - scale_ref);
    if (scale_err > kSublinearSlack * std::max(1.0, std::abs(scale_ref)))
      ++report.scaling_violations;
    if (f(yz) > fy + f(z) + kSublinearSlack) ++report.subadditivity_violations;
  }
  report.samples = n;
  return report;
}

bool is_centered(const GerstewitzForm& form) {
  for (double a : form.anchor)
    if (a != 0.0) return false;
  for (double b : form.offsets)
    if (b != 0.0) return false;
  return true;
}

}  // namespace

SublinearityReport check_sublinear(const GerstewitzForm& form, std::size_t n, std::uint64_t seed,
                                   Tolerance) {
  if (!is_centered(form))
    throw std::invalid_argument("check_sublinear: form must have zero anchor and offsets");
  return run_sublinear(as_functional(form), form.dim(), n, seed);
}

SublinearityReport check_sublinear(const SumForm& form, std::size_t n, std::uint64_t seed,
                                   Tolerance) {
  return run_sublinear(as_functional(form), form.dim(), n, seed);
}

bool interior_by_sign(const GerstewitzForm& form, const Vec& y, Tolerance tol) {
  require_point(y, form.dim(), "interior_by_sign");
  Vec probe(form.dim());
  for (std::size_t r = 0; r < probe.size(); ++r) probe[r] = form.anchor[r] - y[r];
  return eval(form, probe) < -tol.tau;
}

}  // namespace paretocert
