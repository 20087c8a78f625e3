#pragma once

#include <cstdint>
#include <functional>
#include <limits>

#include "paretocert/cones.hpp"
#include "paretocert/rng.hpp"
#include "paretocert/types.hpp"

namespace paretocert {

/// Translation-invariant scalarizer for a polyhedral set H = {z : rows.z >= offsets}:
/// evaluates inf{t : y in anchor - H + t*direction}, which reduces to
/// max_j (rows_j.(y - anchor) + offsets_j) / (rows_j.direction).
/// Finite-valued because every denominator is required to be positive.
struct GerstewitzForm {
  Matrix rows;
  Vec offsets;    // all zero when H is a cone
  Vec anchor;
  Vec direction;
  Vec denoms;     // cached rows_j . direction

  std::size_t dim() const { return anchor.size(); }
};

GerstewitzForm make_form(Matrix rows, Vec offsets, Vec anchor, Vec direction, Tolerance tol);

/// Form over a cone (offsets = 0).
GerstewitzForm make_cone_form(const HalfspaceCone& cone, Vec anchor, Vec direction, Tolerance tol);

double eval(const GerstewitzForm& form, const Vec& y);

/// Sum of the trade-off slice-closure forms, one per axis, sharing one
/// strictly positive direction. Sublinear and strictly orthant-monotone.
struct SumForm {
  std::vector<GerstewitzForm> terms;
  double bound;
  Vec direction;

  std::size_t dim() const { return direction.size(); }
};

SumForm make_sum_form(double bound, Vec direction, std::size_t ell, Tolerance tol);
double eval_sum(const SumForm& form, const Vec& y);

using Functional = std::function<double(const Vec&)>;

inline Functional as_functional(const GerstewitzForm& form) {
  return [form](const Vec& y) { return eval(form, y); };
}
inline Functional as_functional(const SumForm& form) {
  return [form](const Vec& y) { return eval_sum(form, y); };
}

enum class Strictness { Plain, Strict };

/// Samples a nonzero direction from a domination set (unit scale).
using DirectionSampler = std::function<Vec(Rng&)>;

DirectionSampler orthant_direction_sampler(std::size_t ell);
DirectionSampler cone_direction_sampler(HalfspaceCone cone, Tolerance tol);
DirectionSampler union_closure_direction_sampler(TradeoffUnionCone cone, Tolerance tol);

struct MonotonicityReport {
  std::size_t samples = 0;
  std::size_t violations = 0;
  double worst_margin = std::numeric_limits<double>::infinity();  // min of f(y+d) - f(y)
  std::uint64_t seed = 0;

  bool passed() const { return violations == 0; }
};

/// Sampled monotonicity check: draws pairs (y, y + d) with d from the
/// domination set and counts order violations. Certification by sampling, not
/// proof; seed and counts are part of the report.
MonotonicityReport check_monotone(const Functional& f, std::size_t ell, Strictness strictness,
                                  const DirectionSampler& sample_direction, std::size_t n,
                                  std::uint64_t seed, Tolerance tol);

struct SublinearityReport {
  std::size_t samples = 0;
  std::size_t scaling_violations = 0;
  std::size_t subadditivity_violations = 0;
  std::uint64_t seed = 0;

  bool passed() const { return scaling_violations == 0 && subadditivity_violations == 0; }
};

/// Requires a centered form (anchor = 0, offsets = 0).
SublinearityReport check_sublinear(const GerstewitzForm& form, std::size_t n, std::uint64_t seed,
                                   Tolerance tol);
SublinearityReport check_sublinear(const SumForm& form, std::size_t n, std::uint64_t seed,
                                   Tolerance tol);

/// Interior test through the form's sign: y is interior to the form's cone iff
/// eval at (anchor - y) is negative. Agrees with contains_interior on the
/// full-dimensional family cones.
bool interior_by_sign(const GerstewitzForm& form, const Vec& y, Tolerance tol);

}  // namespace paretocert
