#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "paretocert/cones.hpp"
#include "paretocert/gerstewitz.hpp"
#include "paretocert/types.hpp"

namespace paretocert {

/// Finite outcome set with set semantics: points closer than tau in every
/// coordinate are merged at construction.
class PointCloud {
 public:
  static PointCloud from_points(Matrix points, Tolerance tol,
                                std::vector<std::string> labels = {});

  const Matrix& points() const { return points_; }
  const Vec& point(std::size_t i) const { return points_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return points_.size(); }
  std::size_t dim() const { return ell_; }
  std::size_t merged_count() const { return merged_; }

  /// Index of the point matching y in every coordinate within tau, if any.
  std::optional<std::size_t> find(const Vec& y, Tolerance tol) const;

 private:
  PointCloud() = default;
  Matrix points_;
  std::vector<std::string> labels_;
  std::size_t ell_ = 0;
  std::size_t merged_ = 0;
};

/// Which difference vectors count as dominating in min_set.
class DominationOracle {
 public:
  static DominationOracle orthant_closed(std::size_t ell);
  static DominationOracle orthant_open(std::size_t ell);
  static DominationOracle cone_closed(HalfspaceCone cone);
  static DominationOracle cone_open(HalfspaceCone cone);
  static DominationOracle union_open(double bound, std::size_t ell);
  static DominationOracle union_closure(double bound, std::size_t ell);

  /// Membership of a (nonzero) difference vector.
  bool contains(const Vec& diff, Tolerance tol) const;
  std::size_t dim() const { return ell_; }

 private:
  enum class Kind { OrthantClosed, OrthantOpen, ConeClosed, ConeOpen, UnionOpen, UnionClosure };
  DominationOracle(Kind kind, std::size_t ell) : kind_(kind), ell_(ell) {}
  Kind kind_;
  std::size_t ell_;
  std::optional<HalfspaceCone> cone_;
  std::optional<TradeoffUnionCone> union_;
};

/// Indices i with no other point j such that point_i - point_j dominates.
std::vector<std::size_t> min_set(const PointCloud& cloud, const DominationOracle& oracle,
                                 Tolerance tol);

/// Minimal trade-off constant of one point; infinite when some competitor
/// improves a coordinate with no compensating loss.
struct Tradeoff {
  bool finite = true;
  double value = 0.0;  // meaningful only when finite

  static Tradeoff infinite() { return Tradeoff{false, 0.0}; }
};

Tradeoff geoffrion_minimal_tradeoff(const PointCloud& cloud, std::size_t index, Tolerance tol);

struct GminEntry {
  std::size_t index;
  double tradeoff;  // finite by construction
};

/// All points with a finite minimal trade-off constant.
std::vector<GminEntry> geoffrion_min_set(const PointCloud& cloud, Tolerance tol);

std::vector<std::size_t> geoffrion_min_via_union(const PointCloud& cloud, double bound,
                                                 Tolerance tol);
std::vector<std::size_t> geoffrion_min_via_cone(const PointCloud& cloud, const HalfspaceCone& cone,
                                                Tolerance tol);

/// Cone-family parameter attached to a certificate.
struct ConeParam {
  enum class Family { SumWeighted, LinearForm, WeightedForm };
  Family family = Family::SumWeighted;
  double value = 0.0;  // weight p, scale m, or eps
  Vec base;            // s or w when applicable
};

/// Per-point proof object. Fail-closed: constructors verify before returning.
struct Certificate {
  std::size_t index = 0;
  std::string label;
  bool tradeoff_finite = true;
  double tradeoff = 0.0;
  std::optional<ConeParam> cone_param;
  std::optional<GerstewitzForm> point_form;
  std::optional<SumForm> sum_form;
  double verified_min = 0.0;
};

/// Verified enclosing-cone certificate: a sum-weighted cone whose efficient
/// set provably contains the point.
Certificate henig_certificate(const PointCloud& cloud, std::size_t index, Tolerance tol);

/// Projecting-cone criterion over the shifted competitors, decided exactly by
/// small-scale vertex enumeration. Restricted to dim <= 6 and size <= 64.
bool benson_check(const PointCloud& cloud, std::size_t index, Tolerance tol);

enum class ExistenceFamily { TradeoffUnion, SumWeighted, LinearForm, WeightedForm };

struct ExistenceQuery {
  ExistenceFamily family = ExistenceFamily::TradeoffUnion;
  double param = 1.0;  // bound K, weight p, scale m, or eps
  Vec base;            // s or w when applicable
};

/// True iff no point of the cloud lands in (reference - family member):
/// open membership for the trade-off union, closed-minus-origin for cones.
bool existence_check(const PointCloud& cloud, const Vec& reference, const ExistenceQuery& query,
                     Tolerance tol);

struct ExistenceEquivalence {
  bool exists = false;
  bool via_union = false;
  bool via_sum_weighted = false;
  bool via_linear_form = false;
  bool via_weighted_form = false;
  double bound_used = 0.0;

  bool consistent() const {
    return via_union == exists && via_sum_weighted == exists && via_linear_form == exists &&
           via_weighted_form == exists;
  }
};

/// Searches each family's parameter along the constructive inclusion constants
/// and checks that all four answers coincide.
ExistenceEquivalence existence_equivalence(const PointCloud& cloud, const Vec& reference,
                                           const Vec& s, const Vec& w, double min_bound,
                                           Tolerance tol);

/// For finite (hence closed) clouds this equals geoffrion_min_set; each entry
/// is re-verified against a sum-form certificate before being returned.
std::vector<GminEntry> ni_proper_min_set(const PointCloud& cloud, Tolerance tol);

struct OrthantInvarianceReport {
  std::size_t added = 0;
  bool index_set_changed = false;
  std::size_t added_in_min_set = 0;
  std::uint64_t seed = 0;

  bool passed() const { return !index_set_changed && added_in_min_set == 0; }
};

/// Augments the cloud with points shifted into the orthant and checks that the
/// properly efficient set is untouched.
OrthantInvarianceReport plus_orthant_invariance(const PointCloud& cloud, std::size_t n_extra,
                                                std::uint64_t seed, Tolerance tol);

}  // namespace paretocert
