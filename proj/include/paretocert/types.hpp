#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace paretocert {

inline constexpr const char* kVersion = "0.1.0";

// Multiplicative slack applied wherever a constant must satisfy a strict
// inequality in exact arithmetic.
inline constexpr double kStrictMargin = 1e-6;

using Vec = std::vector<double>;
using Matrix = std::vector<Vec>;

/// Slack threshold separating strict from non-strict inequalities.
/// Constant within one analysis run.
struct Tolerance {
  double tau = 1e-9;

  Tolerance() = default;
  explicit Tolerance(double t) : tau(t) {
    if (!(t > 0.0)) throw std::invalid_argument("Tolerance: tau must be positive");
  }
};

/// Thrown when a constructed certificate fails its own verification step.
/// Reaching this is an internal-consistency failure, not a user error.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const Vec& a) {
  double s = 0.0;
  for (double x : a) s += x * x;
  return std::sqrt(s);
}

inline bool all_finite(const Vec& a) {
  for (double x : a)
    if (!std::isfinite(x)) return false;
  return true;
}

inline void require_point(const Vec& y, std::size_t ell, const char* where) {
  if (y.size() != ell)
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (got " +
                                std::to_string(y.size()) + ", expected " + std::to_string(ell) + ")");
  if (!all_finite(y)) throw std::invalid_argument(std::string(where) + ": non-finite coordinate");
}

inline void require_outcome_dim(std::size_t ell, const char* where) {
  if (ell < 2) throw std::invalid_argument(std::string(where) + ": outcome dimension must be >= 2");
}

inline bool strictly_positive(const Vec& v, double tau) {
  for (double x : v)
    if (!(x > tau)) return false;
  return true;
}

}  // namespace paretocert
