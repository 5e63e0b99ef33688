#pragma once

#include <variant>
#include <vector>

#include "fixpoint/constants.hpp"
#include "fixpoint/point.hpp"

namespace fixpoint {

/// A bounded real interval with independently open or closed endpoints.
struct Interval {
  double lower = 0.0;
  double upper = 1.0;
  bool lower_open = false;
  bool upper_open = false;
  /// Default number of sample points when none is given explicitly.
  int grid_resolution = default_resolution;
};

/// The carrier set of a space: an explicit finite list of points or an
/// interval of reals.
class Domain {
 public:
  /// Finite domain.  Throws ValidationError on empty input or duplicates
  /// (exact equality) and on mixed point alternatives.
  static Domain finite(std::vector<Point> points);

  /// Interval domain.  Throws ValidationError unless lower < upper, both
  /// finite, and grid_resolution >= 2.
  static Domain interval(Interval spec);

  bool is_finite() const noexcept { return std::holds_alternative<Finite>(rep_); }
  bool is_interval() const noexcept { return std::holds_alternative<Interval>(rep_); }

  const std::vector<Point>& points() const;   ///< finite domains only
  const Interval& interval_spec() const;      ///< interval domains only

  /// Membership test.  Open endpoints of intervals are excluded exactly.
  bool contains(const Point& p) const;

  /// Membership in the closure (interval endpoints allowed even when open
  /// below/above; identical to contains() for finite domains).  Used to test
  /// whether images of maps stay within the ambient set.
  bool in_hull(const Point& p, double tolerance = tol::point_equality) const;

  /// Deterministic sample of the domain.  Finite domains return their points
  /// in listed order regardless of `resolution`.  Intervals return
  /// `resolution` equally spaced scalars; each open endpoint is moved inward
  /// by (upper - lower) / (10 * resolution) so every sample is a member.
  std::vector<Point> sample(int resolution) const;

  /// sample() with the domain's own default resolution.
  std::vector<Point> sample() const;

 private:
  struct Finite {
    std::vector<Point> points;
  };

  explicit Domain(std::variant<Finite, Interval> rep) : rep_(std::move(rep)) {}

  std::variant<Finite, Interval> rep_;
};

}  // namespace fixpoint
