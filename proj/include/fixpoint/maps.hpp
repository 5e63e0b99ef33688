#pragma once

#include <string>
#include <variant>
#include <vector>

#include "fixpoint/constants.hpp"
#include "fixpoint/metric.hpp"
#include "fixpoint/point.hpp"

namespace fixpoint {

/// Region predicates a piecewise clause can match on. ////////////////////////

/// Scalar interval with independently open or closed endpoints.
struct IntervalRegion {
  double lower = 0.0;
  double upper = 0.0;
  bool lower_open = false;
  bool upper_open = false;
};

/// Coordinate comparison on pair points.
enum class Comparison { Equal, FirstLess, FirstGreater };

struct ComparisonRegion {
  Comparison cmp = Comparison::Equal;
};

/// Explicit point list, matched by exact equality.
struct PointListRegion {
  std::vector<Point> points;
};

using Region = std::variant<IntervalRegion, ComparisonRegion, PointListRegion>;

bool region_contains(const Region& region, const Point& p);
std::string region_to_string(const Region& region);

/// Expressions a clause can map matched points through. //////////////////////

struct ConstantExpr {
  Point value = Point::scalar(0.0);
};

/// x -> offset + slope * x on scalars.
struct AffineExpr {
  double offset = 0.0;
  double slope = 1.0;
};

/// (x1, x2) -> (x1, 0)
struct FirstAxisExpr {};

/// (x1, x2) -> (0, x2)
struct SecondAxisExpr {};

struct IdentityExpr {};

using MapExpr =
    std::variant<ConstantExpr, AffineExpr, FirstAxisExpr, SecondAxisExpr, IdentityExpr>;

Point eval_expr(const MapExpr& expr, const Point& x);
std::string expr_to_string(const MapExpr& expr);

/// One row of a piecewise definition table.
struct Clause {
  Region region;
  MapExpr expr;
};

/// A self-map defined by an ordered table of disjoint clauses.
class PiecewiseMap {
 public:
  PiecewiseMap() = default;
  explicit PiecewiseMap(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {}

  /// Applies the unique matching clause; throws ValidationError when no clause
  /// matches (the map is not total at x).
  Point operator()(const Point& x) const;

  const std::vector<Clause>& clauses() const noexcept { return clauses_; }

 private:
  std::vector<Clause> clauses_;
};

/// Two self-maps sharing one metric space.
struct MappingPair {
  MetricSpace space;
  PiecewiseMap f;
  PiecewiseMap g;
};

/// Structural validation of a mapping pair:
///  - clause regions of f and of g are pairwise disjoint (decided exactly from
///    the region shapes, not by sampling),
///  - both maps match every sampled domain point by exactly one clause,
///  - both images stay inside the domain hull at every sampled point.
/// Throws ValidationError describing the first defect.
void validate_mapping_pair(const MappingPair& pair,
                           int resolution = default_resolution);

}  // namespace fixpoint
