#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fixpoint/axiom_report.hpp"
#include "fixpoint/constants.hpp"
#include "fixpoint/domain.hpp"
#include "fixpoint/point.hpp"

namespace fixpoint {

/// Distance functions offered out of the box.
enum class MetricKind {
  AbsoluteDifference,  ///< |x - y| on scalars
  Taxicab,             ///< |x1 - y1| + |x2 - y2| on pairs
  Euclidean,           ///< sqrt((x1-y1)^2 + (x2-y2)^2) on pairs
  Discrete,            ///< 0 if equal (exact), 1 otherwise; any alternative
};

std::string metric_kind_name(MetricKind kind);
std::optional<MetricKind> metric_kind_from_name(const std::string& name);

/// A carrier set together with one of the built-in metrics.
struct MetricSpace {
  Domain domain;
  MetricKind metric = MetricKind::AbsoluteDifference;

  /// Evaluates the metric.  Throws DomainMismatchError when a point's
  /// alternative does not fit the metric (e.g. taxicab on scalars).
  double distance(const Point& a, const Point& b) const;
};

/// Checks non-negativity, symmetry, identity of indiscernibles, and the
/// triangle inequality on a sample of the space.  The triangle check strides
/// the sample down to at most 100 points so its cost stays cubic in a small
/// constant.  Returns one report per axiom, in the order listed above.
std::vector<AxiomReport> check_metric_axioms(const MetricSpace& space,
                                             int sample_size = 100);

/// Same checks against an arbitrary distance callable over explicit points;
/// lets callers audit hand-built distance tables.
std::vector<AxiomReport> check_metric_axioms_on(
    const std::vector<Point>& points,
    const std::function<double(const Point&, const Point&)>& distance);

}  // namespace fixpoint
