#include "fixpoint/metric.hpp"

#include <cmath>

#include "fixpoint/errors.hpp"

namespace fixpoint {

std::string metric_kind_name(MetricKind kind) {
  switch (kind) {
    case MetricKind::AbsoluteDifference: return "absolute-difference";
    case MetricKind::Taxicab: return "taxicab";
    case MetricKind::Euclidean: return "euclidean";
    case MetricKind::Discrete: return "discrete";
  }
  return "unknown";
}

std::optional<MetricKind> metric_kind_from_name(const std::string& name) {
  if (name == "absolute-difference") return MetricKind::AbsoluteDifference;
  if (name == "taxicab") return MetricKind::Taxicab;
  if (name == "euclidean") return MetricKind::Euclidean;
  if (name == "discrete") return MetricKind::Discrete;
  return std::nullopt;
}

double MetricSpace::distance(const Point& a, const Point& b) const {
  switch (metric) {
    case MetricKind::AbsoluteDifference:
      return std::fabs(a.as_scalar() - b.as_scalar());
    case MetricKind::Taxicab: {
      const auto& [a1, a2] = a.as_pair();
      const auto& [b1, b2] = b.as_pair();
      return std::fabs(a1 - b1) + std::fabs(a2 - b2);
    }
    case MetricKind::Euclidean: {
      const auto& [a1, a2] = a.as_pair();
      const auto& [b1, b2] = b.as_pair();
      return std::hypot(a1 - b1, a2 - b2);
    }
    case MetricKind::Discrete: {
      const bool same_kind = (a.is_scalar() && b.is_scalar()) ||
                             (a.is_pair() && b.is_pair()) ||
                             (a.is_label() && b.is_label());
      if (!same_kind) {
        throw DomainMismatchError("discrete metric needs points of one kind");
      }
      return a == b ? 0.0 : 1.0;
    }
  }
  throw DomainError("unhandled metric kind");
}

namespace {

std::vector<Point> stride_down(const std::vector<Point>& points, std::size_t cap) {
  if (points.size() <= cap) return points;
  std::vector<Point> out;
  out.reserve(cap);
  const double step = static_cast<double>(points.size() - 1) / (cap - 1);
  for (std::size_t i = 0; i < cap; ++i) {
    out.push_back(points[static_cast<std::size_t>(std::llround(i * step))]);
  }
  return out;
}

}  // namespace

std::vector<AxiomReport> check_metric_axioms_on(
    const std::vector<Point>& points,
    const std::function<double(const Point&, const Point&)>& distance) {
  AxiomReport nonneg;
  nonneg.axiom = "non-negativity";
  AxiomReport sym;
  sym.axiom = "symmetry";
  AxiomReport ident;
  ident.axiom = "identity";
  AxiomReport tri;
  tri.axiom = "triangle";

  for (const auto& a : points) {
    for (const auto& b : points) {
      const double dab = distance(a, b);
      if (nonneg.pass && dab < 0.0) {
        nonneg.pass = false;
        nonneg.witness_points = {a, b};
        nonneg.violation = -dab;
      }
      if (sym.pass) {
        const double dba = distance(b, a);
        if (std::fabs(dab - dba) > tol::strict_margin) {
          sym.pass = false;
          sym.witness_points = {a, b};
          sym.violation = std::fabs(dab - dba);
        }
      }
      if (ident.pass) {
        const bool same = a == b;
        if (same && dab != 0.0) {
          ident.pass = false;
          ident.witness_points = {a, b};
          ident.violation = std::fabs(dab);
          ident.note = "d(x, x) != 0";
        } else if (!same && dab == 0.0 && !almost_equal(a, b)) {
          ident.pass = false;
          ident.witness_points = {a, b};
          ident.violation = 0.0;
          ident.note = "d(x, y) == 0 for distinct points";
        }
      }
    }
  }

  // Cubic pass; callers keep `points` to ~100 entries.
  const auto tri_points = stride_down(points, 100);
  for (const auto& a : tri_points) {
    for (const auto& b : tri_points) {
      const double dab = distance(a, b);
      for (const auto& c : tri_points) {
        const double excess = dab - (distance(a, c) + distance(c, b));
        if (excess > tol::triangle && (!tri.pass ? excess > tri.violation : true)) {
          tri.pass = false;
          tri.witness_points = {a, b, c};
          tri.violation = excess;
        }
      }
    }
  }

  return {nonneg, sym, ident, tri};
}

std::vector<AxiomReport> check_metric_axioms(const MetricSpace& space,
                                             int sample_size) {
  auto pts = space.domain.is_finite() ? space.domain.points()
                                      : space.domain.sample(sample_size);
  pts = stride_down(pts, static_cast<std::size_t>(sample_size));
  return check_metric_axioms_on(
      pts, [&](const Point& a, const Point& b) { return space.distance(a, b); });
}

}  // namespace fixpoint
