#include "fixpoint/domain.hpp"

#include <algorithm>
#include <cmath>

#include "fixpoint/errors.hpp"

namespace fixpoint {

Domain Domain::finite(std::vector<Point> points) {
  if (points.empty()) throw ValidationError("finite domain must be non-empty");
  const bool scalar = points.front().is_scalar();
  const bool pair = points.front().is_pair();
  const bool label = points.front().is_label();
  for (const auto& p : points) {
    if (p.is_scalar() != scalar || p.is_pair() != pair || p.is_label() != label) {
      throw ValidationError("finite domain mixes point kinds");
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) {
        throw ValidationError("finite domain has duplicate point " +
                              points[i].to_string());
      }
    }
  }
  return Domain(Finite{std::move(points)});
}

Domain Domain::interval(Interval spec) {
  if (!std::isfinite(spec.lower) || !std::isfinite(spec.upper)) {
    throw ValidationError("interval endpoints must be finite");
  }
  if (!(spec.lower < spec.upper)) {
    throw ValidationError("interval requires lower < upper");
  }
  if (spec.grid_resolution < 2) {
    throw ValidationError("interval grid_resolution must be at least 2");
  }
  return Domain(spec);
}

const std::vector<Point>& Domain::points() const {
  if (const auto* f = std::get_if<Finite>(&rep_)) return f->points;
  throw DomainMismatchError("domain is not finite");
}

const Interval& Domain::interval_spec() const {
  if (const auto* iv = std::get_if<Interval>(&rep_)) return *iv;
  throw DomainMismatchError("domain is not an interval");
}

bool Domain::contains(const Point& p) const {
  if (const auto* f = std::get_if<Finite>(&rep_)) {
    return std::find(f->points.begin(), f->points.end(), p) != f->points.end();
  }
  const auto& iv = std::get<Interval>(rep_);
  if (!p.is_scalar()) return false;
  const double x = p.as_scalar();
  if (x < iv.lower || x > iv.upper) return false;
  if (iv.lower_open && x == iv.lower) return false;
  if (iv.upper_open && x == iv.upper) return false;
  return true;
}

bool Domain::in_hull(const Point& p, double tolerance) const {
  if (const auto* f = std::get_if<Finite>(&rep_)) {
    return std::any_of(f->points.begin(), f->points.end(),
                       [&](const Point& q) { return almost_equal(p, q, tolerance); });
  }
  const auto& iv = std::get<Interval>(rep_);
  if (!p.is_scalar()) return false;
  const double x = p.as_scalar();
  return x >= iv.lower - tolerance && x <= iv.upper + tolerance;
}

std::vector<Point> Domain::sample(int resolution) const {
  if (const auto* f = std::get_if<Finite>(&rep_)) return f->points;
  const auto& iv = std::get<Interval>(rep_);
  if (resolution < 2) throw ValidationError("sample resolution must be at least 2");
  const double inset = (iv.upper - iv.lower) / (10.0 * resolution);
  const double lo = iv.lower + (iv.lower_open ? inset : 0.0);
  const double hi = iv.upper - (iv.upper_open ? inset : 0.0);
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(resolution));
  const double step = (hi - lo) / (resolution - 1);
  for (int i = 0; i < resolution; ++i) {
    // Hit the last endpoint exactly rather than accumulating rounding error.
    const double x = (i == resolution - 1) ? hi : lo + step * i;
    out.push_back(Point::scalar(x));
  }
  return out;
}

std::vector<Point> Domain::sample() const {
  if (is_finite()) return points();
  return sample(interval_spec().grid_resolution);
}

}  // namespace fixpoint
