#include "fixpoint/maps.hpp"

#include <algorithm>
#include <cmath>

#include "fixpoint/errors.hpp"

namespace fixpoint {

bool region_contains(const Region& region, const Point& p) {
  if (const auto* iv = std::get_if<IntervalRegion>(&region)) {
    if (!p.is_scalar()) return false;
    const double x = p.as_scalar();
    if (x < iv->lower || x > iv->upper) return false;
    if (iv->lower_open && x == iv->lower) return false;
    if (iv->upper_open && x == iv->upper) return false;
    return true;
  }
  if (const auto* cr = std::get_if<ComparisonRegion>(&region)) {
    if (!p.is_pair()) return false;
    const auto& [x1, x2] = p.as_pair();
    switch (cr->cmp) {
      case Comparison::Equal: return x1 == x2;
      case Comparison::FirstLess: return x1 < x2;
      case Comparison::FirstGreater: return x1 > x2;
    }
    return false;
  }
  const auto& pl = std::get<PointListRegion>(region);
  return std::find(pl.points.begin(), pl.points.end(), p) != pl.points.end();
}

std::string region_to_string(const Region& region) {
  if (const auto* iv = std::get_if<IntervalRegion>(&region)) {
    return std::string(iv->lower_open ? "(" : "[") + format_double(iv->lower) +
           ", " + format_double(iv->upper) + (iv->upper_open ? ")" : "]");
  }
  if (const auto* cr = std::get_if<ComparisonRegion>(&region)) {
    switch (cr->cmp) {
      case Comparison::Equal: return "x1=x2";
      case Comparison::FirstLess: return "x1<x2";
      case Comparison::FirstGreater: return "x1>x2";
    }
  }
  const auto& pl = std::get<PointListRegion>(region);
  std::string out = "points";
  for (const auto& p : pl.points) out += " " + p.to_string();
  return out;
}

Point eval_expr(const MapExpr& expr, const Point& x) {
  if (const auto* c = std::get_if<ConstantExpr>(&expr)) return c->value;
  if (const auto* a = std::get_if<AffineExpr>(&expr)) {
    return Point::scalar(a->offset + a->slope * x.as_scalar());
  }
  if (std::holds_alternative<FirstAxisExpr>(expr)) {
    return Point::pair(x.as_pair().first, 0.0);
  }
  if (std::holds_alternative<SecondAxisExpr>(expr)) {
    return Point::pair(0.0, x.as_pair().second);
  }
  return x;  // IdentityExpr
}

std::string expr_to_string(const MapExpr& expr) {
  if (const auto* c = std::get_if<ConstantExpr>(&expr)) {
    return "const " + c->value.to_string();
  }
  if (const auto* a = std::get_if<AffineExpr>(&expr)) {
    return "affine " + format_double(a->offset) + " " + format_double(a->slope);
  }
  if (std::holds_alternative<FirstAxisExpr>(expr)) return "first-axis";
  if (std::holds_alternative<SecondAxisExpr>(expr)) return "second-axis";
  return "identity";
}

Point PiecewiseMap::operator()(const Point& x) const {
  for (const auto& clause : clauses_) {
    if (region_contains(clause.region, x)) return eval_expr(clause.expr, x);
  }
  throw ValidationError("map is not defined at " + x.to_string());
}

namespace {

/// Exact emptiness test for the intersection of two catalog regions.
bool regions_overlap(const Region& a, const Region& b) {
  const auto* ia = std::get_if<IntervalRegion>(&a);
  const auto* ib = std::get_if<IntervalRegion>(&b);
  if (ia && ib) {
    // Overlap iff some x satisfies both interval predicates.
    const double lo = std::max(ia->lower, ib->lower);
    const double hi = std::min(ia->upper, ib->upper);
    if (lo > hi) return false;
    if (lo < hi) return true;
    // Single touching point: it must be admitted by both sides.
    const bool a_admits = !(ia->lower_open && lo == ia->lower) &&
                          !(ia->upper_open && lo == ia->upper);
    const bool b_admits = !(ib->lower_open && lo == ib->lower) &&
                          !(ib->upper_open && lo == ib->upper);
    return a_admits && b_admits;
  }
  const auto* ca = std::get_if<ComparisonRegion>(&a);
  const auto* cb = std::get_if<ComparisonRegion>(&b);
  if (ca && cb) return ca->cmp == cb->cmp;  // distinct comparisons partition the plane
  // A point list overlaps another region iff one of its points is a member.
  if (const auto* pl = std::get_if<PointListRegion>(&a)) {
    return std::any_of(pl->points.begin(), pl->points.end(),
                       [&](const Point& p) { return region_contains(b, p); });
  }
  if (const auto* pl = std::get_if<PointListRegion>(&b)) {
    return std::any_of(pl->points.begin(), pl->points.end(),
                       [&](const Point& p) { return region_contains(a, p); });
  }
  return false;  // interval vs comparison: no point kind satisfies both
}

void validate_map(const PiecewiseMap& map, const MetricSpace& space,
                  const std::vector<Point>& samples, const std::string& name) {
  const auto& clauses = map.clauses();
  if (clauses.empty()) throw ValidationError(name + " has no clauses");
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    for (std::size_t j = i + 1; j < clauses.size(); ++j) {
      if (regions_overlap(clauses[i].region, clauses[j].region)) {
        throw ValidationError(name + " clauses overlap: " +
                              region_to_string(clauses[i].region) + " and " +
                              region_to_string(clauses[j].region));
      }
    }
  }
  for (const auto& x : samples) {
    int matches = 0;
    for (const auto& clause : clauses) {
      if (region_contains(clause.region, x)) ++matches;
    }
    if (matches == 0) {
      throw ValidationError(name + " does not cover " + x.to_string());
    }
    if (matches > 1) {
      throw ValidationError(name + " matches " + x.to_string() +
                            " with more than one clause");
    }
    const Point image = map(x);
    if (!space.domain.in_hull(image)) {
      throw ValidationError(name + " maps " + x.to_string() + " to " +
                            image.to_string() + " outside the domain");
    }
  }
}

}  // namespace

void validate_mapping_pair(const MappingPair& pair, int resolution) {
  const auto samples = pair.space.domain.is_finite()
                           ? pair.space.domain.points()
                           : pair.space.domain.sample(resolution);
  validate_map(pair.f, pair.space, samples, "f");
  validate_map(pair.g, pair.space, samples, "g");
}

}  // namespace fixpoint
