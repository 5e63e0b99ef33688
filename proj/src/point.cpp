#include "fixpoint/point.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "fixpoint/errors.hpp"

namespace fixpoint {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be finite");
  }
}

}  // namespace

Point Point::scalar(double value) {
  require_finite(value, "scalar point");
  return Point(value);
}

Point Point::pair(double first, double second) {
  require_finite(first, "pair coordinate");
  require_finite(second, "pair coordinate");
  return Point(Pair{first, second});
}

Point Point::label(std::string name) { return Point(Label{std::move(name)}); }

double Point::as_scalar() const {
  if (const auto* s = std::get_if<Scalar>(&value_)) return *s;
  throw DomainMismatchError("point is not a scalar");
}

const Point::Pair& Point::as_pair() const {
  if (const auto* p = std::get_if<Pair>(&value_)) return *p;
  throw DomainMismatchError("point is not a pair");
}

const Point::Label& Point::as_label() const {
  if (const auto* l = std::get_if<Label>(&value_)) return *l;
  throw DomainMismatchError("point is not a label");
}

std::string format_double(double v) {
  // Shortest decimal that round-trips; keeps reports stable across platforms.
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string Point::to_string() const {
  if (is_scalar()) return format_double(as_scalar());
  if (is_pair()) {
    const auto& [a, b] = as_pair();
    return "(" + format_double(a) + ", " + format_double(b) + ")";
  }
  return as_label();
}

bool almost_equal(const Point& a, const Point& b, double tolerance) {
  if (a.is_scalar() && b.is_scalar()) {
    return std::fabs(a.as_scalar() - b.as_scalar()) <= tolerance;
  }
  if (a.is_pair() && b.is_pair()) {
    return std::fabs(a.as_pair().first - b.as_pair().first) <= tolerance &&
           std::fabs(a.as_pair().second - b.as_pair().second) <= tolerance;
  }
  if (a.is_label() && b.is_label()) return a.as_label() == b.as_label();
  return false;
}

}  // namespace fixpoint
