#pragma once

#include <string>
#include <utility>
#include <variant>

#include "fixpoint/constants.hpp"

namespace fixpoint {

/// A point of a metric space: a real scalar, a pair of reals, or an opaque
/// label.  Scalars and coordinates are required to be finite.
class Point {
 public:
  using Scalar = double;
  using Pair = std::pair<double, double>;
  using Label = std::string;

  /// Builds a scalar point.  Throws DomainError on NaN/infinite input.
  static Point scalar(double value);

  /// Builds a planar point.  Throws DomainError on NaN/infinite coordinates.
  static Point pair(double first, double second);

  /// Builds a labelled point (for purely combinatorial spaces).
  static Point label(std::string name);

  bool is_scalar() const noexcept { return std::holds_alternative<Scalar>(value_); }
  bool is_pair() const noexcept { return std::holds_alternative<Pair>(value_); }
  bool is_label() const noexcept { return std::holds_alternative<Label>(value_); }

  /// Accessors throw DomainMismatchError when the alternative is wrong.
  double as_scalar() const;
  const Pair& as_pair() const;
  const Label& as_label() const;

  /// Exact structural equality (same alternative, identical representation).
  friend bool operator==(const Point& a, const Point& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

  /// Lexicographic order with alternatives ranked scalar < pair < label; used
  /// only to keep sampled sets deterministic, it has no metric meaning.
  friend bool operator<(const Point& a, const Point& b) { return a.value_ < b.value_; }

  /// Human-readable rendering: "0.25", "(4, 5)", "a".
  std::string to_string() const;

 private:
  explicit Point(std::variant<Scalar, Pair, Label> value) : value_(std::move(value)) {}

  std::variant<Scalar, Pair, Label> value_;
};

/// Componentwise closeness: same alternative and each numeric component within
/// `tolerance`.  Labels must match exactly.
bool almost_equal(const Point& a, const Point& b, double tolerance = tol::point_equality);

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

}  // namespace fixpoint
