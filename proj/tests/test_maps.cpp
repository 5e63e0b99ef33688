#include <string>

#include "doctest.h"
#include "fixpoint/errors.hpp"
#include "fixpoint/fixtures.hpp"
#include "fixpoint/maps.hpp"

using namespace fixpoint;

namespace {

MetricSpace unit_interval_space(int resolution = 100) {
  return {Domain::interval({0.0, 1.0, false, false, resolution}),
          MetricKind::AbsoluteDifference};
}

}  // namespace

TEST_CASE("interval regions respect endpoint openness exactly") {
  const Region closed = IntervalRegion{0.0, 0.25, false, false};
  CHECK(region_contains(closed, Point::scalar(0.0)));
  CHECK(region_contains(closed, Point::scalar(0.25)));
  CHECK_FALSE(region_contains(closed, Point::scalar(0.25 + 1e-15)));

  const Region open = IntervalRegion{0.25, 0.5, true, true};
  CHECK_FALSE(region_contains(open, Point::scalar(0.25)));
  CHECK_FALSE(region_contains(open, Point::scalar(0.5)));
  CHECK(region_contains(open, Point::scalar(0.3)));
  CHECK_FALSE(region_contains(open, Point::pair(0.3, 0.3)));
}

TEST_CASE("comparison regions partition the plane by coordinate order") {
  const Region eq = ComparisonRegion{Comparison::Equal};
  const Region lt = ComparisonRegion{Comparison::FirstLess};
  const Region gt = ComparisonRegion{Comparison::FirstGreater};
  CHECK(region_contains(eq, Point::pair(3, 3)));
  CHECK(region_contains(lt, Point::pair(4, 5)));
  CHECK(region_contains(gt, Point::pair(5, 4)));
  CHECK_FALSE(region_contains(eq, Point::pair(4, 5)));
  CHECK_FALSE(region_contains(lt, Point::scalar(1)));
}

TEST_CASE("point-list regions match by exact equality") {
  const Region r = PointListRegion{{Point::pair(3, 3), Point::pair(4, 0)}};
  CHECK(region_contains(r, Point::pair(3, 3)));
  CHECK(region_contains(r, Point::pair(4, 0)));
  CHECK_FALSE(region_contains(r, Point::pair(0, 4)));
}

TEST_CASE("regions render the documented syntax") {
  CHECK(region_to_string(IntervalRegion{0.0, 0.25, false, false}) == "[0, 0.25]");
  CHECK(region_to_string(IntervalRegion{0.25, 0.5, true, true}) == "(0.25, 0.5)");
  CHECK(region_to_string(ComparisonRegion{Comparison::Equal}) == "x1=x2");
  CHECK(region_to_string(PointListRegion{{Point::pair(3, 3)}}) == "points (3, 3)");
}

TEST_CASE("map expressions evaluate their formulas") {
  CHECK(eval_expr(ConstantExpr{Point::scalar(0.05)}, Point::scalar(0.9)) ==
        Point::scalar(0.05));
  CHECK(eval_expr(AffineExpr{1.0 / 3.0, -1.0 / 3.0}, Point::scalar(0.25))
            .as_scalar() == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(eval_expr(FirstAxisExpr{}, Point::pair(4, 5)) == Point::pair(4, 0));
  CHECK(eval_expr(SecondAxisExpr{}, Point::pair(5, 4)) == Point::pair(0, 4));
  CHECK(eval_expr(IdentityExpr{}, Point::pair(4, 5)) == Point::pair(4, 5));
  CHECK_THROWS_AS(eval_expr(AffineExpr{0.0, 1.0}, Point::pair(1, 2)),
                  DomainMismatchError);
}

TEST_CASE("expressions render the documented syntax") {
  CHECK(expr_to_string(ConstantExpr{Point::scalar(0.0)}) == "const 0");
  CHECK(expr_to_string(AffineExpr{1.0 / 3.0, 1.0 / 3.0}) ==
        "affine 0.3333333333333333 0.3333333333333333");
  CHECK(expr_to_string(FirstAxisExpr{}) == "first-axis");
  CHECK(expr_to_string(SecondAxisExpr{}) == "second-axis");
  CHECK(expr_to_string(IdentityExpr{}) == "identity");
}

TEST_CASE("piecewise maps apply the unique matching clause") {
  const PiecewiseMap f({
      {IntervalRegion{0.0, 0.5, false, true}, ConstantExpr{Point::scalar(0.1)}},
      {IntervalRegion{0.5, 1.0, false, false}, AffineExpr{0.0, 0.5}},
  });
  CHECK(f(Point::scalar(0.2)) == Point::scalar(0.1));
  CHECK(f(Point::scalar(0.8)).as_scalar() == doctest::Approx(0.4));
  CHECK_THROWS_AS(f(Point::scalar(2.0)), ValidationError);
}

TEST_CASE("mapping-pair validation accepts all built-in examples") {
  for (const auto& id : example_ids()) {
    INFO(id);
    CHECK_NOTHROW(validate_mapping_pair(load_example(id).pair, 200));
  }
}

TEST_CASE("overlapping interval clauses are rejected symbolically") {
  const PiecewiseMap f({
      {IntervalRegion{0.0, 0.5, false, false}, ConstantExpr{Point::scalar(0.0)}},
      {IntervalRegion{0.25, 1.0, false, false}, ConstantExpr{Point::scalar(1.0)}},
  });
  const PiecewiseMap g({{IntervalRegion{0.0, 1.0, false, false}, IdentityExpr{}}});
  const MappingPair pair{unit_interval_space(), f, g};
  CHECK_THROWS_WITH_AS(validate_mapping_pair(pair, 50),
                       "f clauses overlap: [0, 0.5] and [0.25, 1]",
                       ValidationError);
}

TEST_CASE("clauses touching at a shared closed endpoint overlap") {
  const PiecewiseMap f({
      {IntervalRegion{0.0, 0.25, false, false}, ConstantExpr{Point::scalar(0.0)}},
      {IntervalRegion{0.25, 1.0, false, false}, ConstantExpr{Point::scalar(1.0)}},
  });
  const PiecewiseMap g({{IntervalRegion{0.0, 1.0, false, false}, IdentityExpr{}}});
  CHECK_THROWS_AS(validate_mapping_pair({unit_interval_space(), f, g}, 50),
                  ValidationError);
}

TEST_CASE("clauses touching at a half-open endpoint do not overlap") {
  const PiecewiseMap f({
      {IntervalRegion{0.0, 0.25, false, false}, ConstantExpr{Point::scalar(0.0)}},
      {IntervalRegion{0.25, 1.0, true, false}, ConstantExpr{Point::scalar(1.0)}},
  });
  const PiecewiseMap g({{IntervalRegion{0.0, 1.0, false, false}, IdentityExpr{}}});
  CHECK_NOTHROW(validate_mapping_pair({unit_interval_space(), f, g}, 50));
}

TEST_CASE("duplicate comparison clauses overlap") {
  const Domain plane = Domain::finite({Point::pair(0, 0), Point::pair(1, 2)});
  const PiecewiseMap f({
      {ComparisonRegion{Comparison::Equal}, ConstantExpr{Point::pair(0, 0)}},
      {ComparisonRegion{Comparison::Equal}, IdentityExpr{}},
      {ComparisonRegion{Comparison::FirstLess}, IdentityExpr{}},
      {ComparisonRegion{Comparison::FirstGreater}, IdentityExpr{}},
  });
  const PiecewiseMap g({{PointListRegion{{Point::pair(0, 0), Point::pair(1, 2)}},
                         IdentityExpr{}}});
  CHECK_THROWS_AS(validate_mapping_pair({{plane, MetricKind::Taxicab}, f, g}, 10),
                  ValidationError);
}

TEST_CASE("a point list overlapping an interval clause is rejected") {
  const PiecewiseMap f({
      {IntervalRegion{0.0, 0.5, false, false}, ConstantExpr{Point::scalar(0.0)}},
      {PointListRegion{{Point::scalar(0.5)}}, ConstantExpr{Point::scalar(1.0)}},
  });
  const PiecewiseMap g({{IntervalRegion{0.0, 1.0, false, false}, IdentityExpr{}}});
  CHECK_THROWS_AS(validate_mapping_pair({unit_interval_space(), f, g}, 50),
                  ValidationError);
}

TEST_CASE("a gap in the clause table is caught at a sampled point") {
  const PiecewiseMap f({
      {IntervalRegion{0.0, 0.4, false, false}, ConstantExpr{Point::scalar(0.0)}},
      {IntervalRegion{0.6, 1.0, false, false}, ConstantExpr{Point::scalar(1.0)}},
  });
  const PiecewiseMap g({{IntervalRegion{0.0, 1.0, false, false}, IdentityExpr{}}});
  CHECK_THROWS_AS(validate_mapping_pair({unit_interval_space(), f, g}, 50),
                  ValidationError);
}

TEST_CASE("an image leaving the domain hull is rejected") {
  const PiecewiseMap f(
      {{IntervalRegion{0.0, 1.0, false, false}, ConstantExpr{Point::scalar(5.0)}}});
  const PiecewiseMap g({{IntervalRegion{0.0, 1.0, false, false}, IdentityExpr{}}});
  CHECK_THROWS_AS(validate_mapping_pair({unit_interval_space(), f, g}, 50),
                  ValidationError);
}

TEST_CASE("an empty clause table is rejected") {
  const PiecewiseMap f;
  const PiecewiseMap g({{IntervalRegion{0.0, 1.0, false, false}, IdentityExpr{}}});
  CHECK_THROWS_AS(validate_mapping_pair({unit_interval_space(), f, g}, 50),
                  ValidationError);
}

TEST_CASE("images on the closure of an open interval are accepted") {
  // g on (-2, 2) sends the whole left piece to 1 and right piece to -1; both
  // values lie strictly inside, while identity keeps samples inside too.
  const MetricSpace space{Domain::interval({-2.0, 2.0, true, true, 100}),
                         MetricKind::AbsoluteDifference};
  const PiecewiseMap f({
      {IntervalRegion{-2.0, 0.0, true, true}, ConstantExpr{Point::scalar(-2.0)}},
      {IntervalRegion{0.0, 2.0, false, true}, ConstantExpr{Point::scalar(2.0)}},
  });
  const PiecewiseMap g({{IntervalRegion{-2.0, 2.0, true, true}, IdentityExpr{}}});
  // Images hit the open endpoints exactly: still accepted, hull membership is
  // what is required.
  CHECK_NOTHROW(validate_mapping_pair({space, f, g}, 50));
}
