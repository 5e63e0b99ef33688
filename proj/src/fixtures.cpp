#include "fixpoint/fixtures.hpp"

#include "fixpoint/errors.hpp"

namespace fixpoint {

namespace {

Instance make_ex3_1() {
  Domain domain = Domain::interval({0.0, 1.0, false, false, default_resolution});
  MetricSpace space{domain, MetricKind::AbsoluteDifference};

  PiecewiseMap f({
      {IntervalRegion{0.0, 0.25, false, false}, ConstantExpr{Point::scalar(0.0)}},
      {IntervalRegion{0.25, 0.5, true, true}, ConstantExpr{Point::scalar(1.0 / 20.0)}},
      {IntervalRegion{0.5, 1.0, false, false}, ConstantExpr{Point::scalar(4.0 / 25.0)}},
  });
  PiecewiseMap g({
      {IntervalRegion{0.0, 0.25, false, false}, AffineExpr{0.0, 1.0 / 3.0}},
      {IntervalRegion{0.25, 0.5, true, true}, ConstantExpr{Point::scalar(0.25)}},
      {IntervalRegion{0.5, 1.0, false, false}, ConstantExpr{Point::scalar(1.0 / 3.0)}},
  });

  ExpectedOutcomes expected;
  expected.coincidence_point = Point::scalar(0.0);
  expected.common_fixed_point = Point::scalar(0.0);

  return Instance{
      "ex3_1",
      MappingPair{space, f, g},
      ControlSet{CClassFunction::difference(), SimulationFunction::linear(0.8),
                 0.0, PropertyVariant::Standard},
      expected,
      {"f attains 4/25, a value g never takes; range inclusion fails and "
       "iteration from any x in [1/2, 1] stops with no-preimage"},
  };
}

Instance make_ex3_2() {
  const Point p00 = Point::pair(0.0, 0.0);
  const Point p33 = Point::pair(3.0, 3.0);
  const Point p40 = Point::pair(4.0, 0.0);
  const Point p04 = Point::pair(0.0, 4.0);
  const Point p45 = Point::pair(4.0, 5.0);
  const Point p54 = Point::pair(5.0, 4.0);

  Domain domain = Domain::finite({p00, p33, p40, p04, p45, p54});
  MetricSpace space{domain, MetricKind::Taxicab};

  PiecewiseMap f({
      {ComparisonRegion{Comparison::Equal}, ConstantExpr{p00}},
      {ComparisonRegion{Comparison::FirstLess}, FirstAxisExpr{}},
      {ComparisonRegion{Comparison::FirstGreater}, SecondAxisExpr{}},
  });
  PiecewiseMap g({
      {PointListRegion{{p33}}, ConstantExpr{p40}},
      {PointListRegion{{p00, p40, p04, p45, p54}}, IdentityExpr{}},
  });

  ExpectedOutcomes expected;
  expected.coincidence_point = p00;
  expected.common_fixed_point = p00;
  expected.witness_pairs = {{p45, p54}, {p54, p45}};
  expected.witness_class = ContractionClass::GeneralizedZG;

  return Instance{
      "ex3_2",
      MappingPair{space, f, g},
      ControlSet{CClassFunction::difference(), SimulationFunction::linear(0.8),
                 0.0, PropertyVariant::Standard},
      expected,
      {},
  };
}

Instance make_ex4_1() {
  Domain domain = Domain::interval({-2.0, 2.0, true, true, default_resolution});
  MetricSpace space{domain, MetricKind::AbsoluteDifference};

  PiecewiseMap f({
      {IntervalRegion{-2.0, -1.0, true, true}, ConstantExpr{Point::scalar(0.0)}},
      {IntervalRegion{-1.0, 0.0, false, true}, AffineExpr{1.0 / 3.0, 1.0 / 3.0}},
      {IntervalRegion{0.0, 1.0, false, false}, AffineExpr{1.0 / 3.0, -1.0 / 3.0}},
      {IntervalRegion{1.0, 2.0, true, true}, ConstantExpr{Point::scalar(0.0)}},
  });
  PiecewiseMap g({
      {IntervalRegion{-2.0, -1.0, true, false}, ConstantExpr{Point::scalar(1.0)}},
      {IntervalRegion{-1.0, 1.0, true, true}, IdentityExpr{}},
      {IntervalRegion{1.0, 2.0, false, true}, ConstantExpr{Point::scalar(-1.0)}},
  });

  ExpectedOutcomes expected;
  expected.coincidence_point = Point::scalar(0.25);
  expected.common_fixed_point = Point::scalar(0.25);

  return Instance{
      "ex4_1",
      MappingPair{space, f, g},
      ControlSet{CClassFunction::difference(), SimulationFunction::rational(),
                 0.0, PropertyVariant::Standard},
      expected,
      {},
  };
}

}  // namespace

std::vector<std::string> example_ids() { return {"ex3_1", "ex3_2", "ex4_1"}; }

Instance load_example(const std::string& id) {
  if (id == "ex3_1") return make_ex3_1();
  if (id == "ex3_2") return make_ex3_2();
  if (id == "ex4_1") return make_ex4_1();
  throw UnknownExampleError("unknown example id '" + id +
                            "' (available: ex3_1, ex3_2, ex4_1)");
}

}  // namespace fixpoint
