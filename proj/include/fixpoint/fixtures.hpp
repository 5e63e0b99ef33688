#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fixpoint/contraction.hpp"
#include "fixpoint/control.hpp"
#include "fixpoint/maps.hpp"

namespace fixpoint {

/// Outcomes an instance is known to produce, re-verified by the test suite.
struct ExpectedOutcomes {
  std::optional<Point> coincidence_point;
  std::optional<Point> common_fixed_point;
  /// Ordered pairs expected as the exact violation witnesses of witness_class.
  std::vector<std::pair<Point, Point>> witness_pairs;
  std::optional<ContractionClass> witness_class;
};

/// A named, self-contained problem: space + mapping pair + control set, with
/// optional expected outcomes and free-form notes.
struct Instance {
  std::string id;
  MappingPair pair;
  ControlSet control;
  std::optional<ExpectedOutcomes> expected;
  std::vector<std::string> notes;
};

/// Identifiers accepted by load_example, in loading order.
std::vector<std::string> example_ids();

/// Returns one of the built-in examples:
///  - ex3_1: piecewise-constant f against a three-piece g on [0, 1]; has a
///    unique coincidence point at 0 and a known range-inclusion defect.
///  - ex3_2: six points of the taxicab plane; a common fixed point at (0, 0)
///    and a two-pair witness set against the ungated four-term-max condition.
///  - ex4_1: tent-like f against a jump-at-the-ends g on (-2, 2); unique
///    coincidence point at 1/4, used for the sandwiched rational condition.
/// Throws UnknownExampleError for anything else.
Instance load_example(const std::string& id);

}  // namespace fixpoint
