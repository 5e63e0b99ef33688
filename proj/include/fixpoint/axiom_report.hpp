#pragma once

#include <string>
#include <vector>

#include "fixpoint/point.hpp"

namespace fixpoint {

/// Outcome of checking one axiom (metric, control-function, or structural) on
/// a sample.  A failing report carries the offending tuple: points for metric
/// checks, raw probe values for scalar control-function checks.
struct AxiomReport {
  std::string axiom;
  bool pass = true;
  std::vector<Point> witness_points;
  std::vector<double> witness_values;
  double violation = 0.0;  ///< how far the axiom was missed (when quantifiable)
  std::string note;
};

}  // namespace fixpoint
