#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fixpoint/axiom_report.hpp"
#include "fixpoint/constants.hpp"
#include "fixpoint/control.hpp"
#include "fixpoint/maps.hpp"

namespace fixpoint {

/// Contraction conditions the classifier can test a mapping pair against.
/// The "suzuki" variants only require the core inequality at pairs passing
/// the half-distance gate; "generalized" variants compare against the
/// four-term maximum big_M instead of d(gx, gy); "rational" uses the
/// sandwiched inequality built from the five-term maximum small_m.
enum class ContractionClass {
  ZG,
  GeneralizedZG,
  SuzukiZG,
  SuzukiGeneralizedZG,
  Rational,
  SuzukiRational,
};

std::string contraction_class_id(ContractionClass c);
std::optional<ContractionClass> contraction_class_from_id(const std::string& id);
std::vector<ContractionClass> all_contraction_classes();

/// The gated rational class combines two conditions never jointly studied in
/// the sources this tool reproduces; its reports carry this marker.
bool is_experimental(ContractionClass c);

/// max{ d(gx,gy), d(gx,fx), d(gy,fy), (d(gx,fy)+d(gy,fx))/2 }
double big_M(const MappingPair& pair, const Point& x, const Point& y);

/// max{ d(gx,gy), d(gx,fx), d(gy,fy), d(gx,fy), d(gy,fx) }
double small_m(const MappingPair& pair, const Point& x, const Point& y);

/// true iff (1/2) d(gx, fx) < d(gx, gy) - 1e-12.
bool suzuki_gate(const MappingPair& pair, const Point& x, const Point& y);

enum class Verdict {
  Holds,
  Violated,
  Vacuous,        ///< Suzuki gate false: nothing required at this pair
  NotApplicable,  ///< d(gx, gy) below tolerance: pair outside the condition's scope
};

std::string verdict_name(Verdict v);

/// Evaluation of one contraction condition at one ordered pair.
struct PairVerdict {
  Point x = Point::scalar(0.0);
  Point y = Point::scalar(0.0);
  ContractionClass cls = ContractionClass::ZG;
  Verdict verdict = Verdict::Holds;
  bool gate_active = false;  ///< the half-distance gate held at (x, y)
  /// zeta value for the simulation classes; for rational classes the middle
  /// member m/(m+1) - d(fx, fy) of the sandwich.
  double lhs = 0.0;
};

/// Evaluates one class at one ordered pair.
PairVerdict check_pair(const MappingPair& pair, const ControlSet& cs,
                       const Point& x, const Point& y, ContractionClass cls);

enum class ClassStatus {
  SatisfiedOnSample,  ///< no violation at any probed pair (vacuous pairs count as satisfied)
  Violated,
  NotApplicable,      ///< every probed pair was out of scope
};

std::string class_status_name(ClassStatus s);

/// Aggregate over all sampled ordered pairs for one class.
struct ClassResult {
  ContractionClass cls = ContractionClass::ZG;
  ClassStatus status = ClassStatus::SatisfiedOnSample;
  std::vector<PairVerdict> witnesses;  ///< violated pairs, in scan order
  bool witnesses_truncated = false;
  long holds = 0;
  long violated = 0;
  long vacuous = 0;
  long not_applicable = 0;
};

struct ClassificationReport {
  std::vector<ClassResult> results;  ///< one per requested class, in request order
  int resolution = 0;                ///< grid resolution (0 for finite domains)
  long sample_points = 0;
  long ordered_pairs = 0;
  double tolerance = tol::point_equality;  ///< d(gx,gy) scope cutoff
};

/// Checks the requested classes at every ordered pair of sampled points
/// (exhaustive on finite domains).  Scan order is outer x, inner y, in domain
/// sample order, so witness lists are deterministic.  Finite domains keep all
/// witnesses; grids keep the first 10 per class and set witnesses_truncated.
ClassificationReport classify(const MappingPair& pair, const ControlSet& cs,
                              int resolution = default_resolution,
                              const std::vector<ContractionClass>& classes =
                                  all_contraction_classes());

/// Verifies that every sampled value of f is attained by g somewhere on the
/// domain, up to 1e-6 (on intervals, candidate preimages are refined inside
/// their grid cells before giving up).  A failing report carries the worst
/// offender x and f(x) and the smallest residual found for it.
AxiomReport check_range_inclusion(const MappingPair& pair,
                                  int resolution = default_resolution);

}  // namespace fixpoint
