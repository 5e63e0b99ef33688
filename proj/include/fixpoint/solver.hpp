#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fixpoint/axiom_report.hpp"
#include "fixpoint/constants.hpp"
#include "fixpoint/maps.hpp"

namespace fixpoint {

enum class Termination {
  Converged,      ///< consecutive y values within tolerance
  MaxIterations,  ///< budget exhausted
  NoPreimage,     ///< f produced a value g never attains (locally)
  CycleDetected,  ///< a y value recurred without convergence
};

std::string termination_name(Termination t);

/// Trace of the alternating iteration y_n = f(x_n), g(x_{n+1}) = y_n.
struct Orbit {
  MetricSpace space;
  std::vector<Point> x_seq;
  std::vector<Point> y_seq;              ///< y_seq[n] = f(x_seq[n])
  std::vector<double> step_distances;    ///< d(y_n, y_{n+1})
  Termination termination = Termination::MaxIterations;
  double tolerance = tol::convergence;   ///< convergence cutoff used
};

/// Smallest domain point (in deterministic domain order) whose g value is
/// within `tolerance` of `value`.  On intervals the sampled scan is refined by
/// bisection inside each candidate cell, so exact preimages between samples
/// are found.  Returns nullopt when nothing reaches the tolerance.
std::optional<Point> try_g_preimage(const MappingPair& pair, const Point& value,
                                    double tolerance = tol::preimage,
                                    int resolution = default_resolution);

/// try_g_preimage that throws NoPreimageError instead of returning nullopt.
Point g_preimage(const MappingPair& pair, const Point& value,
                 double tolerance = tol::preimage,
                 int resolution = default_resolution);

/// Runs the alternating iteration from x0 until convergence, a repeated y
/// value, a missing preimage, or the iteration budget.  A missing preimage is
/// reported through the termination field, not an exception.
Orbit jungck_orbit(const MappingPair& pair, const Point& x0,
                   int max_iter = default_max_iter,
                   double tolerance = tol::convergence);

/// A point v where f and g approximately agree, with u = f(v) the shared value.
struct CoincidenceResult {
  Point v;
  Point u;
  double residual = 0.0;  ///< d(f(v), g(v))
  bool unique_on_sample = false;
};

/// Scans the sampled domain for points with d(f(v), g(v)) <= tolerance.  On
/// intervals each candidate cell is refined by bisection and hits closer
/// together than 10x the tolerance are merged (best residual wins); finite
/// domains report every hit unmerged.  unique_on_sample is set on every
/// result when exactly one survives.
std::vector<CoincidenceResult> find_coincidence(const MappingPair& pair,
                                                int resolution = default_resolution,
                                                double tolerance = tol::coincidence);

/// Verifies that f and g commute at v and that u = f(v) is fixed by both maps,
/// then returns u.  Throws NotWeaklyCompatibleError when d(f(g(v)), g(f(v)))
/// exceeds the tolerance and NotFixedError when u fails either fixed-point
/// check.
Point common_fixed_point(const MappingPair& pair, const CoincidenceResult& cr,
                         double tolerance = tol::coincidence);

/// Diameter of the orbit segment {y_k, ..., y_{k+n}}: the largest pairwise
/// distance.  Throws IndexOutOfRangeError when the segment leaves y_seq.
double orbit_diameter(const Orbit& orbit, int k, int n);

/// Geometric decay certificate for an orbit; see geometric_bound.
struct GeometricBoundReport {
  double lambda = 0.0;  ///< in (0, 1): decay rate recovered from orbit windows
  double beta = 0.0;    ///< in (0, 1): 1 / (full-orbit diameter + 1)
  std::vector<double> observed_deltas;  ///< d(y_n, y_{n+1})
  std::vector<double> bound_values;     ///< lambda^n / (1 - beta) * d(y_0, y_1)
  bool holds = false;                   ///< observed < bound at every n
};

/// Computes beta from the whole orbit, lambda as the largest of the window
/// coefficients 1/(diameter + 1) over the nested segments ending at the last
/// orbit point (zero-diameter windows skipped), and checks the step bound
/// d(y_n, y_{n+1}) < lambda^n / (1 - beta) * d(y_0, y_1) at every n.  Throws
/// DegenerateOrbitError when the orbit has fewer than 3 y values or its first
/// step is within tolerance.
GeometricBoundReport geometric_bound(const Orbit& orbit);

/// Numerical Cauchy check: sliding-window diameters must be non-increasing
/// beyond the first quartile of window starts (1e-12 slack) and the final
/// window diameter must be at most 10x the orbit tolerance.
AxiomReport cauchy_diagnostic(const Orbit& orbit, int window);

}  // namespace fixpoint
