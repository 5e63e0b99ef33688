#pragma once

namespace fixpoint {

/// Tolerances used throughout the library.  All comparisons against measured
/// distances go through one of these so the behaviour is easy to audit and the
/// test suite can pin exact expectations.
namespace tol {

/// Two points are "the same" for approximate comparisons.
inline constexpr double point_equality = 1e-9;

/// Margin enforced on strict inequalities evaluated in floating point
/// (contraction thresholds, half-distance gates, asymptotic tail checks).
inline constexpr double strict_margin = 1e-12;

/// Slack allowed when checking the triangle inequality on sampled triples.
inline constexpr double triangle = 1e-12;

/// Iteration stops once consecutive iterates are closer than this.
inline constexpr double convergence = 1e-9;

/// Default residual bound for accepting a coincidence point.
inline constexpr double coincidence = 1e-6;

/// Default residual bound for accepting a preimage under g.
inline constexpr double preimage = 1e-6;

/// Default residual bound when testing f(X) ⊆ g(X) on a sample.
inline constexpr double range_inclusion = 1e-6;

}  // namespace tol

/// Cycle detection looks back this many iterates, comparing y values at this
/// tolerance.
inline constexpr int cycle_window = 50;
inline constexpr double cycle_tolerance = 1e-9;

/// Default sampling resolution for interval domains.
inline constexpr int default_resolution = 1000;

/// Default iteration budget.
inline constexpr int default_max_iter = 10000;

/// At most this many witnesses are retained when scanning sampled grids.
inline constexpr int max_grid_witnesses = 10;

}  // namespace fixpoint
