#pragma once

#include <functional>
#include <vector>

namespace fixpoint::detail {

/// Approximate-zero scan for a scalar function h over an ascending sample of
/// one interval.  Candidates come from two sources:
///  - samples where |h| <= accept_tol (direct hits), and
///  - cells [xs[i], xs[i+1]] where h changes strict sign, refined by bisection.
/// Bisection converges to the crossing of continuous pieces and to the jump
/// point of discontinuous ones; callers must re-evaluate |h| at each returned
/// x and discard candidates whose residual is still too large.
/// Results are in ascending x order.
std::vector<double> scan_scalar_zeros(const std::function<double(double)>& h,
                                      const std::vector<double>& xs,
                                      double accept_tol);

/// One bisection refinement on a bracket [a, b] with h(a), h(b) of opposite
/// strict signs; returns the midpoint of the final bracket.
double bisect(const std::function<double(double)>& h, double a, double b);

}  // namespace fixpoint::detail
