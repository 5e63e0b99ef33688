#include "fixpoint/solver.hpp"

#include <algorithm>
#include <cmath>

#include "fixpoint/errors.hpp"
#include "fixpoint/rootscan.hpp"

namespace fixpoint {

std::string termination_name(Termination t) {
  switch (t) {
    case Termination::Converged: return "converged";
    case Termination::MaxIterations: return "max-iterations";
    case Termination::NoPreimage: return "no-preimage";
    case Termination::CycleDetected: return "cycle-detected";
  }
  return "unknown";
}

std::optional<Point> try_g_preimage(const MappingPair& pair, const Point& value,
                                    double tolerance, int resolution) {
  if (pair.space.domain.is_finite()) {
    for (const auto& p : pair.space.domain.points()) {
      if (pair.space.distance(pair.g(p), value) <= tolerance) return p;
    }
    return std::nullopt;
  }
  if (!value.is_scalar()) return std::nullopt;
  const double target = value.as_scalar();
  auto h = [&](double x) {
    return pair.g(Point::scalar(x)).as_scalar() - target;
  };
  std::vector<double> xs;
  const auto samples = pair.space.domain.sample(resolution);
  xs.reserve(samples.size());
  for (const auto& p : samples) xs.push_back(p.as_scalar());
  // Candidates come back in ascending order; the first one passing the
  // residual test is the smallest admissible preimage.
  for (double cand : detail::scan_scalar_zeros(h, xs, tolerance)) {
    if (std::fabs(h(cand)) <= tolerance) return Point::scalar(cand);
  }
  return std::nullopt;
}

Point g_preimage(const MappingPair& pair, const Point& value, double tolerance,
                 int resolution) {
  if (auto p = try_g_preimage(pair, value, tolerance, resolution)) return *p;
  throw NoPreimageError("no point maps within " + format_double(tolerance) +
                        " of " + value.to_string() + " under g");
}

Orbit jungck_orbit(const MappingPair& pair, const Point& x0, int max_iter,
                   double tolerance) {
  if (!pair.space.domain.contains(x0)) {
    throw DomainError("iteration start " + x0.to_string() +
                      " is outside the domain");
  }
  Orbit orbit{pair.space, {}, {}, {}, Termination::MaxIterations, tolerance};
  orbit.x_seq.push_back(x0);
  orbit.y_seq.push_back(pair.f(x0));
  const int resolution = pair.space.domain.is_finite()
                             ? default_resolution
                             : pair.space.domain.interval_spec().grid_resolution;
  for (int iter = 0; iter < max_iter; ++iter) {
    const auto next_x =
        try_g_preimage(pair, orbit.y_seq.back(), tol::preimage, resolution);
    if (!next_x) {
      orbit.termination = Termination::NoPreimage;
      return orbit;
    }
    const Point next_y = pair.f(*next_x);
    orbit.x_seq.push_back(*next_x);
    orbit.step_distances.push_back(
        pair.space.distance(orbit.y_seq.back(), next_y));
    orbit.y_seq.push_back(next_y);
    if (orbit.step_distances.back() <= tolerance) {
      orbit.termination = Termination::Converged;
      return orbit;
    }
    // A return to an older y value (not the immediate predecessor) means the
    // iteration entered a loop and will never converge.
    const int last = static_cast<int>(orbit.y_seq.size()) - 1;
    const int oldest = std::max(0, last - 1 - cycle_window);
    for (int j = oldest; j <= last - 2; ++j) {
      if (pair.space.distance(orbit.y_seq[j], next_y) <= cycle_tolerance) {
        orbit.termination = Termination::CycleDetected;
        return orbit;
      }
    }
  }
  orbit.termination = Termination::MaxIterations;
  return orbit;
}

std::vector<CoincidenceResult> find_coincidence(const MappingPair& pair,
                                                int resolution,
                                                double tolerance) {
  std::vector<Point> hits;
  if (pair.space.domain.is_finite()) {
    for (const auto& p : pair.space.domain.points()) {
      if (pair.space.distance(pair.f(p), pair.g(p)) <= tolerance) {
        hits.push_back(p);
      }
    }
  } else {
    auto h = [&](double x) {
      const Point p = Point::scalar(x);
      return pair.f(p).as_scalar() - pair.g(p).as_scalar();
    };
    std::vector<double> xs;
    const auto samples = pair.space.domain.sample(resolution);
    xs.reserve(samples.size());
    for (const auto& p : samples) xs.push_back(p.as_scalar());

    std::vector<double> accepted;
    for (double cand : detail::scan_scalar_zeros(h, xs, tolerance)) {
      if (std::fabs(h(cand)) <= tolerance) accepted.push_back(cand);
    }
    // Collapse candidate clusters (duplicates from adjacent cells) down to
    // their best representative.
    std::size_t i = 0;
    while (i < accepted.size()) {
      std::size_t j = i;
      double best = accepted[i];
      while (j + 1 < accepted.size() &&
             accepted[j + 1] - accepted[j] <= 10.0 * tolerance) {
        ++j;
        if (std::fabs(h(accepted[j])) < std::fabs(h(best))) best = accepted[j];
      }
      hits.push_back(Point::scalar(best));
      i = j + 1;
    }
  }

  std::vector<CoincidenceResult> results;
  results.reserve(hits.size());
  for (const auto& v : hits) {
    const Point fv = pair.f(v);
    results.push_back(CoincidenceResult{
        v, fv, pair.space.distance(fv, pair.g(v)), hits.size() == 1});
  }
  return results;
}

Point common_fixed_point(const MappingPair& pair, const CoincidenceResult& cr,
                         double tolerance) {
  if (cr.residual > tolerance) {
    throw DomainError("coincidence residual " + format_double(cr.residual) +
                      " above tolerance");
  }
  const Point fgv = pair.f(pair.g(cr.v));
  const Point gfv = pair.g(pair.f(cr.v));
  const double commute = pair.space.distance(fgv, gfv);
  if (commute > tolerance) {
    throw NotWeaklyCompatibleError(
        "f and g do not commute at " + cr.v.to_string() +
        ": d(f(g(v)), g(f(v))) = " + format_double(commute));
  }
  const Point& u = cr.u;
  const double f_res = pair.space.distance(pair.f(u), u);
  const double g_res = pair.space.distance(pair.g(u), u);
  if (f_res > tolerance || g_res > tolerance) {
    throw NotFixedError("point of coincidence " + u.to_string() +
                        " is not fixed: d(f(u), u) = " + format_double(f_res) +
                        ", d(g(u), u) = " + format_double(g_res));
  }
  return u;
}

double orbit_diameter(const Orbit& orbit, int k, int n) {
  const int size = static_cast<int>(orbit.y_seq.size());
  if (k < 0 || n < 0 || k + n >= size) {
    throw IndexOutOfRangeError("orbit segment [" + std::to_string(k) + ", " +
                               std::to_string(k + n) + "] outside 0.." +
                               std::to_string(size - 1));
  }
  double diameter = 0.0;
  for (int i = k; i <= k + n; ++i) {
    for (int j = i + 1; j <= k + n; ++j) {
      diameter = std::max(diameter,
                          orbit.space.distance(orbit.y_seq[i], orbit.y_seq[j]));
    }
  }
  return diameter;
}

GeometricBoundReport geometric_bound(const Orbit& orbit) {
  const int size = static_cast<int>(orbit.y_seq.size());
  if (size < 3) {
    throw DegenerateOrbitError("orbit needs at least 3 y values");
  }
  const double d01 = orbit.step_distances.front();
  if (d01 <= orbit.tolerance) {
    throw DegenerateOrbitError("first orbit step is within tolerance");
  }
  const int n_max = size - 2;

  GeometricBoundReport report;
  report.beta = 1.0 / (orbit_diameter(orbit, 0, size - 1) + 1.0);
  // Nested windows ending at the last y value; the largest coefficient comes
  // from the smallest window with positive diameter.  The full window
  // contains y_0 and y_1, so at least one diameter is positive.
  report.lambda = 0.0;
  for (int i = 1; i <= n_max; ++i) {
    const double delta = orbit_diameter(orbit, n_max - i, i + 1);
    if (delta > 0.0) {
      report.lambda = std::max(report.lambda, 1.0 / (delta + 1.0));
    }
  }

  report.holds = true;
  double lambda_pow = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    const double bound = lambda_pow / (1.0 - report.beta) * d01;
    const double observed = orbit.step_distances[n];
    report.bound_values.push_back(bound);
    report.observed_deltas.push_back(observed);
    if (!(observed < bound)) report.holds = false;
    lambda_pow *= report.lambda;
  }
  return report;
}

AxiomReport cauchy_diagnostic(const Orbit& orbit, int window) {
  if (window <= 0) throw DomainError("window must be positive");
  const int size = static_cast<int>(orbit.y_seq.size());
  if (size <= window) {
    throw IndexOutOfRangeError("orbit shorter than the diagnostic window");
  }
  AxiomReport report;
  report.axiom = "cauchy-tail";
  const int last_start = size - 1 - window;
  std::vector<double> tails;
  tails.reserve(last_start + 1);
  for (int k = 0; k <= last_start; ++k) {
    tails.push_back(orbit_diameter(orbit, k, window));
  }
  for (int k = last_start / 4; k + 1 <= last_start; ++k) {
    if (tails[k + 1] > tails[k] + tol::strict_margin) {
      report.pass = false;
      report.witness_values = {static_cast<double>(k), tails[k], tails[k + 1]};
      report.violation = tails[k + 1] - tails[k];
      report.note = "window diameters grow past the first quartile";
      return report;
    }
  }
  if (tails.back() > 10.0 * orbit.tolerance) {
    report.pass = false;
    report.witness_values = {static_cast<double>(last_start), tails.back()};
    report.violation = tails.back();
    report.note = "final window diameter above 10x tolerance";
    return report;
  }
  report.note = "window diameters decay to tolerance";
  return report;
}

}  // namespace fixpoint
