#include "fixpoint/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fixpoint/errors.hpp"
#include "fixpoint/rootscan.hpp"

namespace fixpoint {

std::string contraction_class_id(ContractionClass c) {
  switch (c) {
    case ContractionClass::ZG: return "ZG";
    case ContractionClass::GeneralizedZG: return "generalized-ZG";
    case ContractionClass::SuzukiZG: return "suzuki-ZG";
    case ContractionClass::SuzukiGeneralizedZG: return "suzuki-generalized-ZG";
    case ContractionClass::Rational: return "rational";
    case ContractionClass::SuzukiRational: return "suzuki-rational";
  }
  return "unknown";
}

std::optional<ContractionClass> contraction_class_from_id(const std::string& id) {
  for (ContractionClass c : all_contraction_classes()) {
    if (contraction_class_id(c) == id) return c;
  }
  return std::nullopt;
}

std::vector<ContractionClass> all_contraction_classes() {
  return {ContractionClass::ZG,
          ContractionClass::GeneralizedZG,
          ContractionClass::SuzukiZG,
          ContractionClass::SuzukiGeneralizedZG,
          ContractionClass::Rational,
          ContractionClass::SuzukiRational};
}

bool is_experimental(ContractionClass c) {
  return c == ContractionClass::SuzukiRational;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Vacuous: return "vacuous";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

std::string class_status_name(ClassStatus s) {
  switch (s) {
    case ClassStatus::SatisfiedOnSample: return "satisfied-on-sample";
    case ClassStatus::Violated: return "violated";
    case ClassStatus::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

namespace {

/// All distances one ordered pair's verdicts depend on.
struct PairDistances {
  double gx_gy = 0.0;
  double fx_fy = 0.0;
  double gx_fx = 0.0;
  double gy_fy = 0.0;
  double gx_fy = 0.0;
  double gy_fx = 0.0;
};

PairDistances measure(const MappingPair& pair, const Point& fx, const Point& fy,
                      const Point& gx, const Point& gy) {
  PairDistances d;
  d.gx_gy = pair.space.distance(gx, gy);
  d.fx_fy = pair.space.distance(fx, fy);
  d.gx_fx = pair.space.distance(gx, fx);
  d.gy_fy = pair.space.distance(gy, fy);
  d.gx_fy = pair.space.distance(gx, fy);
  d.gy_fx = pair.space.distance(gy, fx);
  return d;
}

double four_term_max(const PairDistances& d) {
  return std::max({d.gx_gy, d.gx_fx, d.gy_fy, 0.5 * (d.gx_fy + d.gy_fx)});
}

double five_term_max(const PairDistances& d) {
  return std::max({d.gx_gy, d.gx_fx, d.gy_fy, d.gx_fy, d.gy_fx});
}

bool gate_from(const PairDistances& d) {
  return 0.5 * d.gx_fx < d.gx_gy - tol::strict_margin;
}

bool is_suzuki(ContractionClass c) {
  return c == ContractionClass::SuzukiZG ||
         c == ContractionClass::SuzukiGeneralizedZG ||
         c == ContractionClass::SuzukiRational;
}

PairVerdict evaluate(const ControlSet& cs, ContractionClass cls,
                     const PairDistances& d, const Point& x, const Point& y) {
  PairVerdict v;
  v.x = x;
  v.y = y;
  v.cls = cls;
  if (d.gx_gy <= tol::point_equality) {
    v.verdict = Verdict::NotApplicable;
    return v;
  }
  v.gate_active = gate_from(d);
  if (is_suzuki(cls) && !v.gate_active) {
    v.verdict = Verdict::Vacuous;
    return v;
  }
  bool ok = false;
  switch (cls) {
    case ContractionClass::ZG:
    case ContractionClass::SuzukiZG:
      v.lhs = eval_zeta(cs.zeta, d.fx_fy, d.gx_gy);
      ok = v.lhs >= cs.c_g - tol::strict_margin;
      break;
    case ContractionClass::GeneralizedZG:
    case ContractionClass::SuzukiGeneralizedZG:
      v.lhs = eval_zeta(cs.zeta, d.fx_fy, four_term_max(d));
      ok = v.lhs >= cs.c_g - tol::strict_margin;
      break;
    case ContractionClass::Rational:
    case ContractionClass::SuzukiRational: {
      const double m = five_term_max(d);
      v.lhs = m / (m + 1.0) - d.fx_fy;
      ok = v.lhs >= cs.c_g - tol::strict_margin &&
           v.lhs < eval_G(cs.G, m, d.fx_fy) - tol::strict_margin;
      break;
    }
  }
  v.verdict = ok ? Verdict::Holds : Verdict::Violated;
  return v;
}

}  // namespace

double big_M(const MappingPair& pair, const Point& x, const Point& y) {
  return four_term_max(measure(pair, pair.f(x), pair.f(y), pair.g(x), pair.g(y)));
}

double small_m(const MappingPair& pair, const Point& x, const Point& y) {
  return five_term_max(measure(pair, pair.f(x), pair.f(y), pair.g(x), pair.g(y)));
}

bool suzuki_gate(const MappingPair& pair, const Point& x, const Point& y) {
  return gate_from(measure(pair, pair.f(x), pair.f(y), pair.g(x), pair.g(y)));
}

PairVerdict check_pair(const MappingPair& pair, const ControlSet& cs,
                       const Point& x, const Point& y, ContractionClass cls) {
  return evaluate(cs, cls,
                  measure(pair, pair.f(x), pair.f(y), pair.g(x), pair.g(y)), x,
                  y);
}

ClassificationReport classify(const MappingPair& pair, const ControlSet& cs,
                              int resolution,
                              const std::vector<ContractionClass>& classes) {
  const bool finite = pair.space.domain.is_finite();
  const auto points = finite ? pair.space.domain.points()
                             : pair.space.domain.sample(resolution);
  const std::size_t n = points.size();

  std::vector<Point> f_img, g_img;
  f_img.reserve(n);
  g_img.reserve(n);
  for (const auto& p : points) {
    f_img.push_back(pair.f(p));
    g_img.push_back(pair.g(p));
  }

  ClassificationReport report;
  report.resolution = finite ? 0 : resolution;
  report.sample_points = static_cast<long>(n);
  report.ordered_pairs = static_cast<long>(n) * static_cast<long>(n);
  report.tolerance = tol::point_equality;
  report.results.resize(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    report.results[c].cls = classes[c];
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const PairDistances d =
          measure(pair, f_img[i], f_img[j], g_img[i], g_img[j]);
      for (std::size_t c = 0; c < classes.size(); ++c) {
        ClassResult& result = report.results[c];
        const PairVerdict v = evaluate(cs, classes[c], d, points[i], points[j]);
        switch (v.verdict) {
          case Verdict::Holds: ++result.holds; break;
          case Verdict::Vacuous: ++result.vacuous; break;
          case Verdict::NotApplicable: ++result.not_applicable; break;
          case Verdict::Violated:
            ++result.violated;
            if (finite ||
                result.witnesses.size() < static_cast<std::size_t>(max_grid_witnesses)) {
              result.witnesses.push_back(v);
            } else {
              result.witnesses_truncated = true;
            }
            break;
        }
      }
    }
  }

  for (auto& result : report.results) {
    if (result.violated > 0) {
      result.status = ClassStatus::Violated;
    } else if (result.holds == 0 && result.vacuous == 0) {
      result.status = ClassStatus::NotApplicable;
    } else {
      result.status = ClassStatus::SatisfiedOnSample;
    }
  }
  return report;
}

AxiomReport check_range_inclusion(const MappingPair& pair, int resolution) {
  AxiomReport report;
  report.axiom = "range-inclusion";
  const bool finite = pair.space.domain.is_finite();
  const auto points = finite ? pair.space.domain.points()
                             : pair.space.domain.sample(resolution);

  // Precompute the g image once; refine per target below.
  std::vector<Point> g_img;
  g_img.reserve(points.size());
  for (const auto& p : points) g_img.push_back(pair.g(p));
  std::vector<double> xs;
  if (!finite) {
    xs.reserve(points.size());
    for (const auto& p : points) xs.push_back(p.as_scalar());
  }

  double worst = 0.0;
  for (const auto& x : points) {
    const Point fx = pair.f(x);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& gy : g_img) {
      best = std::min(best, pair.space.distance(fx, gy));
      if (best <= tol::range_inclusion) break;
    }
    if (best > tol::range_inclusion && !finite && fx.is_scalar()) {
      // Between-sample preimages: refine every sign-change cell of g(y) - fx.
      const double target = fx.as_scalar();
      auto h = [&](double yv) {
        return pair.g(Point::scalar(yv)).as_scalar() - target;
      };
      for (double cand : detail::scan_scalar_zeros(h, xs, tol::range_inclusion)) {
        best = std::min(best, std::fabs(h(cand)));
      }
    }
    if (best > tol::range_inclusion && best > worst) {
      worst = best;
      report.pass = false;
      report.witness_points = {x, fx};
      report.violation = best;
      report.note = "f value " + fx.to_string() + " unmatched by g";
    }
  }
  if (report.pass) report.note = "every sampled f value is attained by g";
  return report;
}

}  // namespace fixpoint
