#include "fixpoint/control.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fixpoint/errors.hpp"

namespace fixpoint {

namespace {

void require_nonnegative(double v, const char* what) {
  if (!std::isfinite(v) || v < 0.0) {
    throw DomainError(std::string(what) + " must be finite and nonnegative");
  }
}

}  // namespace

CClassFunction CClassFunction::difference() {
  return {Kind::Difference, 1.0};
}

CClassFunction CClassFunction::damped(double lambda) {
  if (!(lambda > 0.0) || lambda > 1.0) {
    throw DomainError("damped comparison function needs lambda in (0, 1]");
  }
  return {Kind::Damped, lambda};
}

std::string CClassFunction::name() const {
  switch (kind) {
    case Kind::Difference: return "difference";
    case Kind::Damped: return "damped " + format_double(lambda);
  }
  return "unknown";
}

SimulationFunction SimulationFunction::linear(double lambda) {
  if (!(lambda > 0.0) || !(lambda < 1.0)) {
    throw DomainError("linear simulation function needs lambda in (0, 1)");
  }
  return {Kind::Linear, lambda};
}

SimulationFunction SimulationFunction::rational() {
  return {Kind::Rational, 0.0};
}

std::string SimulationFunction::name() const {
  switch (kind) {
    case Kind::Linear: return "linear " + format_double(lambda);
    case Kind::Rational: return "rational";
  }
  return "unknown";
}

std::string property_variant_name(PropertyVariant v) {
  return v == PropertyVariant::Standard ? "standard" : "modified";
}

double eval_G(const CClassFunction& G, double s, double t) {
  require_nonnegative(s, "s");
  require_nonnegative(t, "t");
  switch (G.kind) {
    case CClassFunction::Kind::Difference: return s - t;
    case CClassFunction::Kind::Damped: return G.lambda * s - t;
  }
  throw DomainError("unhandled comparison function kind");
}

double eval_zeta(const SimulationFunction& zeta, double t, double s) {
  require_nonnegative(t, "t");
  require_nonnegative(s, "s");
  switch (zeta.kind) {
    case SimulationFunction::Kind::Linear: return zeta.lambda * s - t;
    case SimulationFunction::Kind::Rational: return s / (s + 1.0) - t;
  }
  throw DomainError("unhandled simulation function kind");
}

ProbeGrid default_probe_grid() {
  constexpr int n = 200;
  constexpr double lo = 1e-6;
  constexpr double hi = 10.0;
  std::vector<double> axis(n);
  for (int i = 0; i < n; ++i) {
    axis[i] = (i == n - 1) ? hi : lo + (hi - lo) * i / (n - 1);
  }
  ProbeGrid grid;
  grid.reserve(n * n);
  for (double a : axis) {
    for (double b : axis) grid.emplace_back(a, b);
  }
  return grid;
}

std::vector<double> default_limit_probes() { return {0.5, 1.0, 2.0}; }

AxiomReport check_c_class(const std::function<double(double, double)>& G,
                          const ProbeGrid& probes_st) {
  AxiomReport report;
  report.axiom = "c-class";
  if (probes_st.empty()) throw DomainError("probe grid must be non-empty");
  for (const auto& [s, t] : probes_st) {
    require_nonnegative(s, "probe s");
    require_nonnegative(t, "probe t");
    const double g = G(s, t);
    if (g > s) {
      report.pass = false;
      report.witness_values = {s, t};
      report.violation = g - s;
      report.note = "G(s, t) exceeds s";
      return report;
    }
    if (std::fabs(g - s) <= 1e-9 && s != 0.0 && t != 0.0) {
      report.pass = false;
      report.witness_values = {s, t};
      report.violation = 0.0;
      report.note = "G(s, t) = s with both arguments positive";
      return report;
    }
  }
  return report;
}

AxiomReport check_c_class(const CClassFunction& G, const ProbeGrid& probes_st) {
  return check_c_class(
      [&](double s, double t) { return eval_G(G, s, t); }, probes_st);
}

AxiomReport check_cg_property(const std::function<double(double, double)>& G,
                              double c_g, PropertyVariant variant,
                              const ProbeGrid& probes_st) {
  AxiomReport report;
  report.axiom = "threshold-property";
  if (probes_st.empty()) throw DomainError("probe grid must be non-empty");
  for (const auto& [s, t] : probes_st) {
    if (G(s, t) > c_g) {
      const bool implied = variant == PropertyVariant::Standard
                               ? s > t
                               : s / (s + 1.0) > t;
      if (!implied) {
        report.pass = false;
        report.witness_values = {s, t};
        report.violation = G(s, t) - c_g;
        report.note = variant == PropertyVariant::Standard
                          ? "G(s, t) above threshold without s > t"
                          : "G(s, t) above threshold without s/(s+1) > t";
        return report;
      }
    }
    const double diag = G(t, t);
    if (diag > c_g) {
      report.pass = false;
      report.witness_values = {t, t};
      report.violation = diag - c_g;
      report.note = "G(t, t) exceeds the threshold";
      return report;
    }
  }
  return report;
}

AxiomReport check_cg_property(const ControlSet& cs, const ProbeGrid& probes_st) {
  return check_cg_property(
      [&](double s, double t) { return eval_G(cs.G, s, t); }, cs.c_g,
      cs.variant, probes_st);
}

AxiomReport check_simulation_margin(
    const std::function<double(double, double)>& zeta,
    const std::function<double(double, double)>& G, const ProbeGrid& probes_ts) {
  AxiomReport report;
  report.axiom = "simulation-margin";
  if (probes_ts.empty()) throw DomainError("probe grid must be non-empty");
  for (const auto& [t, s] : probes_ts) {
    if (!(t > 0.0) || !(s > 0.0)) {
      throw DomainError("simulation-margin probes must be strictly positive");
    }
    const double z = zeta(t, s);
    const double g = G(s, t);
    // The condition is a plain strict inequality; adding a margin here would
    // reject pairings whose gap legitimately shrinks to zero near the origin.
    if (!(z < g)) {
      report.pass = false;
      report.witness_values = {t, s};
      report.violation = z - g;
      report.note = "zeta(t, s) not below G(s, t)";
      return report;
    }
  }
  return report;
}

AxiomReport check_limit_superior(
    const std::function<double(double, double)>& zeta, double c_g,
    const std::vector<double>& limit_probes) {
  AxiomReport report;
  report.axiom = "limit-superior";
  report.note = "necessary evidence, not proof";
  for (double L : limit_probes) {
    if (!(L > 0.0)) throw DomainError("limit probes must be strictly positive");
    // Three canonical families with t_n < s_n, both tending to L.
    const auto families = std::vector<std::function<std::pair<double, double>(int)>>{
        [L](int n) { return std::pair{L - L / n, L + L / n}; },
        [L](int n) { return std::pair{L - 1.0 / n, L + 1.0 / (double(n) * n)}; },
        [L](int n) { return std::pair{L * (1.0 - 1.0 / n), L}; },
    };
    for (std::size_t fam = 0; fam < families.size(); ++fam) {
      double tail_sup = -std::numeric_limits<double>::infinity();
      int sup_n = 0;
      for (int n = 100; n <= 1000; ++n) {
        const auto [t, s] = families[fam](n);
        const double z = zeta(t, s);
        if (z > tail_sup) {
          tail_sup = z;
          sup_n = n;
        }
      }
      if (!(tail_sup < c_g - tol::strict_margin)) {
        report.pass = false;
        const auto [t, s] = families[fam](sup_n);
        report.witness_values = {t, s};
        report.violation = tail_sup - c_g;
        report.note = "tail supremum of zeta along family " +
                      std::to_string(fam + 1) + " at limit " + format_double(L) +
                      " does not stay below the threshold; " + report.note;
        return report;
      }
    }
  }
  return report;
}

AxiomReport check_simulation_conditions(const ControlSet& cs,
                                        const ProbeGrid& probes_ts,
                                        const std::vector<double>& limit_probes) {
  auto zeta_fn = [&](double t, double s) { return eval_zeta(cs.zeta, t, s); };
  auto g_fn = [&](double s, double t) { return eval_G(cs.G, s, t); };
  AxiomReport margin = check_simulation_margin(zeta_fn, g_fn, probes_ts);
  if (!margin.pass) {
    margin.axiom = "simulation-conditions";
    return margin;
  }
  AxiomReport tail = check_limit_superior(zeta_fn, cs.c_g, limit_probes);
  tail.axiom = "simulation-conditions";
  return tail;
}

void validate_control_set(const ControlSet& cs) {
  if (!std::isfinite(cs.c_g) || cs.c_g < 0.0) {
    throw ValidationError("control set threshold must be finite and >= 0");
  }
  const auto grid = default_probe_grid();
  const auto limits = default_limit_probes();
  for (const AxiomReport& r : {check_c_class(cs.G, grid),
                               check_cg_property(cs, grid),
                               check_simulation_conditions(cs, grid, limits)}) {
    if (!r.pass) {
      throw ValidationError("control set fails the " + r.axiom +
                            " check: " + r.note);
    }
  }
}

std::vector<std::pair<std::string, ControlSet>> builtin_presets() {
  return {
      {"difference-linear",
       {CClassFunction::difference(), SimulationFunction::linear(0.8), 0.0,
        PropertyVariant::Standard}},
      {"difference-rational",
       {CClassFunction::difference(), SimulationFunction::rational(), 0.0,
        PropertyVariant::Standard}},
      {"damped-linear",
       {CClassFunction::damped(0.9), SimulationFunction::linear(0.8), 0.0,
        PropertyVariant::Standard}},
  };
}

}  // namespace fixpoint
