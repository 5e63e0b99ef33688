#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fixpoint/axiom_report.hpp"
#include "fixpoint/constants.hpp"

namespace fixpoint {

/// Catalog of two-argument comparison functions G with G(s,t) <= s and
/// equality only at s = 0 or t = 0.
struct CClassFunction {
  enum class Kind { Difference, Damped };

  Kind kind = Kind::Difference;
  double lambda = 1.0;  ///< damping factor, used by Damped only

  /// G(s,t) = s - t
  static CClassFunction difference();
  /// G(s,t) = lambda*s - t for lambda in (0, 1]; throws DomainError otherwise.
  static CClassFunction damped(double lambda);

  std::string name() const;
};

/// Catalog of simulation functions zeta.  The argument order is zeta(t, s)
/// throughout: t plays the contracted-distance role, s the reference role.
struct SimulationFunction {
  enum class Kind { Linear, Rational };

  Kind kind = Kind::Linear;
  double lambda = 0.8;  ///< slope, used by Linear only

  /// zeta(t,s) = lambda*s - t for lambda in (0, 1); throws DomainError otherwise.
  static SimulationFunction linear(double lambda);
  /// zeta(t,s) = s/(s+1) - t
  static SimulationFunction rational();

  std::string name() const;
};

/// Which comparison the threshold constant must force when G(s,t) exceeds it.
enum class PropertyVariant {
  Standard,  ///< G(s,t) > c_g implies s > t
  Modified,  ///< G(s,t) > c_g implies s/(s+1) > t
};

std::string property_variant_name(PropertyVariant v);

/// A complete set of control data for contraction conditions: the comparison
/// function G, the simulation function zeta, the threshold constant c_g, and
/// the variant of the threshold property the set claims to satisfy.
struct ControlSet {
  CClassFunction G;
  SimulationFunction zeta;
  double c_g = 0.0;
  PropertyVariant variant = PropertyVariant::Standard;
};

/// Exact formula evaluation.  Throws DomainError on negative or non-finite
/// arguments.
double eval_G(const CClassFunction& G, double s, double t);
double eval_zeta(const SimulationFunction& zeta, double t, double s);

/// Probe grids are lists of (first, second) argument pairs; each checker
/// documents which slot is s and which is t.
using ProbeGrid = std::vector<std::pair<double, double>>;

/// 200 x 200 uniform grid over [1e-6, 10]^2: strictly positive so it can probe
/// strict-inequality conditions.
ProbeGrid default_probe_grid();

/// Limits used by the sequence-tail checker below.
std::vector<double> default_limit_probes();

/// Checks the defining inequalities of a C-class function on a probe grid of
/// (s, t) pairs: G(s,t) <= s everywhere, and wherever G(s,t) is within 1e-9 of
/// s, s = 0 or t = 0 must hold.
AxiomReport check_c_class(const std::function<double(double, double)>& G,
                          const ProbeGrid& probes_st);
AxiomReport check_c_class(const CClassFunction& G, const ProbeGrid& probes_st);

/// Checks the threshold property of a control set on a probe grid of (s, t)
/// pairs: whenever G(s,t) > c_g the variant's comparison must hold, and
/// G(t,t) <= c_g at every probed t.
AxiomReport check_cg_property(const std::function<double(double, double)>& G,
                              double c_g, PropertyVariant variant,
                              const ProbeGrid& probes_st);
AxiomReport check_cg_property(const ControlSet& cs, const ProbeGrid& probes_st);

/// Checks zeta(t,s) < G(s,t) at every strictly positive probe, a pointwise
/// sanity condition on the pairing of zeta with G.
AxiomReport check_simulation_margin(
    const std::function<double(double, double)>& zeta,
    const std::function<double(double, double)>& G, const ProbeGrid& probes_ts);

/// Tail check for the asymptotic condition on zeta: for each limit L, runs the
/// canonical sequence families
///   s_n = L + L/n,    t_n = L - L/n
///   s_n = L + 1/n^2,  t_n = L - 1/n
///   s_n = L,          t_n = L(1 - 1/n)
/// (each with t_n < s_n and both tending to L), evaluates zeta(t_n, s_n) for
/// n in [100, 1000], and requires the tail supremum < c_g - 1e-12.  This
/// samples fixed families out of an uncountable quantifier, so a pass is
/// labeled necessary evidence, not proof.
AxiomReport check_limit_superior(
    const std::function<double(double, double)>& zeta, double c_g,
    const std::vector<double>& limit_probes);

/// Runs check_simulation_margin on the grid and check_limit_superior on the
/// limit probes; passes iff both pass.  probes_ts entries are (t, s) pairs.
AxiomReport check_simulation_conditions(const ControlSet& cs,
                                        const ProbeGrid& probes_ts,
                                        const std::vector<double>& limit_probes);

/// Runs all three checkers on the default grids and throws ValidationError
/// naming the first failing axiom.  Also rejects c_g < 0.
void validate_control_set(const ControlSet& cs);

/// Ready-made control sets, all validated: (difference, linear 4/5),
/// (difference, rational), (damped 0.9, linear 0.8), each with c_g = 0 and the
/// standard variant.
std::vector<std::pair<std::string, ControlSet>> builtin_presets();

}  // namespace fixpoint
