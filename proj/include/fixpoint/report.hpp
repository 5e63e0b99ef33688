#pragma once

#include <string>

#include "json.hpp"

#include "fixpoint/axiom_report.hpp"
#include "fixpoint/contraction.hpp"
#include "fixpoint/solver.hpp"

namespace fixpoint {

/// Machine-readable report building blocks.  ordered_json keeps insertion
/// order, so identical inputs serialize to byte-identical documents; doubles
/// are emitted as shortest round-trip decimals by the json library.
using json = nlohmann::ordered_json;

json to_json(const Point& p);
json to_json(const AxiomReport& r);
json to_json(const PairVerdict& v);
json to_json(const ClassResult& r);
json to_json(const ClassificationReport& r);
json to_json(const Orbit& o);
json to_json(const CoincidenceResult& r);
json to_json(const GeometricBoundReport& r);

/// Wraps a payload with tool identity, the invoked command, the instance id,
/// and the flag values that shaped the run.  timing_ms is the one field
/// expected to differ between otherwise identical invocations.
json report_envelope(const std::string& command, const std::string& instance_id,
                     const json& flags, const json& payload, double timing_ms);

}  // namespace fixpoint
