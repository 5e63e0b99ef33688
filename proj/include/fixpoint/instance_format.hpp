#pragma once

#include <string>

#include "fixpoint/fixtures.hpp"

namespace fixpoint {

/// Renders an instance in the line-oriented text format:
///   id ex4_1
///   domain interval (-2, 2) resolution 1000
///   metric absolute-difference
///   f: (-2, -1) -> const 0
///   f: [-1, 0) -> affine 0.3333333333333333 0.3333333333333333
///   ...
///   cclass difference
///   zeta rational
///   cg 0
///   variant standard
///   expected coincidence 0.25
/// Serialized numbers are shortest round-trip decimals, so
/// serialize(parse(serialize(x))) == serialize(x).
std::string serialize_instance(const Instance& instance);

/// Parses the text format back into a fully validated instance: syntax errors
/// throw ParseError with line and column; semantic defects (overlapping
/// clauses, non-total maps, metric or control axiom failures) throw
/// ValidationError.  Omitted `cclass` defaults to difference, `cg` to 0,
/// `variant` to standard.
Instance parse_instance(const std::string& text);

/// Parses a single point written as a scalar ("0.25", "1/4"), a pair
/// ("(4, 5)"), or a label.  Used for command-line point arguments.
Point parse_point_text(const std::string& text);

}  // namespace fixpoint
