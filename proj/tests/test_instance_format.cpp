#include <string>

#include "doctest.h"
#include "fixpoint/errors.hpp"
#include "fixpoint/fixtures.hpp"
#include "fixpoint/instance_format.hpp"

using namespace fixpoint;

namespace {

/// A small valid instance used as the base for error-injection tests.
std::string minimal_text() {
  return "id mini\n"
         "domain interval [0, 1] resolution 50\n"
         "metric absolute-difference\n"
         "f: [0, 1] -> const 0.5\n"
         "g: [0, 1] -> identity\n"
         "zeta linear 0.8\n";
}

}  // namespace

TEST_CASE("serialization is a fixed point after one parse round trip") {
  for (const auto& id : example_ids()) {
    INFO(id);
    const std::string once = serialize_instance(load_example(id));
    const std::string twice = serialize_instance(parse_instance(once));
    CHECK(once == twice);
  }
}

TEST_CASE("parsing preserves the semantic content of a serialized example") {
  const auto original = load_example("ex3_2");
  const auto reparsed = parse_instance(serialize_instance(original));
  CHECK(reparsed.id == original.id);
  CHECK(reparsed.pair.space.metric == MetricKind::Taxicab);
  REQUIRE(reparsed.pair.space.domain.is_finite());
  CHECK(reparsed.pair.space.domain.points() == original.pair.space.domain.points());
  for (const auto& p : original.pair.space.domain.points()) {
    CHECK(reparsed.pair.f(p) == original.pair.f(p));
    CHECK(reparsed.pair.g(p) == original.pair.g(p));
  }
  REQUIRE(reparsed.expected.has_value());
  CHECK(reparsed.expected->common_fixed_point == Point::pair(0, 0));
  REQUIRE(reparsed.expected->witness_pairs.size() == 2);
  CHECK(reparsed.expected->witness_class == ContractionClass::GeneralizedZG);
}

TEST_CASE("omitted control lines fall back to their defaults") {
  const auto inst = parse_instance(minimal_text());
  CHECK(inst.id == "mini");
  CHECK(inst.control.G.kind == CClassFunction::Kind::Difference);
  CHECK(inst.control.c_g == 0.0);
  CHECK(inst.control.variant == PropertyVariant::Standard);
  CHECK_FALSE(inst.expected.has_value());
  CHECK(inst.notes.empty());
  CHECK(inst.pair.space.domain.interval_spec().grid_resolution == 50);
}

TEST_CASE("an omitted resolution falls back to the domain default") {
  std::string text = minimal_text();
  const auto pos = text.find(" resolution 50");
  text.erase(pos, std::string(" resolution 50").size());
  const auto inst = parse_instance(text);
  CHECK(inst.pair.space.domain.interval_spec().grid_resolution == 1000);
}

TEST_CASE("fractions are accepted wherever numbers are") {
  const auto inst = parse_instance(
      "id frac\n"
      "domain interval [0, 1/4] resolution 40\n"
      "metric absolute-difference\n"
      "f: [0, 1/4] -> affine 0 1/3\n"
      "g: [0, 1/4] -> identity\n"
      "zeta linear 4/5\n"
      "cg 0/7\n");
  CHECK(inst.pair.space.domain.interval_spec().upper == 0.25);
  CHECK(inst.control.zeta.lambda == doctest::Approx(0.8));
  CHECK(inst.control.c_g == 0.0);
  CHECK(inst.pair.f(Point::scalar(0.09)).as_scalar() == doctest::Approx(0.03));
}

TEST_CASE("comparison regions and pair points survive a round trip") {
  const auto inst = parse_instance(
      "id duo\n"
      "domain finite (0, 0) (1, 2) (2, 1)\n"
      "metric taxicab\n"
      "f: x1=x2 -> const (0, 0)\n"
      "f: x1<x2 -> const (0, 0)\n"
      "f: x1>x2 -> identity\n"
      "g: points (0, 0) (1, 2) (2, 1) -> identity\n"
      "zeta linear 0.8\n");
  CHECK(inst.pair.f(Point::pair(1, 2)) == Point::pair(0, 0));
  CHECK(inst.pair.f(Point::pair(2, 1)) == Point::pair(2, 1));
  const std::string once = serialize_instance(inst);
  CHECK(serialize_instance(parse_instance(once)) == once);
}

TEST_CASE("comments and blank lines are ignored") {
  const auto inst = parse_instance("# a comment\n\n" + minimal_text() +
                                   "# trailing comment\n");
  CHECK(inst.id == "mini");
}

TEST_CASE("notes keep the rest of their line verbatim") {
  const auto inst =
      parse_instance(minimal_text() + "note keeps spaces   and (symbols) -> too\n");
  REQUIRE(inst.notes.size() == 1);
  CHECK(inst.notes[0] == "keeps spaces   and (symbols) -> too");
}

TEST_CASE("missing required sections are reported as validation errors") {
  const std::string lines[] = {"id mini\n", "domain interval [0, 1] resolution 50\n",
                               "metric absolute-difference\n",
                               "f: [0, 1] -> const 0.5\n", "g: [0, 1] -> identity\n",
                               "zeta linear 0.8\n"};
  for (const auto& removed : lines) {
    std::string text = minimal_text();
    text.erase(text.find(removed), removed.size());
    INFO("removed: " << removed);
    CHECK_THROWS_AS(parse_instance(text), ValidationError);
  }
}

TEST_CASE("overlapping clauses in the text are rejected semantically") {
  CHECK_THROWS_AS(
      parse_instance("id overlap\n"
                     "domain interval [0, 1] resolution 50\n"
                     "metric absolute-difference\n"
                     "f: [0, 0.5] -> const 0\n"
                     "f: [0.25, 1] -> const 1\n"
                     "g: [0, 1] -> identity\n"
                     "zeta linear 0.8\n"),
      ValidationError);
}

TEST_CASE("a control pairing that fails its own checks is rejected") {
  // zeta grows faster than G here, so zeta < G fails on the probe grid.
  std::string text = minimal_text() + "cclass damped 0.5\n";
  text.replace(text.find("zeta linear 0.8"), std::string("zeta linear 0.8").size(),
               "zeta linear 0.9");
  CHECK_THROWS_AS(parse_instance(text), ValidationError);
}

TEST_CASE("syntax errors carry their line and column") {
  try {
    parse_instance(
        "id t\n"
        "domain interval [0, 1] resolution 20\n"
        "metric weird\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 8);
    CHECK(std::string(e.what()).find("line 3:8") != std::string::npos);
    CHECK(std::string(e.what()).find("weird") != std::string::npos);
  }
}

TEST_CASE("unknown keywords, regions, and expressions are parse errors") {
  CHECK_THROWS_AS(parse_instance("bogus xyz\n" + minimal_text()), ParseError);
  CHECK_THROWS_AS(parse_instance(minimal_text() + "f: triangle -> const 0\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_instance(minimal_text() + "g: [0, 1] -> cubic\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_instance(minimal_text() + "cg abc\n"), ParseError);
  CHECK_THROWS_AS(parse_instance(minimal_text() + "variant sideways\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_instance(minimal_text() + "expected sunshine 0\n"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_instance(minimal_text() + "expected witness-class banach\n"),
      ParseError);
}

TEST_CASE("out-of-range control parameters become parse errors with position") {
  CHECK_THROWS_AS(parse_instance(minimal_text() + "cclass damped 1.5\n"),
                  ParseError);
  std::string text = minimal_text();
  text.replace(text.find("zeta linear 0.8"), std::string("zeta linear 0.8").size(),
               "zeta linear 1");
  CHECK_THROWS_AS(parse_instance(text), ParseError);
}

TEST_CASE("trailing tokens on a line are parse errors") {
  CHECK_THROWS_AS(parse_instance("id two words\n" + minimal_text()), ParseError);
  CHECK_THROWS_AS(parse_instance(minimal_text() + "cg 0 extra\n"), ParseError);
}

TEST_CASE("point literals parse as scalars, fractions, pairs, and labels") {
  CHECK(parse_point_text("0.25") == Point::scalar(0.25));
  CHECK(parse_point_text("1/4") == Point::scalar(0.25));
  CHECK(parse_point_text("-2") == Point::scalar(-2.0));
  CHECK(parse_point_text("(4, 5)") == Point::pair(4, 5));
  CHECK(parse_point_text("(1/2, -1/2)") == Point::pair(0.5, -0.5));
  CHECK(parse_point_text("origin") == Point::label("origin"));
  CHECK_THROWS_AS(parse_point_text("("), ParseError);
  CHECK_THROWS_AS(parse_point_text("(1, 2) extra"), ParseError);
  CHECK_THROWS_AS(parse_point_text(""), ParseError);
}
