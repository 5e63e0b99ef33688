#include "fixpoint/instance_format.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "fixpoint/errors.hpp"

namespace fixpoint {

namespace {

struct Token {
  std::string text;
  int column = 0;
};

/// Splits one line into words and the delimiters ( ) [ ] , and ->.
class LineLexer {
 public:
  LineLexer(std::string text, int line_no)
      : text_(std::move(text)), line_(line_no) {}

  std::optional<Token> peek() {
    if (!ahead_) ahead_ = scan();
    return *ahead_;
  }

  std::optional<Token> next() {
    auto t = peek();
    ahead_.reset();
    return t;
  }

  Token require(const std::string& what) {
    auto t = next();
    if (!t) {
      throw ParseError("expected " + what,
                       line_, static_cast<int>(text_.size()) + 1);
    }
    return *t;
  }

  void expect(const std::string& literal) {
    Token t = require("'" + literal + "'");
    if (t.text != literal) {
      throw ParseError("expected '" + literal + "', found '" + t.text + "'",
                       line_, t.column);
    }
  }

  bool done() { return !peek().has_value(); }

  /// Everything after the current position, trimmed; consumes the line.
  std::string rest() {
    ahead_.reset();
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string out = text_.substr(pos_);
    pos_ = text_.size();
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    return out;
  }

  int line() const { return line_; }

 private:
  std::optional<Token> scan() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) return std::nullopt;
    const int col = static_cast<int>(pos_) + 1;
    const char c = text_[pos_];
    if (c == '(' || c == ')' || c == '[' || c == ']' || c == ',') {
      ++pos_;
      return Token{std::string(1, c), col};
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      pos_ += 2;
      return Token{"->", col};
    }
    std::size_t end = pos_;
    while (end < text_.size()) {
      const char e = text_[end];
      if (std::isspace(static_cast<unsigned char>(e)) || e == '(' || e == ')' ||
          e == '[' || e == ']' || e == ',') {
        break;
      }
      if (e == '-' && end + 1 < text_.size() && text_[end + 1] == '>') break;
      ++end;
    }
    Token t{text_.substr(pos_, end - pos_), col};
    pos_ = end;
    return t;
  }

  std::string text_;
  std::size_t pos_ = 0;
  int line_;
  std::optional<std::optional<Token>> ahead_;
};

std::optional<double> try_parse_plain(const std::string& s) {
  double value = 0.0;
  const char* begin = s.data();
  const char* end = begin + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::optional<double> try_parse_number(const std::string& s) {
  const auto slash = s.find('/');
  if (slash != std::string::npos && slash > 0 && slash + 1 < s.size()) {
    const auto num = try_parse_plain(s.substr(0, slash));
    const auto den = try_parse_plain(s.substr(slash + 1));
    if (num && den && *den != 0.0) return *num / *den;
    return std::nullopt;
  }
  return try_parse_plain(s);
}

double parse_number_token(const Token& t, int line) {
  if (auto v = try_parse_number(t.text)) return *v;
  throw ParseError("expected a number, found '" + t.text + "'", line, t.column);
}

Point parse_point(LineLexer& lex) {
  Token t = lex.require("a point");
  if (t.text == "(") {
    const double a = parse_number_token(lex.require("a number"), lex.line());
    lex.expect(",");
    const double b = parse_number_token(lex.require("a number"), lex.line());
    lex.expect(")");
    return Point::pair(a, b);
  }
  if (auto v = try_parse_number(t.text)) return Point::scalar(*v);
  return Point::label(t.text);
}

Region parse_region(LineLexer& lex) {
  Token t = lex.require("a region");
  if (t.text == "[" || t.text == "(") {
    IntervalRegion iv;
    iv.lower_open = t.text == "(";
    iv.lower = parse_number_token(lex.require("a number"), lex.line());
    lex.expect(",");
    iv.upper = parse_number_token(lex.require("a number"), lex.line());
    Token closer = lex.require("']' or ')'");
    if (closer.text != "]" && closer.text != ")") {
      throw ParseError("expected ']' or ')', found '" + closer.text + "'",
                       lex.line(), closer.column);
    }
    iv.upper_open = closer.text == ")";
    return iv;
  }
  if (t.text == "x1=x2") return ComparisonRegion{Comparison::Equal};
  if (t.text == "x1<x2") return ComparisonRegion{Comparison::FirstLess};
  if (t.text == "x1>x2") return ComparisonRegion{Comparison::FirstGreater};
  if (t.text == "points") {
    PointListRegion pl;
    while (!lex.done() && lex.peek()->text != "->") {
      pl.points.push_back(parse_point(lex));
    }
    if (pl.points.empty()) {
      throw ParseError("point list region needs at least one point",
                       lex.line(), t.column);
    }
    return pl;
  }
  throw ParseError("unknown region '" + t.text + "'", lex.line(), t.column);
}

MapExpr parse_expr(LineLexer& lex) {
  Token t = lex.require("an expression");
  if (t.text == "const") return ConstantExpr{parse_point(lex)};
  if (t.text == "affine") {
    const double offset = parse_number_token(lex.require("an offset"), lex.line());
    const double slope = parse_number_token(lex.require("a slope"), lex.line());
    return AffineExpr{offset, slope};
  }
  if (t.text == "first-axis") return FirstAxisExpr{};
  if (t.text == "second-axis") return SecondAxisExpr{};
  if (t.text == "identity") return IdentityExpr{};
  throw ParseError("unknown expression '" + t.text + "'", lex.line(), t.column);
}

Clause parse_clause(LineLexer& lex) {
  Region region = parse_region(lex);
  lex.expect("->");
  MapExpr expr = parse_expr(lex);
  return Clause{std::move(region), std::move(expr)};
}

void require_line_end(LineLexer& lex) {
  if (auto t = lex.peek()) {
    throw ParseError("unexpected trailing '" + t->text + "'", lex.line(),
                     t->column);
  }
}

}  // namespace

Instance parse_instance(const std::string& text) {
  std::optional<std::string> id;
  std::optional<Domain> domain;
  std::optional<MetricKind> metric;
  std::vector<Clause> f_clauses;
  std::vector<Clause> g_clauses;
  CClassFunction cclass = CClassFunction::difference();
  std::optional<SimulationFunction> zeta;
  double c_g = 0.0;
  PropertyVariant variant = PropertyVariant::Standard;
  ExpectedOutcomes expected;
  bool expected_seen = false;
  std::vector<std::string> notes;

  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    LineLexer lex(raw, line_no);
    auto first = lex.peek();
    if (!first || first->text.front() == '#') continue;
    const Token keyword = *lex.next();

    if (keyword.text == "id") {
      id = lex.require("an identifier").text;
      require_line_end(lex);
    } else if (keyword.text == "domain") {
      const Token kind = lex.require("'interval' or 'finite'");
      if (kind.text == "interval") {
        Region region = parse_region(lex);
        const auto* iv = std::get_if<IntervalRegion>(&region);
        if (!iv) {
          throw ParseError("interval domain needs interval bounds", line_no,
                           kind.column);
        }
        Interval spec{iv->lower, iv->upper, iv->lower_open, iv->upper_open,
                      default_resolution};
        if (!lex.done()) {
          lex.expect("resolution");
          spec.grid_resolution = static_cast<int>(
              parse_number_token(lex.require("a resolution"), line_no));
        }
        require_line_end(lex);
        domain = Domain::interval(spec);
      } else if (kind.text == "finite") {
        std::vector<Point> points;
        while (!lex.done()) points.push_back(parse_point(lex));
        domain = Domain::finite(std::move(points));
      } else {
        throw ParseError("unknown domain kind '" + kind.text + "'", line_no,
                         kind.column);
      }
    } else if (keyword.text == "metric") {
      const Token name = lex.require("a metric name");
      metric = metric_kind_from_name(name.text);
      if (!metric) {
        throw ParseError("unknown metric '" + name.text + "'", line_no,
                         name.column);
      }
      require_line_end(lex);
    } else if (keyword.text == "f:") {
      f_clauses.push_back(parse_clause(lex));
      require_line_end(lex);
    } else if (keyword.text == "g:") {
      g_clauses.push_back(parse_clause(lex));
      require_line_end(lex);
    } else if (keyword.text == "cclass") {
      const Token name = lex.require("'difference' or 'damped'");
      if (name.text == "difference") {
        cclass = CClassFunction::difference();
      } else if (name.text == "damped") {
        const double factor =
            parse_number_token(lex.require("a damping factor"), line_no);
        try {
          cclass = CClassFunction::damped(factor);
        } catch (const DomainError& e) {
          throw ParseError(e.what(), line_no, name.column);
        }
      } else {
        throw ParseError("unknown comparison function '" + name.text + "'",
                         line_no, name.column);
      }
      require_line_end(lex);
    } else if (keyword.text == "zeta") {
      const Token name = lex.require("'linear' or 'rational'");
      if (name.text == "linear") {
        const double slope = parse_number_token(lex.require("a slope"), line_no);
        try {
          zeta = SimulationFunction::linear(slope);
        } catch (const DomainError& e) {
          throw ParseError(e.what(), line_no, name.column);
        }
      } else if (name.text == "rational") {
        zeta = SimulationFunction::rational();
      } else {
        throw ParseError("unknown simulation function '" + name.text + "'",
                         line_no, name.column);
      }
      require_line_end(lex);
    } else if (keyword.text == "cg") {
      c_g = parse_number_token(lex.require("a threshold"), line_no);
      require_line_end(lex);
    } else if (keyword.text == "variant") {
      const Token name = lex.require("'standard' or 'modified'");
      if (name.text == "standard") {
        variant = PropertyVariant::Standard;
      } else if (name.text == "modified") {
        variant = PropertyVariant::Modified;
      } else {
        throw ParseError("unknown variant '" + name.text + "'", line_no,
                         name.column);
      }
      require_line_end(lex);
    } else if (keyword.text == "expected") {
      const Token what = lex.require("an expected-outcome kind");
      if (what.text == "coincidence") {
        expected.coincidence_point = parse_point(lex);
      } else if (what.text == "common") {
        expected.common_fixed_point = parse_point(lex);
      } else if (what.text == "witness") {
        Point a = parse_point(lex);
        Point b = parse_point(lex);
        expected.witness_pairs.emplace_back(std::move(a), std::move(b));
      } else if (what.text == "witness-class") {
        const Token cls = lex.require("a class id");
        auto parsed = contraction_class_from_id(cls.text);
        if (!parsed) {
          throw ParseError("unknown contraction class '" + cls.text + "'",
                           line_no, cls.column);
        }
        expected.witness_class = *parsed;
      } else {
        throw ParseError("unknown expected-outcome kind '" + what.text + "'",
                         line_no, what.column);
      }
      expected_seen = true;
      require_line_end(lex);
    } else if (keyword.text == "note") {
      notes.push_back(lex.rest());
    } else {
      throw ParseError("unknown keyword '" + keyword.text + "'", line_no,
                       keyword.column);
    }
  }

  if (!id) throw ValidationError("instance is missing an id line");
  if (!domain) throw ValidationError("instance is missing a domain line");
  if (!metric) throw ValidationError("instance is missing a metric line");
  if (f_clauses.empty()) throw ValidationError("instance defines no f clauses");
  if (g_clauses.empty()) throw ValidationError("instance defines no g clauses");
  if (!zeta) throw ValidationError("instance is missing a zeta line");

  Instance instance{
      *id,
      MappingPair{MetricSpace{*domain, *metric}, PiecewiseMap(std::move(f_clauses)),
                  PiecewiseMap(std::move(g_clauses))},
      ControlSet{cclass, *zeta, c_g, variant},
      expected_seen ? std::optional<ExpectedOutcomes>(std::move(expected))
                    : std::nullopt,
      std::move(notes),
  };

  validate_mapping_pair(instance.pair);
  for (const auto& report : check_metric_axioms(instance.pair.space)) {
    if (!report.pass) {
      throw ValidationError("metric fails the " + report.axiom + " axiom");
    }
  }
  validate_control_set(instance.control);
  return instance;
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  out << "id " << instance.id << "\n";

  const Domain& domain = instance.pair.space.domain;
  if (domain.is_interval()) {
    const Interval& iv = domain.interval_spec();
    out << "domain interval " << (iv.lower_open ? "(" : "[")
        << format_double(iv.lower) << ", " << format_double(iv.upper)
        << (iv.upper_open ? ")" : "]") << " resolution " << iv.grid_resolution
        << "\n";
  } else {
    out << "domain finite";
    for (const auto& p : domain.points()) out << " " << p.to_string();
    out << "\n";
  }
  out << "metric " << metric_kind_name(instance.pair.space.metric) << "\n";
  for (const auto& clause : instance.pair.f.clauses()) {
    out << "f: " << region_to_string(clause.region) << " -> "
        << expr_to_string(clause.expr) << "\n";
  }
  for (const auto& clause : instance.pair.g.clauses()) {
    out << "g: " << region_to_string(clause.region) << " -> "
        << expr_to_string(clause.expr) << "\n";
  }
  out << "cclass " << instance.control.G.name() << "\n";
  out << "zeta " << instance.control.zeta.name() << "\n";
  out << "cg " << format_double(instance.control.c_g) << "\n";
  out << "variant " << property_variant_name(instance.control.variant) << "\n";
  if (instance.expected) {
    const auto& e = *instance.expected;
    if (e.coincidence_point) {
      out << "expected coincidence " << e.coincidence_point->to_string() << "\n";
    }
    if (e.common_fixed_point) {
      out << "expected common " << e.common_fixed_point->to_string() << "\n";
    }
    for (const auto& [a, b] : e.witness_pairs) {
      out << "expected witness " << a.to_string() << " " << b.to_string() << "\n";
    }
    if (e.witness_class) {
      out << "expected witness-class " << contraction_class_id(*e.witness_class)
          << "\n";
    }
  }
  for (const auto& note : instance.notes) out << "note " << note << "\n";
  return out.str();
}

Point parse_point_text(const std::string& text) {
  LineLexer lex(text, 1);
  Point p = parse_point(lex);
  require_line_end(lex);
  return p;
}

}  // namespace fixpoint
