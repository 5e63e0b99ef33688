#include "fixpoint/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "fixpoint/errors.hpp"
#include "fixpoint/fixtures.hpp"
#include "fixpoint/instance_format.hpp"
#include "fixpoint/report.hpp"
#include "fixpoint/solver.hpp"
#include "fixpoint/version.hpp"

namespace fixpoint {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Options shared by the instance-consuming subcommands.
struct CommonOpts {
  std::string example;
  std::string file;
  int resolution = default_resolution;
  double tol = tol::coincidence;
  int max_iter = default_max_iter;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& opts, double default_tol) {
  opts.tol = default_tol;
  cmd->add_option("--example", opts.example, "built-in instance id");
  cmd->add_option("--file", opts.file, "instance file path");
  cmd->add_option("--resolution", opts.resolution, "interval sampling resolution")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--tol", opts.tol, "acceptance tolerance")
      ->capture_default_str();
  cmd->add_option("--max-iter", opts.max_iter, "iteration budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
}

Instance load_instance(const CommonOpts& opts) {
  const bool has_example = !opts.example.empty();
  const bool has_file = !opts.file.empty();
  if (has_example == has_file) {
    throw ValidationError("give exactly one of --example or --file");
  }
  if (has_example) return load_example(opts.example);
  std::ifstream in(opts.file);
  if (!in) throw ValidationError("cannot read instance file " + opts.file);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

json common_flags(const CommonOpts& opts) {
  json flags;
  flags["resolution"] = opts.resolution;
  flags["tol"] = opts.tol;
  flags["max_iter"] = opts.max_iter;
  return flags;
}

void emit(const CommonOpts& opts, const std::string& command,
          const std::string& instance_id, const json& flags, const json& payload,
          double timing_ms, const std::string& text, std::ostream& out) {
  if (opts.format == "structured") {
    out << report_envelope(command, instance_id, flags, payload, timing_ms).dump(2)
        << "\n";
  } else {
    out << text;
  }
}

int run_verify(const CommonOpts& opts, const std::vector<std::string>& class_ids,
               std::ostream& out) {
  const Instance instance = load_instance(opts);

  std::vector<ContractionClass> classes;
  if (class_ids.empty()) {
    classes = all_contraction_classes();
  } else {
    for (const auto& id : class_ids) {
      auto cls = contraction_class_from_id(id);
      if (!cls) throw ValidationError("unknown contraction class '" + id + "'");
      classes.push_back(*cls);
    }
  }

  const auto start = Clock::now();
  const ClassificationReport report =
      classify(instance.pair, instance.control, opts.resolution, classes);
  const AxiomReport inclusion =
      check_range_inclusion(instance.pair, opts.resolution);
  const double elapsed = ms_since(start);

  std::ostringstream text;
  text << "instance " << instance.id << ": " << report.sample_points
       << " sample points, " << report.ordered_pairs << " ordered pairs\n";
  bool any_violated = false;
  for (const auto& result : report.results) {
    text << "class " << contraction_class_id(result.cls) << ": "
         << class_status_name(result.status);
    if (is_experimental(result.cls)) text << " [experimental]";
    text << " (holds " << result.holds << ", violated " << result.violated
         << ", vacuous " << result.vacuous << ", not-applicable "
         << result.not_applicable << ")\n";
    for (const auto& w : result.witnesses) {
      text << "  witness x=" << w.x.to_string() << " y=" << w.y.to_string()
           << " lhs=" << format_double(w.lhs) << "\n";
    }
    if (result.witnesses_truncated) {
      text << "  (witness list capped at " << max_grid_witnesses << ")\n";
    }
    any_violated |= result.status == ClassStatus::Violated;
  }
  text << "range-inclusion: " << (inclusion.pass ? "pass" : "FAIL");
  if (!inclusion.note.empty()) text << " (" << inclusion.note << ")";
  text << "\n";

  json flags = common_flags(opts);
  flags["classes"] = json::array();
  for (const auto& c : classes) flags["classes"].push_back(contraction_class_id(c));
  json payload;
  payload["classification"] = to_json(report);
  payload["range_inclusion"] = to_json(inclusion);

  emit(opts, "verify", instance.id, flags, payload, elapsed, text.str(), out);
  return any_violated ? 1 : 0;
}

int run_solve(const CommonOpts& opts, const std::string& start_text,
              std::ostream& out) {
  const Instance instance = load_instance(opts);
  const Point start_point = parse_point_text(start_text);

  const auto start = Clock::now();
  const Orbit orbit =
      jungck_orbit(instance.pair, start_point, opts.max_iter, opts.tol);
  const double elapsed = ms_since(start);

  std::ostringstream text;
  text << "instance " << instance.id << ": iteration from "
       << start_point.to_string() << "\n";
  text << "termination: " << termination_name(orbit.termination) << " after "
       << orbit.step_distances.size() << " steps\n";
  if (!orbit.y_seq.empty()) {
    text << "last value: " << orbit.y_seq.back().to_string() << "\n";
  }
  if (!orbit.step_distances.empty()) {
    text << "last step distance: " << format_double(orbit.step_distances.back())
         << "\n";
  }

  json flags = common_flags(opts);
  flags["start"] = start_text;
  json payload;
  payload["orbit"] = to_json(orbit);

  emit(opts, "solve", instance.id, flags, payload, elapsed, text.str(), out);
  return 0;
}

int run_coincidence(const CommonOpts& opts, bool want_common, std::ostream& out) {
  const Instance instance = load_instance(opts);

  const auto start = Clock::now();
  const auto results = find_coincidence(instance.pair, opts.resolution, opts.tol);
  const double elapsed = ms_since(start);

  std::ostringstream text;
  json payload;
  payload["coincidences"] = json::array();
  text << "instance " << instance.id << ": " << results.size()
       << " coincidence point(s)\n";
  for (const auto& r : results) {
    text << "v=" << r.v.to_string() << " u=" << r.u.to_string()
         << " residual=" << format_double(r.residual)
         << (r.unique_on_sample ? " (unique on sample)" : "") << "\n";
    payload["coincidences"].push_back(to_json(r));
  }
  if (want_common) {
    if (results.size() != 1) {
      text << "common fixed point: skipped (need exactly one coincidence)\n";
      payload["common_fixed_point"] = nullptr;
    } else {
      try {
        const Point u = common_fixed_point(instance.pair, results.front(), opts.tol);
        text << "common fixed point: " << u.to_string()
             << " (maps weakly compatible)\n";
        payload["common_fixed_point"] = to_json(u);
      } catch (const Error& e) {
        text << "common fixed point: none (" << e.what() << ")\n";
        payload["common_fixed_point"] = nullptr;
        payload["common_fixed_point_error"] = e.what();
      }
    }
  }

  json flags = common_flags(opts);
  flags["common"] = want_common;
  emit(opts, "coincidence", instance.id, flags, payload, elapsed, text.str(), out);
  return 0;
}

int run_axioms(const CommonOpts& opts, std::ostream& out) {
  const Instance instance = load_instance(opts);

  const auto start = Clock::now();
  std::vector<AxiomReport> reports = check_metric_axioms(instance.pair.space);
  const auto grid = default_probe_grid();
  reports.push_back(check_c_class(instance.control.G, grid));
  reports.push_back(check_cg_property(instance.control, grid));
  reports.push_back(
      check_simulation_conditions(instance.control, grid, default_limit_probes()));
  const double elapsed = ms_since(start);

  std::ostringstream text;
  text << "instance " << instance.id << "\n";
  json payload;
  payload["axioms"] = json::array();
  for (const auto& r : reports) {
    text << r.axiom << ": " << (r.pass ? "pass" : "FAIL");
    if (!r.pass && !r.note.empty()) text << " (" << r.note << ")";
    text << "\n";
    payload["axioms"].push_back(to_json(r));
  }

  emit(opts, "axioms", instance.id, common_flags(opts), payload, elapsed,
       text.str(), out);
  return 0;
}

int run_example(const std::string& id, const std::string& out_path,
                std::ostream& out, std::ostream& err) {
  const Instance instance = load_example(id);
  const std::string serialized = serialize_instance(instance);
  if (out_path.empty()) {
    out << serialized;
    return 0;
  }
  std::ofstream file(out_path);
  if (!file) {
    err << "cannot write " << out_path << "\n";
    return 2;
  }
  file << serialized;
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"contraction-condition verifier and coincidence solver"};
  app.require_subcommand(1);

  CommonOpts verify_opts;
  std::vector<std::string> class_ids;
  auto* verify = app.add_subcommand(
      "verify", "classify a mapping pair against the contraction conditions");
  add_common(verify, verify_opts, tol::coincidence);
  verify->add_option("--class", class_ids,
                     "restrict to these classes (repeatable)");

  CommonOpts solve_opts;
  std::string start_text;
  auto* solve = app.add_subcommand(
      "solve", "run the alternating iteration from a start point");
  add_common(solve, solve_opts, tol::convergence);
  solve->add_option("--start", start_text, "initial point")->required();

  CommonOpts coin_opts;
  bool want_common = false;
  auto* coincidence = app.add_subcommand(
      "coincidence", "locate points where f and g agree");
  add_common(coincidence, coin_opts, tol::coincidence);
  coincidence->add_flag("--common", want_common,
                        "also derive the common fixed point");

  CommonOpts axiom_opts;
  auto* axioms = app.add_subcommand(
      "axioms", "check metric and control-function axioms");
  add_common(axioms, axiom_opts, tol::coincidence);

  std::string example_id;
  std::string example_out;
  auto* example = app.add_subcommand(
      "example", "write a built-in instance in the instance-file format");
  example->add_option("id", example_id, "instance id")->required();
  example->add_option("--out", example_out, "output path (default: stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back(tool_name);
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return run_verify(verify_opts, class_ids, out);
    if (*solve) return run_solve(solve_opts, start_text, out);
    if (*coincidence) return run_coincidence(coin_opts, want_common, out);
    if (*axioms) return run_axioms(axiom_opts, out);
    if (*example) return run_example(example_id, example_out, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand selected\n";
  return 2;
}

}  // namespace fixpoint
