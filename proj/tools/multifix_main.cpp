// multifix -- exact-arithmetic analyzer for multivalued self-maps of finite
// metric spaces: minimal contraction/perimeter factors, fixed and periodic
// points, the forming-triangle property, a constructive fixed-point
// iteration with per-step bound verification, and an instance-space search.

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include <fstream>
#include <sstream>
#include <string>

#include "multifix/analysis.hpp"
#include "multifix/generator.hpp"
#include "multifix/instance_io.hpp"
#include "multifix/iteration.hpp"
#include "multifix/report_io.hpp"
#include "multifix/search.hpp"

namespace {

using namespace multifix;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInstance = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitIterationFailed = 3;
constexpr int kExitSelfCheck = 4;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError(fmt::format("cannot read '{}'", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Loaded {
  InstanceDocument doc;
  Instance instance;
};

Loaded load(const std::string& path) {
  auto doc = parse_instance_document(slurp(path));
  auto instance = realize(doc);
  return {std::move(doc), std::move(instance)};
}

int cmd_validate(const std::string& path) {
  Loaded loaded = load(path);
  fmt::print("instance valid: {} point(s), {} metric, map total\n",
             loaded.instance.space.size(), metric_kind_name(loaded.doc.metric));
  return kExitOk;
}

int cmd_analyze(const std::string& path, bool json_mode,
                const std::vector<std::size_t>& periods) {
  Loaded loaded = load(path);
  auto classified = classify(loaded.instance.space, loaded.instance.map, periods);
  auto report = build_report(loaded.instance.space, classified, loaded.doc.metric);
  fmt::print("{}", json_mode ? emit_report_json(report) : emit_report_human(report));
  return kExitOk;
}

int cmd_fixed_points(const std::string& path, bool json_mode) {
  Loaded loaded = load(path);
  auto fixed = fixed_points(loaded.instance.map);
  std::vector<std::string> labels;
  for (PointId p : fixed) labels.push_back(loaded.instance.space.label(p));
  if (json_mode) {
    fmt::print("{}", canonical_dump(nlohmann::json{{"fixed_points", labels}}));
  } else if (labels.empty()) {
    fmt::print("fixed points: (none)\n");
  } else {
    fmt::print("fixed points: {}\n", fmt::join(labels, ", "));
  }
  return kExitOk;
}

int cmd_iterate(const std::string& path, const std::string& start_label,
                const std::string& lambda_text, const std::string& policy_name,
                std::size_t max_steps, bool unrestricted, bool json_mode) {
  Loaded loaded = load(path);
  const auto& space = loaded.instance.space;
  const auto& map = loaded.instance.map;

  auto start = space.index_of(start_label);
  if (!start) {
    throw PreconditionError(fmt::format("start point '{}' is not in the space", start_label));
  }

  Analysis inst(space, map);
  auto classified = classify(space, map);

  IterationConfig config;
  config.start = *start;
  config.max_steps = max_steps;
  config.policy = policy_name == "lex" ? Policy::Lex : Policy::NearestLex;
  config.theorem4_mode = !unrestricted;
  if (!lambda_text.empty()) {
    config.lambda = Rational::parse(lambda_text);
  } else {
    config.lambda = classified.lambdas.lambda_min_mlcp;
  }

  IterationTrace trace = run_iteration(inst, config);

  auto report = build_report(space, classified, loaded.doc.metric);
  report.trace = build_trace_document(space, trace, config);
  fmt::print("{}", json_mode ? emit_report_json(report) : emit_report_human(report));

  return trace.outcome == IterationOutcome::FixedPointFound ? kExitOk : kExitIterationFailed;
}

int cmd_search(const GenConfig& config, bool exhaustive, const std::string& filter_name,
               std::uint64_t budget, bool json_mode) {
  HuntOptions options;
  options.exhaustive = exhaustive;
  options.budget = budget;
  if (filter_name == "counterexample") {
    options.filter = CandidateFilter::Counterexample;
  } else if (filter_name == "all") {
    options.filter = CandidateFilter::All;
  } else {
    options.filter = CandidateFilter::OpenGap;
  }

  HuntFindings findings = hunt_open_problem(config, options);

  FindingsEcho echo{exhaustive ? "exhaustive" : "random", config, filter_name};
  fmt::print("{}", json_mode ? emit_findings_json(findings, echo)
                             : emit_findings_human(findings, echo));
  return kExitOk;
}

int cmd_examples(const std::string& name, const std::string& emit_path) {
  std::string text = emit_instance(builtin_document(name));
  if (emit_path.empty()) {
    fmt::print("{}", text);
    return kExitOk;
  }
  std::ofstream out(emit_path, std::ios::binary);
  if (!out) throw PreconditionError(fmt::format("cannot write '{}'", emit_path));
  out << text;
  fmt::print("wrote {}\n", emit_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "multifix: exact analysis of multivalued self-maps on finite metric spaces"};
  app.require_subcommand(1);

  std::string file;
  bool json_mode = false;

  auto* validate = app.add_subcommand("validate", "parse an instance and check all axioms");
  validate->add_option("file", file, "instance JSON file")->required();

  std::vector<std::size_t> periods;
  auto* analyze = app.add_subcommand("analyze", "full classification of one instance");
  analyze->add_option("file", file, "instance JSON file")->required();
  analyze->add_flag("--json", json_mode, "emit the canonical JSON report");
  analyze->add_option("--period", periods, "also report prime-period points for this n")
      ->check(CLI::PositiveNumber);

  std::string start_label;
  std::string lambda_text;
  std::string policy = "nearest-lex";
  std::size_t max_steps = 0;
  bool unrestricted = false;
  auto* iterate = app.add_subcommand(
      "iterate", "run the constructive fixed-point iteration and verify its bounds");
  iterate->add_option("file", file, "instance JSON file")->required();
  iterate->add_option("--start", start_label, "label of x_0")->required();
  iterate->add_option("--lambda", lambda_text,
                      "contraction factor (default: the instance's lambda_min_mlcp)");
  iterate->add_option("--policy", policy, "selection policy")
      ->check(CLI::IsMember({"nearest-lex", "lex"}));
  iterate->add_option("--max-steps", max_steps, "selection budget (default 10*|X|^2)");
  iterate->add_flag("--unrestricted", unrestricted,
                    "allow lambda in [1/2, 1) with no fixed-point guarantee");
  iterate->add_flag("--json", json_mode, "emit the canonical JSON report with trace");

  auto* fixed = app.add_subcommand("fixed-points", "brute-force membership scan only");
  fixed->add_option("file", file, "instance JSON file")->required();
  fixed->add_flag("--json", json_mode, "emit JSON");

  GenConfig gen;
  bool exhaustive = false;
  std::string filter = "open-gap";
  std::uint64_t budget = 1'000'000;
  auto* search = app.add_subcommand(
      "search", "classify generated instances and hunt the unresolved factor range");
  search->add_option("--points", gen.n_points, "points per instance (>= 3)")->required();
  search->add_option("--instances", gen.count, "instances to sample (random mode)");
  search->add_option("--seed", gen.seed, "master seed");
  search->add_option("--weight-max", gen.weight_max, "max edge weight before closure");
  search->add_option("--image-min", gen.image_size_min, "min image size");
  search->add_option("--image-max", gen.image_size_max, "max image size");
  search->add_flag("--exhaustive", exhaustive,
                   "enumerate every weight assignment and every map (n <= 4, weights <= 3)");
  search->add_option("--filter", filter, "which regimes to emit candidates from")
      ->check(CLI::IsMember({"open-gap", "counterexample", "all"}));
  search->add_option("--budget", budget, "exhaustive enumeration node limit");
  search->add_flag("--json", json_mode, "emit the findings report as JSON");

  std::string example_name;
  std::string emit_path;
  auto* examples = app.add_subcommand("examples", "write one of the built-in instances");
  examples->add_option("--name", example_name, "ex1 | cyclic7 | nadler-gap")
      ->required()
      ->check(CLI::IsMember({"ex1", "cyclic7", "nadler-gap"}));
  examples->add_option("--emit", emit_path, "write to this path instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitPrecondition;
  }

  try {
    if (validate->parsed()) return cmd_validate(file);
    if (analyze->parsed()) return cmd_analyze(file, json_mode, periods);
    if (iterate->parsed()) {
      return cmd_iterate(file, start_label, lambda_text, policy, max_steps, unrestricted,
                         json_mode);
    }
    if (fixed->parsed()) return cmd_fixed_points(file, json_mode);
    if (search->parsed()) return cmd_search(gen, exhaustive, filter, budget, json_mode);
    if (examples->parsed()) return cmd_examples(example_name, emit_path);
  } catch (const ParseError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitInvalidInstance;
  } catch (const PreconditionError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitPrecondition;
  } catch (const SelfCheckError& e) {
    fmt::print(stderr, "self-check failure: {}\n", e.what());
    return kExitSelfCheck;
  } catch (const std::exception& e) {
    fmt::print(stderr, "internal error: {}\n", e.what());
    return kExitSelfCheck;
  }
  return kExitOk;
}
