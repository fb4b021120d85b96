// Command-line front end: table reproduction, optimization runs,
// verification suites and report summaries.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "report.hpp"
#include "zetabounds/errors.hpp"
#include "zetabounds/optimizer.hpp"
#include "zetabounds/published_tables.hpp"
#include "zetabounds/verifier.hpp"

namespace {

using namespace zetabounds;
using report::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInfeasible = 2;
constexpr int kInconclusive = 3;
constexpr int kUsage = 64;

struct RunConfig {
  unsigned precision = 128;
  double tolerance = 0.005;
  std::uint64_t seed = 1;
  long budget = 0;
  std::string format = "json";
  std::string out;
  std::optional<double> W;
  std::optional<std::string> t0;
  std::optional<std::string> cert;

  // table
  int table = 0;
  bool no_reoptimize = false;
  // optimize
  std::string objective;
  std::optional<double> c_rh_inv;
  bool trace = false;
  unsigned search_precision = 64;
  // verify
  std::string suite;
  long samples = 200;
  double t_max = 1e4;
  int grid = 8;
  int depth = 20;
  int degree = 4;
  double step = 0.05;
  // summary
  std::string report_path;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Collects records, writes them to --out or stdout, and prints the summary.
class Sink {
 public:
  explicit Sink(const RunConfig& cfg) : format_(report::parse_format(cfg.format)) {
    if (!cfg.out.empty()) {
      file_ = std::make_unique<std::ofstream>(cfg.out);
      if (!*file_) throw UsageError("cannot open " + cfg.out);
    }
    writer_ = std::make_unique<report::Writer>(file_ ? *file_ : std::cout, format_);
  }

  void add(const json& r) {
    writer_->write(r);
    records_.push_back(r);
  }

  void finish() {
    const std::string s = report::summarize(records_);
    if (file_) {
      file_->flush();
      std::cout << s;
    } else {
      std::cerr << s;
    }
  }

 private:
  report::Format format_;
  std::unique_ptr<std::ofstream> file_;
  std::unique_ptr<report::Writer> writer_;
  std::vector<json> records_;
};

void validate(const RunConfig& cfg, const std::string& command) {
  if (cfg.precision < 64) throw UsageError("--precision must be at least 64");
  if (!(cfg.tolerance > 0)) throw UsageError("--tolerance must be positive");
  if (cfg.budget != 0 && cfg.budget < 1000) throw UsageError("--budget must be 0 (default) or >= 1000");
  report::parse_format(cfg.format);
  const bool opt = command == "optimize";
  if (cfg.W && !(opt && (cfg.objective == "q1" || cfg.objective == "q2"))) {
    throw UsageError("--W only applies to optimize q1 and q2");
  }
  if (cfg.W && !(*cfg.W > 0)) throw UsageError("--W must be positive");
  if (cfg.t0 && !opt) throw UsageError("--t0 only applies to optimize");
  if (cfg.t0) Height::parse(*cfg.t0);
  if (cfg.c_rh_inv && !(opt && cfg.objective == "q1")) throw UsageError("--c-rh-inv only applies to optimize q1");
  if (cfg.cert && !(command == "verify" && cfg.suite == "spot")) {
    throw UsageError("--cert only applies to verify spot");
  }
  if (cfg.cert && *cfg.cert != "all") {
    std::stringstream ss(*cfg.cert);
    std::string name;
    const auto names = certificate_names();
    while (std::getline(ss, name, ',')) {
      if (std::find(names.begin(), names.end(), name) == names.end()) {
        throw UsageError("unknown certificate " + name);
      }
    }
  }
}

int cmd_table(const RunConfig& cfg) {
  const PrecisionContext ctx(cfg.precision);
  ReproduceOptions o;
  o.tolerance = cfg.tolerance;
  o.reoptimize = !cfg.no_reoptimize;
  o.budget = cfg.budget;
  o.seed = cfg.seed;
  Sink sink(cfg);
  const auto rows = reproduce_table(cfg.table, ctx, o);
  const TableRow* first_bad = nullptr;
  for (const auto& r : rows) {
    sink.add(report::table_record(r));
    if (!r.ok() && !first_bad) first_bad = &r;
  }
  sink.finish();
  if (first_bad) {
    std::cerr << "out of tolerance: table " << cfg.table << " row " << first_bad->row << " "
              << first_bad->quantity << '\n';
    return kFailed;
  }
  return kOk;
}

int cmd_optimize(const RunConfig& cfg) {
  const PrecisionContext ctx(cfg.precision);
  const Objective obj = parse_objective(cfg.objective);
  FixedInputs fixed;
  if (cfg.W) fixed.W = *cfg.W;
  fixed.t0 = cfg.t0 ? Height::parse(*cfg.t0) : Height::ee();
  fixed.c_RH_inv = cfg.c_rh_inv;
  OptimizeOptions o;
  o.budget = cfg.budget;
  o.seed = cfg.seed;
  o.search_bits = cfg.search_precision;
  o.keep_trace = cfg.trace;

  Sink sink(cfg);
  const OptimizationResult res = optimize(obj, fixed, o, ctx);
  std::string row = "t0=" + fixed.t0.label();
  if (obj == Objective::Q1TwoRegime || obj == Objective::Q2) {
    std::ostringstream w;
    w << fixed.W;
    row = "W=" + w.str() + "," + row;
  }
  sink.add(report::optimize_record(res, row));
  for (std::size_t i = 0; i < res.trace.size(); ++i) {
    sink.add(report::trace_record(res.trace[i].first, res.trace[i].second, static_cast<long>(i)));
  }
  sink.finish();
  if (!res.feasible) {
    std::cerr << "infeasible: most violated constraint " << res.infeasibility << '\n';
    return kInfeasible;
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  const PrecisionContext ctx(cfg.precision);
  Sink sink(cfg);
  std::vector<json> records;
  auto add_region = [&](const RegionCheck& rc) {
    for (const auto& r : report::region_records(rc)) records.push_back(r);
  };

  if (cfg.suite == "lemma5") {
    add_region(check_lemma5_small_t(ctx, cfg.grid, cfg.depth));
    add_region(check_lemma5_large_t(ctx, static_cast<int>(cfg.samples)));
  } else if (cfg.suite == "lemma8") {
    add_region(check_lemma8_small_t(ctx, cfg.grid, cfg.depth));
  } else if (cfg.suite == "cor4") {
    add_region(check_corollary4_range(ctx, std::max(cfg.grid, 1), cfg.depth));
  } else if (cfg.suite == "trig") {
    const TrigPoly classic{{3, 4, 1}};
    records.push_back(report::trig_record(classic, trig_criteria(classic), "3,4,1"));
    long examined = 0;
    const auto found = trig_search(cfg.degree, cfg.step, &examined);
    records.push_back(report::trig_search_record(cfg.degree, cfg.step, examined, found));
  } else if (cfg.suite == "spot") {
    std::vector<std::string> names;
    if (!cfg.cert || *cfg.cert == "all") {
      names = certificate_names();
    } else {
      std::stringstream ss(*cfg.cert);
      std::string n;
      while (std::getline(ss, n, ',')) names.push_back(n);
    }
    for (const auto& n : names) {
      SpotReport r = spot_check(named_certificate(n, ctx), cfg.samples, cfg.t_max, ctx, cfg.seed);
      r.cert_name = n;
      records.push_back(report::spot_record(r, cfg.t_max));
    }
  }

  bool failed = false, inconclusive = false;
  for (const auto& r : records) {
    sink.add(r);
    const std::string st = r["status"];
    if (st == "fail" && !failed) {
      failed = true;
      std::cerr << "failed: " << r["row"].get<std::string>() << " witness " << r["witness"].dump() << '\n';
    }
    inconclusive = inconclusive || st == "inconclusive";
  }
  sink.finish();
  if (failed) return kFailed;
  return inconclusive ? kInconclusive : kOk;
}

int cmd_summary(const RunConfig& cfg) {
  std::ifstream in(cfg.report_path);
  if (!in) throw UsageError("cannot read " + cfg.report_path);
  const auto records = report::read_records(in);
  const std::string s = report::summarize(records);
  std::cout << s;
  if (s.find("overall: fail") != std::string::npos) return kFailed;
  if (s.find("overall: inconclusive") != std::string::npos) return kInconclusive;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit bounds for zeta'/zeta and 1/zeta: tables, optimization, verification"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value file with option defaults");
  RunConfig cfg;

  auto global = [&](CLI::App* sub) {
    sub->add_option("--precision", cfg.precision, "working precision in bits (>= 64)");
    sub->add_option("--tolerance", cfg.tolerance, "relative tolerance for table matching");
    sub->add_option("--seed", cfg.seed, "seed for grid offsets and sampling");
    sub->add_option("--budget", cfg.budget, "objective evaluations (0: default)");
    sub->add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out, "report path (default stdout)");
    sub->add_option("--W", cfg.W, "zero-free width parameter W");
    sub->add_option("--t0", cfg.t0, "height: ee, <k>ee, H or a number");
    sub->add_option("--cert", cfg.cert, "spot-check certificates, comma separated or all");
  };
  global(&app);
  for (auto* opt : app.get_options()) opt->configurable();

  auto* table = app.add_subcommand("table", "reproduce a table (1..6)");
  table->add_option("n", cfg.table, "table number")->required()->check(CLI::Range(1, 6));
  table->add_flag("--no-reoptimize", cfg.no_reoptimize, "skip re-optimization of tables 3-6");

  auto* optimize_cmd = app.add_subcommand("optimize", "minimize q1, k1, q2 or k2");
  optimize_cmd->add_option("objective", cfg.objective, "objective")
      ->required()
      ->check(CLI::IsMember({"q1", "k1", "q2", "k2"}));
  optimize_cmd->add_option("--c-rh-inv", cfg.c_rh_inv, "1/c_RH for the t0 <= t <= H regime");
  optimize_cmd->add_flag("--trace", cfg.trace, "emit every evaluated point");
  optimize_cmd->add_option("--search-precision", cfg.search_precision, "bits used while searching");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", cfg.suite, "suite")
      ->required()
      ->check(CLI::IsMember({"lemma5", "lemma8", "cor4", "trig", "spot"}));
  verify->add_option("--samples", cfg.samples, "samples per sampled check");
  verify->add_option("--tmax", cfg.t_max, "largest t for spot checks (<= 1e5)");
  verify->add_option("--grid", cfg.grid, "initial cells per axis");
  verify->add_option("--depth", cfg.depth, "maximum refinement depth");
  verify->add_option("--degree", cfg.degree, "trig search degree (2..6)");
  verify->add_option("--step", cfg.step, "trig search grid step");

  auto* summary = app.add_subcommand("summary", "summarize a report file");
  summary->add_option("report", cfg.report_path, "JSON-lines or CSV report")->required();

  for (auto* sub : {table, optimize_cmd, verify, summary}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    validate(cfg, command);
    if (command == "table") return cmd_table(cfg);
    if (command == "optimize") return cmd_optimize(cfg);
    if (command == "verify") return cmd_verify(cfg);
    return cmd_summary(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConstraintError& e) {
    std::cerr << "constraint " << e.constraint() << ": " << e.what() << '\n';
    return kInfeasible;
  }
}
