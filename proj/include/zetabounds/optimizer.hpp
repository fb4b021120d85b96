#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zetabounds/bound_formulas.hpp"

namespace zetabounds {

struct Axis {
  std::string name;
  double lo = 0;
  double hi = 0;
  bool log_scale = false;
};

struct SearchSpace {
  std::vector<Axis> axes;
  // Throws DomainError on empty intervals, log axes touching zero, or
  // epsilon/beta ranges outside (0, 1].
  void validate() const;
  const Axis* find(const std::string& name) const;
};

struct Evaluation {
  double value = 0;  // +inf when infeasible
  std::string failure;
};

using ObjectiveFn = std::function<Evaluation(const std::map<std::string, double>&)>;

struct MinimizeResult {
  std::map<std::string, double> best;
  double value = 0;
  long evaluations = 0;
  // Most frequent failing constraint when nothing was feasible.
  std::string most_violated;
  std::vector<std::pair<std::map<std::string, double>, double>> trace;
};

/// Grid scan with `grid_per_axis` points per free axis, then Nelder-Mead
/// from the five best grid points. Deterministic in (space, budget, seed).
MinimizeResult minimize(const ObjectiveFn& f, const SearchSpace& space, long budget,
                        std::uint64_t seed, int grid_per_axis = 8, bool keep_trace = false);

enum class Objective { Q1TwoRegime, K1, Q2, K2 };
Objective parse_objective(const std::string& name);
std::string to_string(Objective o);

struct FixedInputs {
  double W = 22;
  Height t0 = Height::ee();
  // Q1: reciprocal c_RH for the t0 <= t <= H regime; defaults to the
  // tabulated choice for W.
  std::optional<double> c_RH_inv;
  // Q2: defaults to the published R1 schedule valid at t0.
  std::optional<WSchedule> schedule;
  // Q2/K2: defaults to the published K1 valid at t0.
  std::optional<double> K1_val;
};

struct OptimizationResult {
  Objective objective = Objective::Q1TwoRegime;
  std::map<std::string, double> best_params;
  double best_value = 0;
  BoundCertificate certificate;
  long evaluations = 0;
  bool feasible = false;
  std::string infeasibility;
  std::vector<std::pair<std::map<std::string, double>, double>> trace;
};

struct OptimizeOptions {
  long budget = 0;  // 0: objective default
  std::uint64_t seed = 1;
  // Search runs at this precision; the final certificate at the caller's.
  Precision search_bits = 64;
  bool keep_trace = false;
  // Replaces the default space of every regime when set.
  std::optional<SearchSpace> space;
};

long default_budget(Objective o);
double default_c_RH_inv(double W);
// Default spaces. `regime` is "high", "low" (Q1/K1) or "" (Q2/K2).
SearchSpace default_space(Objective o, const std::string& regime);

OptimizationResult optimize(Objective objective, const FixedInputs& fixed,
                            const OptimizeOptions& options, const PrecisionContext& ctx);

/// One compared quantity of a reproduced table.
struct TableRow {
  int table = 0;
  std::string row;
  std::string quantity;
  double printed = 0;
  std::optional<double> computed;
  double deviation = 0;  // computed/printed - 1
  std::vector<ConstraintFlag> checks;
  std::map<std::string, double> extra;
  std::map<std::string, double> params;
  std::vector<ConstraintFlag> constraints;

  bool ok() const;
};

struct ReproduceOptions {
  double tolerance = 0.005;
  bool reoptimize = true;
  long budget = 0;
  std::uint64_t seed = 1;
};

/// Tables 1..6 from their formulas; rows outside tolerance are reported,
/// never thrown. DomainError for n outside 1..6.
std::vector<TableRow> reproduce_table(int n, const PrecisionContext& ctx,
                                      const ReproduceOptions& options = {});

}  // namespace zetabounds
