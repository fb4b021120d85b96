#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zetabounds/bound_formulas.hpp"

namespace zetabounds {

enum class Outcome { Certified, Failed, Inconclusive };
std::string to_string(Outcome o);

struct Rect {
  double sigma_lo = 0, sigma_hi = 0;
  double t_lo = 0, t_hi = 0;
};

// A point where lhs - rhs >= margin was shown, or a violating sample.
struct Witness {
  double sigma = 0;
  double t = 0;
  double lhs = 0;
  double rhs = 0;
};

/// One region (or sample set) and what happened to it.
struct CheckPart {
  std::string name;
  std::vector<Rect> region;
  Outcome outcome = Outcome::Inconclusive;
  long cells = 0;      // cells or samples evaluated
  int depth = 0;       // deepest refinement level used
  double max_estimate = 0;  // largest lhs - rhs seen at cell centres
  double max_upper = 0;     // largest certified upper bound over final cells
  Witness peak;             // centre where max_estimate was seen
  std::optional<Witness> witness;
};

struct RegionCheck {
  std::string name;
  std::string description;
  std::string lhs;
  std::string rhs;
  double margin = 0;  // certified means lhs - rhs < margin everywhere
  int grid = 0;       // initial cells per axis
  int max_depth = 20;
  std::vector<CheckPart> parts;
  std::vector<std::string> notes;
  std::map<std::string, double> summary;

  // Failed beats inconclusive beats certified.
  Outcome outcome() const;
};

// (lhs, rhs) over a cell; s covers the cell.
using CellFn =
    std::function<std::pair<Ball, Ball>(const ComplexBall& s, const PrecisionContext& ctx)>;

/// Bisection prover: a cell is done when the ball value of lhs - rhs lies
/// below `margin`; an inconclusive cell is split in both axes (degenerate
/// axes stay whole) up to `max_depth`. Cells are processed concurrently.
CheckPart certify_region(const std::string& name, const CellFn& f, const Rect& rect, double margin,
                         int grid, int max_depth, const PrecisionContext& ctx);

RegionCheck check_lemma5_small_t(const PrecisionContext& ctx, int grid = 8, int max_depth = 20);
RegionCheck check_lemma5_large_t(const PrecisionContext& ctx, int samples = 200);
RegionCheck check_lemma8_small_t(const PrecisionContext& ctx, int grid = 8, int max_depth = 20);
RegionCheck check_corollary4_range(const PrecisionContext& ctx, int grid = 64, int max_depth = 20);

struct TrigPoly {
  std::vector<double> a;  // a_0 .. a_N

  int degree() const { return static_cast<int>(a.size()) - 1; }
  double operator()(double theta) const;
};

struct TrigReport {
  bool nonneg = false;
  // Certified lower bound on the minimum (within the nonneg tolerance).
  double min_lower = 0;
  double min_value = 0;
  double argmin = 0;
  double abs_sum = 0;
  bool zerofree_style = false;    // a_n >= 0 and a_1 > a_0
  bool reciprocal_style = false;  // sum |a_n| <= 2 a_1 with a_1 > 0
  std::optional<double> ratio;    // a_0 / a_1
  std::optional<Witness> witness;  // theta (in `t`) with a negative value
};

// Nonnegativity is asserted when the certified lower bound is >= -1e-10.
inline constexpr double kTrigTolerance = 1e-10;

TrigReport trig_criteria(const TrigPoly& p, int samples = 10000);

/// Grid search with a_1 = 1 and the other coefficients on multiples of
/// `step`; returns polynomials that are nonnegative, reciprocal-style and
/// have a_0/a_1 < 3/4. DomainError unless 2 <= N <= 6.
std::vector<TrigPoly> trig_search(int N, double step, long* examined = nullptr);

struct SpotReport {
  std::string cert_name;
  CertKind kind = CertKind::R1;
  double bound = 0;
  long samples = 0;
  long violations = 0;
  long unresolved = 0;  // samples where the ball straddled the bound
  double max_ratio = 0;
  std::optional<Witness> worst;
  std::optional<Witness> witness;  // first violation

  bool passed() const { return violations == 0 && unresolved == 0; }
};

/// Samples (sigma, t) uniformly in the certificate's region with
/// t <= t_max and compares the ball-evaluated quantity to the bound.
/// DomainError for invalid certificates or t_max outside (t_low, 1e5].
SpotReport spot_check(const BoundCertificate& cert, long samples, double t_max,
                      const PrecisionContext& ctx, std::uint64_t seed = 1);

/// "r1-22", "k1-500", "r2-22-500", "k2-500" built from the tabulated
/// parameters. DomainError for other names.
BoundCertificate named_certificate(const std::string& name, const PrecisionContext& ctx);
std::vector<std::string> certificate_names();

/// Samples t >= t0 and checks that k = k_index(t, omega1) satisfies k >= 3,
/// sigma_k <= 1 - omega2 (loglog t)^2/log t and
/// 1/(2^k - 2) <= 8 loglog t / (3 omega1 log t). Returns the violations.
struct KChainReport {
  long samples = 0;
  long violations = 0;
  std::optional<double> witness_t;
};
KChainReport check_k_chain(const GrowthParams& gp, long samples, const PrecisionContext& ctx,
                           std::uint64_t seed = 1);

}  // namespace zetabounds
