#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zetabounds/ball.hpp"
#include "zetabounds/zeta_eval.hpp"

namespace zetabounds {

/// A height t0 written the way the tables write it: a plain number, a
/// multiple of e^e ("ee", "2ee") or the verification height "H".
class Height {
 public:
  enum class Base { One, EE, H };

  static Height value(double v) { return Height(Base::One, v); }
  static Height ee(double multiple = 1.0) { return Height(Base::EE, multiple); }
  static Height H() { return Height(Base::H, 1.0); }
  /// Throws DomainError on anything that is not "ee", "<k>ee", "H" or a
  /// positive number.
  static Height parse(std::string_view text);

  Ball ball(const PrecisionContext& ctx) const;
  double approx() const;
  std::string label() const;
  Base base() const { return base_; }

  friend bool operator==(const Height& a, const Height& b) {
    return a.base_ == b.base_ && a.factor_ == b.factor_;
  }

 private:
  Height(Base base, double factor) : base_(base), factor_(factor) {}
  Base base_;
  double factor_;
};

/// Parameters of the growth bound |zeta(s)| <= A_kappa (log t)^B, valid for
/// t >= t0 and 1 - omega2 (loglog t)^2 / log t <= sigma <= 1 + kappa.
struct GrowthParams {
  Height t0 = Height::ee();
  double kappa = 0;
  Ball omega1;
  Ball omega2;
  Ball A_kappa;
  Ball B;
  bool published = false;

  /// Everything computed from (t0, kappa, omega1).
  static GrowthParams derive(const Height& t0, double kappa, const Ball& omega1,
                             const PrecisionContext& ctx);
  /// A rounded row (A and B rounded up, omega2 rounded down). Throws
  /// ConstraintError unless it is at least as conservative as the derived row.
  static GrowthParams rounded(const Height& t0, double kappa, const Ball& omega1, double A,
                              double B, double omega2, const PrecisionContext& ctx);

  // omega1 >= 8 loglog t / log t for every t >= t0.
  bool omega1_admissible(const PrecisionContext& ctx) const;
};

// Two-case omega2; DomainError when omega1 < 1 and loglog t0 <= 0.
Ball omega2(const Ball& omega1, const Ball& t0, const PrecisionContext& ctx);
Ball exponent_B(const Ball& omega1);
Ball a_kappa(double kappa, const Ball& t0, const PrecisionContext& ctx);
// A_kappa (log t)^B; DomainError if t < gp.t0.
Ball growth_bound(const Ball& t, const GrowthParams& gp, const PrecisionContext& ctx);
// floor(log(omega1 log t / loglog t) / log 2), evaluated in balls.
int k_index(double t, double omega1);

Ball Z_const(const Ball& sigma1, const Ball& t0, const PrecisionContext& ctx);
Ball V1(const Ball& d, const Ball& sigma1, const Ball& t0, const PrecisionContext& ctx);
// 1 + d * max_{t >= t0} loglog t / log t <= min(sigma1, (1 + gamma)/gamma).
bool V2_applicable(const Ball& d, const Ball& sigma1, const Ball& t0, const PrecisionContext& ctx);
// ConstraintError("V2_applicability") when not applicable.
Ball V2(const Ball& d, const Ball& sigma1, const Ball& t0, const PrecisionContext& ctx);

Ball C1(const Ball& epsilon, const Ball& t_prime, const Ball& omega2, const PrecisionContext& ctx);
Ball A3(const Ball& t_prime, const Ball& epsilon, const GrowthParams& gp, const PrecisionContext& ctx);
inline Ball A_max(const Ball& t0, const Ball& epsilon, const GrowthParams& gp,
                  const PrecisionContext& ctx) {
  return A3(t0, epsilon, gp, ctx);
}
Ball radius_r(const Ball& t_prime, const Ball& d, const Ball& C1);
Ball c1_const(const Ball& epsilon, const Ball& t0, const Ball& zero_free_c);
Ball alpha_fn(const Ball& d, const Ball& c1, const Ball& C1, const Ball& t_prime);

struct ConstraintFlag {
  std::string name;
  bool ok = false;
};

enum class CertKind { R1, K1, R2, K2, A_kappa_table, Z_table };
std::string to_string(CertKind kind);

/// A derived constant with the parameters that produced it and the outcome
/// of every constraint check. `value` is empty unless all checks pass.
struct BoundCertificate {
  CertKind kind = CertKind::R1;
  std::optional<Ball> value;
  double t_low = 0;
  double t_high = std::numeric_limits<double>::infinity();
  std::map<std::string, double> params;
  std::vector<ConstraintFlag> constraints;
  // Intermediate quantities (lambda1, alpha, ...), for reports.
  std::map<std::string, double> details;

  bool valid() const { return value.has_value(); }
  // Upper endpoint of the value, +inf when invalid.
  double upper() const;
  // First failing constraint name, empty when none.
  std::string first_failure() const;
  void check(std::string name, bool ok) { constraints.push_back({std::move(name), ok}); }
  bool all_ok() const;
};

struct MainLemmaParams {
  Height t0 = Height::ee();
  // Absent for the sigma >= 1 variant, where beta is pinned instead.
  std::optional<double> W;
  double d = 0;
  double epsilon = 0;
  double beta = 0;
  double sigma1 = 0;
  // Reciprocal of the zero-free constant: 21.233 for c0, 12, 16.7, ... for c_RH.
  double zero_free_c_inv = 21.233;
  GrowthParams growth;
  double d1 = 0;
};

/// Admissible Q1. C1 is evaluated at t' = t0; V ranges over V1 and, when
/// applicable, V2.
BoundCertificate Q1(const MainLemmaParams& p, const PrecisionContext& ctx);

// Smallest beta allowed by (d + 1/W)/(d + c1), rounded up to a double.
double beta_min(const MainLemmaParams& p, const PrecisionContext& ctx);
// d/(c1 + d) rounded up to a double.
double beta_pinned(const MainLemmaParams& p, const PrecisionContext& ctx);

/// Side conditions on c_RH for the t0 <= t <= H regime:
/// c_RH < (C1 loglog t0 - d)/2 and c_RH < e/2.
std::vector<ConstraintFlag> low_regime_checks(const MainLemmaParams& low,
                                              const PrecisionContext& ctx);

/// max of the t0 <= t <= H regime (c_RH) and the t >= H regime (c0).
/// With t0 >= H only the high regime is used.
BoundCertificate Q1_two_regime(double W, const Height& t0,
                               const std::optional<MainLemmaParams>& low,
                               const MainLemmaParams& high, const PrecisionContext& ctx);

/// Q1 with beta = d/(c1 + d), the sigma >= 1 bound.
BoundCertificate K1(MainLemmaParams p, const PrecisionContext& ctx);
BoundCertificate K1_two_regime(const Height& t0, const std::optional<MainLemmaParams>& low,
                               const MainLemmaParams& high, const PrecisionContext& ctx);

struct WScheduleEntry {
  double W = 0;
  double R1 = 0;
  Height t0 = Height::ee();
};

struct WSchedule {
  std::vector<WScheduleEntry> entries;
  double t0_valid = 0;
  // Strictly increasing W and every entry valid from t0_valid on.
  bool well_formed() const;
};

// sum_{j<J} R_{1,j} (1/W_j - 1/W_{j+1}) + R_{1,J}/W_J
Ball schedule_sum(const WSchedule& s, Precision prec);

BoundCertificate Q2(double d1, double sigma1, const Height& t0, const WSchedule& schedule,
                    double K1_val, const PrecisionContext& ctx);
/// The linear variant V exp(d1 K1) S, S the schedule sum. A diagnostic
/// shown next to Q2; it carries no certificate.
Ball Q2_tabulated_form(double d1, double sigma1, const Height& t0, const WSchedule& schedule,
                       double K1_val, const PrecisionContext& ctx);

BoundCertificate K2(double d1, double sigma1, const Height& t0, double K1_val,
                    const PrecisionContext& ctx);

}  // namespace zetabounds
