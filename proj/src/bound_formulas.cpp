#include "zetabounds/bound_formulas.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>

#include "zetabounds/errors.hpp"

namespace zetabounds {
namespace {

Ball ee_ball(const PrecisionContext& ctx) { return exp(ctx.e()); }

Ball loglog(const Ball& t) { return log(log(t)); }

// Not certainly below: used where a tabulated value sits exactly on the
// boundary of an inequality (omega1 = 8/e, t0 = e^e) and balls cannot
// separate the two sides.
bool not_below(const Ball& a, const Ball& b) { return !certainly_lt(a, b); }

// Runs f, turning evaluation failures into a failed named check.
bool guarded(BoundCertificate& cert, const std::string& name, const std::function<void()>& f) {
  try {
    f();
    return true;
  } catch (const DomainError& e) {
    cert.check(name, false);
  } catch (const IndeterminateError& e) {
    cert.check(name, false);
  } catch (const ConstraintError& e) {
    cert.check(e.constraint(), false);
  }
  return false;
}

Ball min_of(const std::vector<Ball>& xs) {
  Ball m = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) m = min(m, xs[i]);
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Height

Height Height::parse(std::string_view text) {
  if (text == "H") return H();
  if (text.size() >= 2 && text.substr(text.size() - 2) == "ee") {
    const std::string_view head = text.substr(0, text.size() - 2);
    if (head.empty()) return ee();
    double m = 0;
    auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), m);
    if (ec == std::errc() && ptr == head.data() + head.size() && m > 0) return ee(m);
    throw DomainError("bad height: " + std::string(text));
  }
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !(v > 0) || !std::isfinite(v)) {
    throw DomainError("bad height: " + std::string(text));
  }
  return value(v);
}

Ball Height::ball(const PrecisionContext& ctx) const {
  switch (base_) {
    case Base::EE:
      return factor_ == 1.0 ? ee_ball(ctx) : decimal_ball(factor_, ctx.bits()) * ee_ball(ctx);
    case Base::H:
      return ctx.height_H();
    case Base::One:
      break;
  }
  return decimal_ball(factor_, ctx.bits());
}

double Height::approx() const {
  switch (base_) {
    case Base::EE:
      return factor_ * std::exp(std::exp(1.0));
    case Base::H:
      return static_cast<double>(PrecisionContext::kHeightH);
    case Base::One:
      break;
  }
  return factor_;
}

std::string Height::label() const {
  char buf[64];
  switch (base_) {
    case Base::EE:
      if (factor_ == 1.0) return "ee";
      std::snprintf(buf, sizeof buf, "%gee", factor_);
      return buf;
    case Base::H:
      return "H";
    case Base::One:
      break;
  }
  std::snprintf(buf, sizeof buf, "%g", factor_);
  return buf;
}

// ---------------------------------------------------------------------------
// Growth bound

Ball omega2(const Ball& omega1, const Ball& t0, const PrecisionContext& ctx) {
  if (!certainly_positive(omega1)) throw DomainError("omega2: omega1 must be positive");
  const Ball one_minus = 1.0 - 1.0 / ctx.e();
  const Ball scale = 1.0 / (omega1 * const_log2(ctx.bits()));
  const Ball high = scale * one_minus;
  if (certainly_ge(omega1, 1.0)) return high;
  if (!certainly_gt(t0, ctx.e()) ) throw DomainError("omega2: loglog t0 must be positive");
  const Ball LL = loglog(t0);
  const Ball low = scale * (one_minus + log(omega1) / LL);
  if (certainly_lt(omega1, 1.0)) return low;
  return hull(low, high);
}

Ball exponent_B(const Ball& omega1) { return 1.0 + 8.0 / (3.0 * omega1); }

Ball a_kappa(double kappa, const Ball& t0, const PrecisionContext& ctx) {
  if (!(kappa > 0)) throw DomainError("a_kappa: kappa must be positive");
  const Precision p = ctx.bits();
  const Ball k = Ball::exact(kappa, p);
  const Ball two_k = 2.0 + k;
  const Ball sixth = Ball::integer(1, p) / 6.0;
  return Ball::from_decimal("1.546", p) * zeta_real(1.0 + k, ctx) * pow(1.0 + two_k / t0, sixth) *
         (1.0 + two_k / (t0 * log(t0))) * (1.0 + 2.0 * sqrt(1.0 + k) / t0);
}

GrowthParams GrowthParams::derive(const Height& t0, double kappa, const Ball& omega1,
                                  const PrecisionContext& ctx) {
  GrowthParams g;
  g.t0 = t0;
  g.kappa = kappa;
  g.omega1 = omega1;
  const Ball t = t0.ball(ctx);
  g.omega2 = zetabounds::omega2(omega1, t, ctx);
  g.A_kappa = a_kappa(kappa, t, ctx);
  g.B = exponent_B(omega1);
  g.published = false;
  return g;
}

GrowthParams GrowthParams::rounded(const Height& t0, double kappa, const Ball& omega1, double A,
                                   double B, double omega2_val, const PrecisionContext& ctx) {
  const GrowthParams d = derive(t0, kappa, omega1, ctx);
  GrowthParams g = d;
  g.A_kappa = Ball::exact(A, ctx.bits());
  g.B = Ball::exact(B, ctx.bits());
  g.omega2 = Ball::exact(omega2_val, ctx.bits());
  g.published = true;
  if (!certainly_ge(g.A_kappa, d.A_kappa)) {
    throw ConstraintError("growth_A_rounded_up", "tabulated A_kappa is below the derived value");
  }
  if (!certainly_ge(g.B, d.B)) {
    throw ConstraintError("growth_B_rounded_up", "tabulated B is below the derived value");
  }
  if (!certainly_le(g.omega2, d.omega2)) {
    throw ConstraintError("growth_omega2_rounded_down", "tabulated omega2 exceeds the derived value");
  }
  return g;
}

bool GrowthParams::omega1_admissible(const PrecisionContext& ctx) const {
  const Ball t = t0.ball(ctx);
  // 8 loglog t / log t peaks at t = e^e with value 8/e.
  if (!certainly_gt(t, ee_ball(ctx))) return not_below(omega1, 8.0 / ctx.e());
  return not_below(omega1, 8.0 * loglog(t) / log(t));
}

Ball growth_bound(const Ball& t, const GrowthParams& gp, const PrecisionContext& ctx) {
  if (certainly_lt(t, gp.t0.ball(ctx))) throw DomainError("growth_bound: t below t0");
  return gp.A_kappa * pow(log(t), gp.B);
}

int k_index(double t, double omega1) {
  const PrecisionContext ctx(128);
  const Ball tb = Ball::exact(t, ctx.bits());
  const Ball x = log(Ball::exact(omega1, ctx.bits()) * log(tb) / loglog(tb)) / const_log2(ctx.bits());
  const double lo = std::floor(x.lower());
  const double hi = std::floor(x.upper());
  // A ball straddling an integer only happens on the boundary case where the
  // exact value is that integer.
  return static_cast<int>(hi > lo ? hi : lo);
}

// ---------------------------------------------------------------------------
// Strip constants

Ball Z_const(const Ball& sigma1, const Ball& t0, const PrecisionContext& ctx) {
  if (!certainly_gt(sigma1, 1.0)) throw DomainError("Z_const: sigma1 must exceed 1");
  if (certainly_lt(t0, 3.0)) throw DomainError("Z_const: t0 must be at least 3");
  return Ball::from_decimal("1.731", ctx.bits()) * zeta_real(sigma1, ctx) * (1.0 + 3.0 / t0) *
         log(t0 + sigma1 + 2.0) / log(t0);
}

namespace {
Ball z_factor_quarter(const Ball& sigma1, const Ball& t0, const PrecisionContext& ctx) {
  const Ball L = log(t0);
  const Ball z = Z_const(sigma1, 2.0 * t0, ctx) * (1.0 + const_log2(ctx.bits()) / L);
  return pow(z, 0.25);
}

Ball V1_with(const Ball& d, const Ball& t0, const Ball& zq) {
  if (!certainly_positive(d)) throw DomainError("V1: d must be positive");
  const Ball L = log(t0);
  return pow(1.0 / d + log(L) / L, 0.75) * zq;
}

Ball V2_with(const Ball& d, const Ball& t0, const Ball& zq, const PrecisionContext& ctx) {
  if (!certainly_positive(d)) throw DomainError("V2: d must be positive");
  const Ball L = log(t0);
  const Ball inner = exp(ctx.gamma_euler() * d * log(L) / L) / d;
  return pow(inner, 0.75) * zq;
}
}  // namespace

Ball V1(const Ball& d, const Ball& sigma1, const Ball& t0, const PrecisionContext& ctx) {
  return V1_with(d, t0, z_factor_quarter(sigma1, t0, ctx));
}

bool V2_applicable(const Ball& d, const Ball& sigma1, const Ball& t0, const PrecisionContext& ctx) {
  const Ball peak = certainly_gt(t0, ee_ball(ctx)) ? loglog(t0) / log(t0) : 1.0 / ctx.e();
  const Ball lhs = 1.0 + d * peak;
  const Ball& g = ctx.gamma_euler();
  return certainly_le(lhs, sigma1) && certainly_le(lhs, (1.0 + g) / g);
}

Ball V2(const Ball& d, const Ball& sigma1, const Ball& t0, const PrecisionContext& ctx) {
  if (!certainly_positive(d)) throw DomainError("V2: d must be positive");
  if (!V2_applicable(d, sigma1, t0, ctx)) {
    throw ConstraintError("V2_applicability", "V2 is not applicable for these parameters");
  }
  return V2_with(d, t0, z_factor_quarter(sigma1, t0, ctx), ctx);
}

// ---------------------------------------------------------------------------
// Main lemma pieces

Ball C1(const Ball& epsilon, const Ball& t_prime, const Ball& omega2_val,
        const PrecisionContext& ctx) {
  if (!certainly_positive(epsilon)) throw DomainError("C1: epsilon must be positive");
  if (!certainly_gt(t_prime - epsilon, ctx.e())) throw DomainError("C1: t' - epsilon must exceed e");
  const Ball LL = loglog(t_prime);
  const Ball ratio = loglog(t_prime - epsilon) / LL;
  return omega2_val * min(sqr(ratio), log(t_prime) / log(t_prime + epsilon));
}

Ball A3(const Ball& t_prime, const Ball& epsilon, const GrowthParams& gp,
        const PrecisionContext& ctx) {
  if (certainly_lt(t_prime, gp.t0.ball(ctx))) throw DomainError("A3: t' below the growth row's t0");
  return gp.A_kappa * pow(1.0 + log1p(epsilon / t_prime) / log(t_prime), gp.B);
}

Ball radius_r(const Ball& t_prime, const Ball& d, const Ball& C1_val) {
  const Ball LL = loglog(t_prime);
  return (C1_val + d / LL) * sqr(LL) / log(t_prime);
}

Ball c1_const(const Ball& epsilon, const Ball& t0, const Ball& zero_free_c) {
  return zero_free_c * log(t0) / log(t0 + epsilon);
}

Ball alpha_fn(const Ball& d, const Ball& c1, const Ball& C1_val, const Ball& t_prime) {
  return (d + c1) / (d + C1_val * loglog(t_prime));
}

// ---------------------------------------------------------------------------
// Certificates

std::string to_string(CertKind kind) {
  switch (kind) {
    case CertKind::R1: return "R1";
    case CertKind::K1: return "K1";
    case CertKind::R2: return "R2";
    case CertKind::K2: return "K2";
    case CertKind::A_kappa_table: return "A_kappa_table";
    case CertKind::Z_table: return "Z_table";
  }
  return "?";
}

double BoundCertificate::upper() const {
  return value ? value->upper() : std::numeric_limits<double>::infinity();
}

std::string BoundCertificate::first_failure() const {
  for (const auto& c : constraints) {
    if (!c.ok) return c.name;
  }
  return {};
}

bool BoundCertificate::all_ok() const {
  for (const auto& c : constraints) {
    if (!c.ok) return false;
  }
  return true;
}

namespace {

struct Q1Parts {
  Ball t0, L, LL, d, eps, beta, sigma1, c, c1, C1, alpha, Amax, lambda1, lambda2, first, second;
  std::optional<Ball> v1, v2;
};

Ball zero_free(const MainLemmaParams& p, const PrecisionContext& ctx) {
  return 1.0 / decimal_ball(p.zero_free_c_inv, ctx.bits());
}

void record_params(BoundCertificate& cert, const MainLemmaParams& p) {
  cert.params["t0"] = p.t0.approx();
  if (p.W) cert.params["W"] = *p.W;
  cert.params["d"] = p.d;
  cert.params["epsilon"] = p.epsilon;
  cert.params["beta"] = p.beta;
  cert.params["sigma1"] = p.sigma1;
  cert.params["zero_free_c_inv"] = p.zero_free_c_inv;
  cert.params["kappa"] = p.growth.kappa;
  cert.params["A_kappa"] = p.growth.A_kappa.upper();
  cert.params["B"] = p.growth.B.upper();
  cert.params["omega2"] = p.growth.omega2.lower();
}

}  // namespace

BoundCertificate Q1(const MainLemmaParams& p, const PrecisionContext& ctx) {
  const Precision prec = ctx.bits();
  BoundCertificate cert;
  cert.kind = p.W ? CertKind::R1 : CertKind::K1;
  cert.t_low = p.t0.approx();
  record_params(cert, p);

  const Ball t0 = p.t0.ball(ctx);
  const Ball e = ctx.e();
  const Ball d = Ball::exact(p.d, prec);
  const Ball eps = Ball::exact(p.epsilon, prec);
  const Ball beta = Ball::exact(p.beta, prec);
  const Ball sigma1 = Ball::exact(p.sigma1, prec);
  const Ball c = zero_free(p, ctx);
  const GrowthParams& g = p.growth;

  cert.check("t0_at_least_ee", not_below(t0, ee_ball(ctx)));
  cert.check("growth_row_covers_t0", not_below(t0, g.t0.ball(ctx)));
  cert.check("d_positive", p.d > 0);
  cert.check("epsilon_at_most_1", p.epsilon > 0 && p.epsilon <= 1);
  cert.check("beta_below_1", p.beta > 0 && p.beta < 1);
  cert.check("sigma1_above_1", p.sigma1 > 1);
  if (!cert.all_ok()) return cert;

  std::optional<Ball> value;
  const bool evaluated = guarded(cert, "evaluation", [&] {
    const Ball L = log(t0);
    const Ball LL = log(L);
    const Ball C1v = C1(eps, t0, g.omega2, ctx);
    const Ball c1 = c1_const(eps, t0, c);
    const Ball alpha = alpha_fn(d, c1, C1v, t0);
    const Ball Amax = A_max(t0, eps, g, ctx);
    const Ball denom = C1v * LL - d - 2.0 * c1;

    cert.check("epsilon_range", certainly_le(d / e + (C1v + d) * 4.0 / sqr(e), eps));
    cert.check("alpha_below_half", certainly_lt(alpha, 0.5));
    if (p.W) {
      const Ball W = decimal_ball(*p.W, prec);
      cert.check("beta_lower", certainly_ge(beta, (d + 1.0 / W) / (d + c1)));
      cert.check("W_consistency", certainly_gt(W, 1.0 / c));
    }
    cert.check("kappa_condition",
               certainly_ge(Ball::exact(g.kappa, prec), 4.0 / sqr(e) * (g.omega2 + 2.0 * d / LL)));
    cert.check("sigma1_lower", certainly_ge(sigma1, 1.0 + d * LL / L));
    cert.check("lambda1_denominator", certainly_positive(denom));
    cert.check("omega1_admissible", g.omega1_admissible(ctx));

    cert.details["C1"] = C1v.mid();
    cert.details["c1"] = c1.mid();
    cert.details["alpha"] = alpha.upper();
    cert.details["A_max"] = Amax.upper();
    cert.details["r"] = radius_r(t0, d, C1v).upper();
    if (!certainly_positive(denom)) return;

    const Ball one_m_beta = 1.0 - beta;
    const Ball lambda1 = 8.0 * beta / (C1v * one_m_beta) * sqr((C1v * LL + d) / denom);
    const Ball lambda2 = (1.0 + beta) / (d * one_m_beta);
    const Ball first = 1.0 / (beta * c1 + d * (1.0 + beta));
    std::vector<Ball> seconds;
    const Ball zq = z_factor_quarter(sigma1, t0, ctx);
    const Ball v1 = V1_with(d, t0, zq);
    seconds.push_back(lambda1 * (g.B + 1.0 + log(Amax * v1) / LL) + lambda2);
    cert.details["V1"] = v1.mid();
    if (V2_applicable(d, sigma1, t0, ctx)) {
      const Ball v2 = V2_with(d, t0, zq, ctx);
      seconds.push_back(lambda1 * (g.B + 1.0 + log(Amax * v2) / LL) + lambda2);
      cert.details["V2"] = v2.mid();
    }
    const Ball second = min_of(seconds);
    cert.details["lambda1"] = lambda1.mid();
    cert.details["lambda2"] = lambda2.mid();
    cert.details["first"] = first.upper();
    cert.details["second"] = second.upper();
    value = max(first, second);
  });
  if (evaluated && value && cert.all_ok()) cert.value = value;
  return cert;
}

double beta_min(const MainLemmaParams& p, const PrecisionContext& ctx) {
  if (!p.W) throw DomainError("beta_min needs W");
  const Precision prec = ctx.bits();
  const Ball t0 = p.t0.ball(ctx);
  const Ball d = Ball::exact(p.d, prec);
  const Ball c1 = c1_const(Ball::exact(p.epsilon, prec), t0, zero_free(p, ctx));
  return ((d + 1.0 / decimal_ball(*p.W, prec)) / (d + c1)).upper();
}

double beta_pinned(const MainLemmaParams& p, const PrecisionContext& ctx) {
  const Precision prec = ctx.bits();
  const Ball t0 = p.t0.ball(ctx);
  const Ball d = Ball::exact(p.d, prec);
  const Ball c1 = c1_const(Ball::exact(p.epsilon, prec), t0, zero_free(p, ctx));
  return (d / (c1 + d)).upper();
}

namespace {

void merge_into(BoundCertificate& out, const BoundCertificate& part, const std::string& prefix) {
  for (const auto& c : part.constraints) out.check(prefix + c.name, c.ok);
  for (const auto& [k, v] : part.details) out.details[prefix + k] = v;
  for (const auto& [k, v] : part.params) out.params[prefix + k] = v;
  if (part.value) out.details[prefix + "value"] = part.value->upper();
}

BoundCertificate combine_regimes(CertKind kind, const Height& t0,
                                 const std::optional<BoundCertificate>& low_cert,
                                 const BoundCertificate& high_cert) {
  BoundCertificate out;
  out.kind = kind;
  out.t_low = t0.approx();
  merge_into(out, high_cert, "high.");
  if (low_cert) merge_into(out, *low_cert, "low.");
  if (!out.all_ok() || !high_cert.value || (low_cert && !low_cert->value)) return out;
  out.value = low_cert ? max(*low_cert->value, *high_cert.value) : *high_cert.value;
  return out;
}

}  // namespace

std::vector<ConstraintFlag> low_regime_checks(const MainLemmaParams& low,
                                              const PrecisionContext& ctx) {
  const Ball t0 = low.t0.ball(ctx);
  const Ball c = zero_free(low, ctx);
  bool crh = false;
  try {
    const Ball C1v = C1(Ball::exact(low.epsilon, ctx.bits()), t0, low.growth.omega2, ctx);
    crh = certainly_lt(c, (C1v * loglog(t0) - Ball::exact(low.d, ctx.bits())) / 2.0);
  } catch (const DomainError&) {
    crh = false;
  }
  return {{"c_RH_below_C1_bound", crh}, {"c_RH_below_e_half", certainly_lt(c, ctx.e() / 2.0)}};
}

BoundCertificate Q1_two_regime(double W, const Height& t0, const std::optional<MainLemmaParams>& low,
                               const MainLemmaParams& high, const PrecisionContext& ctx) {
  MainLemmaParams hi = high;
  hi.W = W;
  BoundCertificate high_cert = Q1(hi, ctx);
  high_cert.check("high_regime_at_H", high.t0 == Height::H());
  high_cert.check("high_regime_uses_c0", high.zero_free_c_inv == 21.233);
  if (t0 == Height::H()) return combine_regimes(CertKind::R1, t0, std::nullopt, high_cert);
  if (!low) throw DomainError("Q1_two_regime: t0 < H needs low-regime parameters");
  MainLemmaParams lo = *low;
  lo.W = W;
  BoundCertificate low_cert = Q1(lo, ctx);
  low_cert.t_high = static_cast<double>(PrecisionContext::kHeightH);
  low_cert.check("low_regime_at_t0", lo.t0 == t0);
  BoundCertificate out = combine_regimes(CertKind::R1, t0, low_cert, high_cert);
  for (const auto& f : low_regime_checks(lo, ctx)) out.check("low." + f.name, f.ok);
  if (!out.all_ok()) out.value.reset();
  return out;
}

BoundCertificate K1(MainLemmaParams p, const PrecisionContext& ctx) {
  p.W.reset();
  p.beta = beta_pinned(p, ctx);
  BoundCertificate cert = Q1(p, ctx);
  cert.kind = CertKind::K1;
  return cert;
}

BoundCertificate K1_two_regime(const Height& t0, const std::optional<MainLemmaParams>& low,
                               const MainLemmaParams& high, const PrecisionContext& ctx) {
  BoundCertificate high_cert = K1(high, ctx);
  high_cert.check("high_regime_at_H", high.t0 == Height::H());
  high_cert.check("high_regime_uses_c0", high.zero_free_c_inv == 21.233);
  if (t0 == Height::H()) return combine_regimes(CertKind::K1, t0, std::nullopt, high_cert);
  if (!low) throw DomainError("K1_two_regime: t0 < H needs low-regime parameters");
  BoundCertificate low_cert = K1(*low, ctx);
  low_cert.check("low_regime_at_t0", low->t0 == t0);
  BoundCertificate out = combine_regimes(CertKind::K1, t0, low_cert, high_cert);
  for (const auto& f : low_regime_checks(*low, ctx)) out.check("low." + f.name, f.ok);
  if (!out.all_ok()) out.value.reset();
  return out;
}

// ---------------------------------------------------------------------------
// Reciprocal bounds

bool WSchedule::well_formed() const {
  if (entries.empty()) return false;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && !(entries[i - 1].W < entries[i].W)) return false;
    if (entries[i].t0.approx() > t0_valid) return false;
  }
  return true;
}

Ball schedule_sum(const WSchedule& s, Precision prec) {
  if (s.entries.empty()) throw DomainError("empty W schedule");
  Ball sum(prec);
  const auto& e = s.entries;
  for (std::size_t j = 0; j + 1 < e.size(); ++j) {
    sum += decimal_ball(e[j].R1, prec) *
           (1.0 / decimal_ball(e[j].W, prec) - 1.0 / decimal_ball(e[j + 1].W, prec));
  }
  sum += decimal_ball(e.back().R1, prec) / decimal_ball(e.back().W, prec);
  return sum;
}

namespace {

struct RecipTerms {
  Ball first, v1;
  std::vector<Ball> vs;
};

RecipTerms reciprocal_terms(const Ball& d1, const Ball& sigma1, const Ball& t0,
                            const PrecisionContext& ctx, BoundCertificate& cert) {
  const Ball L = log(t0);
  const Ball LL = log(L);
  const Ball zq = z_factor_quarter(sigma1, t0, ctx);
  RecipTerms r{sigma1 / (sigma1 - 1.0) * LL / L, V1_with(d1, t0, zq), {}};
  r.vs.push_back(r.v1);
  cert.details["first"] = r.first.upper();
  cert.details["V1"] = r.v1.mid();
  if (V2_applicable(d1, sigma1, t0, ctx)) {
    r.vs.push_back(V2_with(d1, t0, zq, ctx));
    cert.details["V2"] = r.vs.back().mid();
  }
  return r;
}

void reciprocal_params(BoundCertificate& cert, double d1, double sigma1, const Height& t0,
                       double K1_val) {
  cert.t_low = t0.approx();
  cert.params["t0"] = t0.approx();
  cert.params["d1"] = d1;
  cert.params["sigma1"] = sigma1;
  cert.params["K1"] = K1_val;
}

}  // namespace

BoundCertificate Q2(double d1, double sigma1, const Height& t0, const WSchedule& schedule,
                    double K1_val, const PrecisionContext& ctx) {
  if (schedule.entries.empty()) throw DomainError("Q2: empty W schedule");
  const Precision prec = ctx.bits();
  BoundCertificate cert;
  cert.kind = CertKind::R2;
  reciprocal_params(cert, d1, sigma1, t0, K1_val);
  cert.params["W1"] = schedule.entries.front().W;
  cert.check("schedule_well_formed", schedule.well_formed());
  cert.check("schedule_valid_at_t0", schedule.t0_valid <= t0.approx());
  cert.check("d1_positive", d1 > 0);
  cert.check("sigma1_above_1", sigma1 > 1);
  if (!cert.all_ok()) return cert;

  const Ball tb = t0.ball(ctx);
  const Ball d = Ball::exact(d1, prec);
  const Ball s1 = Ball::exact(sigma1, prec);
  cert.check("sigma1_lower", certainly_ge(s1, 1.0 + d * loglog(tb) / log(tb)));

  std::optional<Ball> value;
  guarded(cert, "evaluation", [&] {
    const RecipTerms r = reciprocal_terms(d, s1, tb, ctx, cert);
    const Ball S = schedule_sum(schedule, prec);
    const Ball exponent = S + d * decimal_ball(K1_val, prec);
    cert.details["schedule_sum"] = S.mid();
    cert.details["exponent"] = exponent.mid();
    std::vector<Ball> candidates;
    for (const Ball& v : r.vs) candidates.push_back(max(max(r.first, r.v1), v * exp(exponent)));
    value = min_of(candidates);
  });
  if (value && cert.all_ok()) cert.value = value;
  return cert;
}

Ball Q2_tabulated_form(double d1, double sigma1, const Height& t0, const WSchedule& schedule,
                       double K1_val, const PrecisionContext& ctx) {
  const Precision prec = ctx.bits();
  BoundCertificate scratch;
  const Ball d = Ball::exact(d1, prec);
  const RecipTerms r = reciprocal_terms(d, Ball::exact(sigma1, prec), t0.ball(ctx), ctx, scratch);
  const Ball S = schedule_sum(schedule, prec);
  const Ball growth = exp(d * decimal_ball(K1_val, prec)) * S;
  std::vector<Ball> candidates;
  for (const Ball& v : r.vs) candidates.push_back(max(max(r.first, r.v1), v * growth));
  return min_of(candidates);
}

BoundCertificate K2(double d1, double sigma1, const Height& t0, double K1_val,
                    const PrecisionContext& ctx) {
  const Precision prec = ctx.bits();
  BoundCertificate cert;
  cert.kind = CertKind::K2;
  reciprocal_params(cert, d1, sigma1, t0, K1_val);
  cert.check("d1_positive", d1 > 0);
  cert.check("sigma1_above_1", sigma1 > 1);
  if (!cert.all_ok()) return cert;

  const Ball tb = t0.ball(ctx);
  const Ball d = Ball::exact(d1, prec);
  const Ball s1 = Ball::exact(sigma1, prec);
  cert.check("sigma1_lower", certainly_ge(s1, 1.0 + d * loglog(tb) / log(tb)));
  cert.check("V2_applicability", V2_applicable(d, s1, tb, ctx));
  if (!cert.all_ok()) return cert;

  std::optional<Ball> value;
  guarded(cert, "evaluation", [&] {
    const RecipTerms r = reciprocal_terms(d, s1, tb, ctx, cert);
    const Ball third = V2(d, s1, tb, ctx) * exp(d * decimal_ball(K1_val, prec));
    cert.details["third"] = third.upper();
    value = max(max(r.first, r.v1), third);
  });
  if (value && cert.all_ok()) cert.value = value;
  return cert;
}

}  // namespace zetabounds
