#include "zetabounds/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>

#include "zetabounds/errors.hpp"
#include "zetabounds/optimizer.hpp"
#include "zetabounds/published_tables.hpp"

namespace zetabounds {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Runs body(i) for i in [0, n) on all hardware threads.
void parallel_for(long n, const std::function<void(long)>& body) {
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<long> next{0};
  auto work = [&] {
    for (long i = next++; i < n; i = next++) body(i);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers && w < n; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

ComplexBall cell_ball(const Rect& r, Precision prec) {
  return ComplexBall(Ball::from_endpoints(r.sigma_lo, r.sigma_hi, prec),
                     Ball::from_endpoints(r.t_lo, r.t_hi, prec));
}

bool witness_before(const Witness& a, const Witness& b) {
  return std::tie(a.sigma, a.t) < std::tie(b.sigma, b.t);
}

Outcome worst_of(Outcome a, Outcome b) {
  if (a == Outcome::Failed || b == Outcome::Failed) return Outcome::Failed;
  if (a == Outcome::Inconclusive || b == Outcome::Inconclusive) return Outcome::Inconclusive;
  return Outcome::Certified;
}

// Accumulates the per-cell results of one region; merged under a mutex so
// the final part does not depend on scheduling.
struct PartAccumulator {
  std::mutex m;
  CheckPart part;
  bool inconclusive = false;

  void merge(const CheckPart& local, bool local_inconclusive) {
    std::lock_guard<std::mutex> lock(m);
    part.cells += local.cells;
    part.depth = std::max(part.depth, local.depth);
    part.max_upper = std::max(part.max_upper, local.max_upper);
    if (local.max_estimate > part.max_estimate ||
        (local.max_estimate == part.max_estimate && witness_before(local.peak, part.peak))) {
      part.max_estimate = local.max_estimate;
      part.peak = local.peak;
    }
    if (local.witness && (!part.witness || witness_before(*local.witness, *part.witness))) {
      part.witness = local.witness;
    }
    inconclusive = inconclusive || local_inconclusive;
  }
};

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Certified: return "certified";
    case Outcome::Failed: return "failed";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

Outcome RegionCheck::outcome() const {
  Outcome out = Outcome::Certified;
  for (const auto& p : parts) out = worst_of(out, p.outcome);
  return out;
}

CheckPart certify_region(const std::string& name, const CellFn& f, const Rect& rect, double margin,
                         int grid, int max_depth, const PrecisionContext& ctx) {
  if (grid < 1 || max_depth < 0) throw DomainError("grid and depth must be positive");
  if (!(rect.sigma_lo <= rect.sigma_hi && rect.t_lo <= rect.t_hi)) throw DomainError("empty region");
  const bool split_sigma = rect.sigma_lo < rect.sigma_hi;
  const bool split_t = rect.t_lo < rect.t_hi;
  const int ns = split_sigma ? grid : 1;
  const int nt = split_t ? grid : 1;

  auto sub = [](double lo, double hi, int i, int n) {
    return std::pair{lo + (hi - lo) * i / n, i + 1 == n ? hi : lo + (hi - lo) * (i + 1) / n};
  };

  PartAccumulator acc;
  acc.part.name = name;
  acc.part.region = {rect};
  acc.part.max_estimate = -kInf;
  acc.part.max_upper = -kInf;

  parallel_for(static_cast<long>(ns) * nt, [&](long idx) {
    const auto [s0, s1] = sub(rect.sigma_lo, rect.sigma_hi, static_cast<int>(idx / nt), ns);
    const auto [t0, t1] = sub(rect.t_lo, rect.t_hi, static_cast<int>(idx % nt), nt);
    CheckPart local;
    local.max_estimate = -kInf;
    local.max_upper = -kInf;
    bool local_inconclusive = false;

    std::vector<std::pair<Rect, int>> stack{{{s0, s1, t0, t1}, 0}};
    while (!stack.empty() && !local.witness) {
      const auto [cell, depth] = stack.back();
      stack.pop_back();
      ++local.cells;
      local.depth = std::max(local.depth, depth);

      std::optional<Ball> diff;
      try {
        const auto [lhs, rhs] = f(cell_ball(cell, ctx.bits()), ctx);
        diff = lhs - rhs;
      } catch (const std::runtime_error&) {
        // Treated like a wide ball: refine.
      } catch (const std::logic_error&) {
      }
      if (diff && diff->upper() < margin) {
        local.max_upper = std::max(local.max_upper, diff->upper());
        continue;
      }

      const double sm = 0.5 * (cell.sigma_lo + cell.sigma_hi);
      const double tm = 0.5 * (cell.t_lo + cell.t_hi);
      try {
        const auto [lhs, rhs] = f(ComplexBall::exact(sm, tm, ctx.bits()), ctx);
        const Ball d = lhs - rhs;
        if (d.mid() > local.max_estimate) {
          local.max_estimate = d.mid();
          local.peak = {sm, tm, lhs.mid(), rhs.mid()};
        }
        if (certainly_ge(d, margin)) {
          local.witness = Witness{sm, tm, lhs.mid(), rhs.mid()};
          break;
        }
      } catch (const std::runtime_error&) {
      } catch (const std::logic_error&) {
      }

      if (depth >= max_depth) {
        local_inconclusive = true;
        continue;
      }
      const int ks = split_sigma ? 2 : 1;
      const int kt = split_t ? 2 : 1;
      for (int i = 0; i < ks; ++i) {
        for (int j = 0; j < kt; ++j) {
          const auto [a0, a1] = sub(cell.sigma_lo, cell.sigma_hi, i, ks);
          const auto [b0, b1] = sub(cell.t_lo, cell.t_hi, j, kt);
          stack.push_back({{a0, a1, b0, b1}, depth + 1});
        }
      }
    }
    acc.merge(local, local_inconclusive);
  });

  CheckPart out = std::move(acc.part);
  if (out.witness) {
    out.outcome = Outcome::Failed;
  } else if (acc.inconclusive) {
    out.outcome = Outcome::Inconclusive;
  } else {
    out.outcome = Outcome::Certified;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Region checks

namespace {

Ball modulus(const ComplexBall& z) { return abs(z); }

// (s-1)zeta(s) over the cell s in centred form: g(c) + g'(S)(S - c) with
// g' = zeta + (s-1)zeta'. Far tighter than direct evaluation on wide cells.
// Falls back to direct evaluation when S touches the pole.
ComplexBall times_s_minus_1_enclosure(const ComplexBall& S, const PrecisionContext& ctx) {
  if (S.real().is_exact() && S.imag().is_exact()) return zeta_times_s_minus_1(S, ctx);
  const double cr = S.real().mid();
  const double ci = S.imag().mid();
  const Precision p = ctx.bits();
  try {
    const ComplexBall z = zeta_complex(S, ctx);
    const ComplexBall dz = zeta_prime(S, ctx);
    const ComplexBall g_prime = z + (S - 1.0) * dz;
    const ComplexBall offset(S.real() - Ball::exact(cr, p), S.imag() - Ball::exact(ci, p));
    return zeta_times_s_minus_1(ComplexBall::exact(cr, ci, p), ctx) + g_prime * offset;
  } catch (const PoleError&) {
    return zeta_times_s_minus_1(S, ctx);
  }
}

}  // namespace

RegionCheck check_lemma5_small_t(const PrecisionContext& ctx, int grid, int max_depth) {
  RegionCheck rc;
  rc.name = "lemma5_small_t";
  rc.description = "|(s-1)zeta(s)| - 1.546|s+1|log|s+1| < -0.21 for 1/2 <= sigma <= 1, 0 <= t <= 3";
  rc.lhs = "|(s-1)zeta(s)|";
  rc.rhs = "1.546|s+1|log|s+1|";
  rc.margin = -0.21;
  rc.grid = grid;
  rc.max_depth = max_depth;

  const Ball A = Ball::from_decimal("1.546", ctx.bits());
  const CellFn strip = [&](const ComplexBall& s, const PrecisionContext& c) {
    const Ball q = modulus(s + 1.0);
    return std::pair{modulus(times_s_minus_1_enclosure(s, c)), A * q * log(q)};
  };
  rc.parts.push_back(certify_region("sigma_in_[1/2,1]", strip, {0.5, 1.0, 0.0, 3.0}, rc.margin, grid,
                                    max_depth, ctx));

  // The right edge sigma = 1 + kappa, once per growth row.
  for (const auto& g : tables::growth_rows()) {
    const double sigma = 1.0 + g.kappa;
    const Ball zk = zeta_real(sigma, ctx);
    const CellFn edge = [zk](const ComplexBall& s, const PrecisionContext& c) {
      return std::pair{modulus(times_s_minus_1_enclosure(s, c)), zk * modulus(s + 1.0)};
    };
    rc.parts.push_back(certify_region("sigma=1+kappa,kappa=" + std::to_string(g.kappa).substr(0, 4),
                                      edge, {sigma, sigma, 0.0, 3.0}, 0.0, grid, max_depth, ctx));
  }
  rc.notes.push_back("only t >= 0 is evaluated; |(s-1)zeta(s)| and |s+1| are invariant under t -> -t");
  rc.summary["max_estimate"] = rc.parts.front().max_estimate;
  rc.summary["peak_sigma"] = rc.parts.front().peak.sigma;
  rc.summary["peak_t"] = rc.parts.front().peak.t;
  return rc;
}

RegionCheck check_lemma5_large_t(const PrecisionContext& ctx, int samples) {
  if (samples < 2) throw DomainError("need at least two samples");
  RegionCheck rc;
  rc.name = "lemma5_large_t";
  rc.description = "|s-1| t^x log t <= |s+1|^(1+x) log|s+1|, x = 1/(2^k-2), sigma = sigma_k, "
                   "3 <= t <= 1e6 sampled, 3 <= k <= 40";
  rc.lhs = "|s-1| t^x log t";
  rc.rhs = "|s+1|^(1+x) log|s+1|";
  rc.grid = samples;
  const Precision p = ctx.bits();
  double min_slack = kInf;
  bool all_monotone = true;

  for (int k = 3; k <= 40; ++k) {
    CheckPart part;
    part.name = "k=" + std::to_string(k);
    const double two_k = std::ldexp(1.0, k);
    const Ball x = 1.0 / (Ball::exact(two_k, p) - 2.0);
    const Ball sigma = 1.0 - Ball::integer(k, p) * x;
    part.region = {{sigma.mid(), sigma.mid(), 3.0, 1e6}};
    part.max_estimate = -kInf;
    std::vector<double> slack(samples);
    std::vector<Outcome> outcome(samples, Outcome::Certified);
    std::vector<Witness> where(samples);
    parallel_for(samples, [&](long i) {
      const double t = 3.0 * std::pow(1e6 / 3.0, static_cast<double>(i) / (samples - 1));
      const Ball tb = Ball::exact(t, p);
      const ComplexBall s(sigma, tb);
      const Ball lhs = modulus(s - 1.0) * pow(tb, x) * log(tb);
      const Ball q = modulus(s + 1.0);
      const Ball rhs = pow(q, 1.0 + x) * log(q);
      slack[i] = ((rhs - lhs) / rhs).mid();
      where[i] = {sigma.mid(), t, lhs.mid(), rhs.mid()};
      if (certainly_gt(lhs, rhs)) {
        outcome[i] = Outcome::Failed;
      } else if (!certainly_le(lhs, rhs)) {
        outcome[i] = Outcome::Inconclusive;
      }
    });
    part.cells = samples;
    part.outcome = Outcome::Certified;
    bool monotone = true;
    for (int i = 0; i < samples; ++i) {
      part.outcome = worst_of(part.outcome, outcome[i]);
      if (outcome[i] == Outcome::Failed && !part.witness) part.witness = where[i];
      if (-slack[i] > part.max_estimate) {
        part.max_estimate = -slack[i];
        part.peak = where[i];
      }
      if (i > 0 && slack[i] < slack[i - 1]) monotone = false;
      min_slack = std::min(min_slack, slack[i]);
    }
    all_monotone = all_monotone && monotone;
    rc.summary["min_slack_k" + std::to_string(k)] = -part.max_estimate;
    rc.parts.push_back(std::move(part));
  }
  rc.notes.push_back("sampled, not a proof; slack is (rhs - lhs)/rhs");
  rc.summary["min_relative_slack"] = min_slack;
  rc.summary["slack_monotone_in_t"] = all_monotone ? 1 : 0;
  return rc;
}

RegionCheck check_lemma8_small_t(const PrecisionContext& ctx, int grid, int max_depth) {
  RegionCheck rc;
  rc.name = "lemma8_small_t";
  rc.description = "|(s-1)zeta(s)| <= 1.731|s+2| log|s+2| / loglog|s+2| at sigma = 1, 0 <= t <= 5";
  rc.lhs = "|(s-1)zeta(s)|";
  rc.rhs = "1.731|s+2| log|s+2| / loglog|s+2|";
  rc.grid = grid;
  rc.max_depth = max_depth;
  const Precision p = ctx.bits();

  const Ball A = Ball::from_decimal("1.731", p);
  const CellFn line = [&](const ComplexBall& s, const PrecisionContext& c) {
    const Ball q = modulus(s + 2.0);
    return std::pair{modulus(times_s_minus_1_enclosure(s, c)), A * q * log(q) / log(log(q))};
  };
  // |s+2| >= 3 > e on this line, so the right side is defined everywhere.
  rc.parts.push_back(certify_region("sigma=1,t_in_[0,5]", line, {1.0, 1.0, 0.0, 5.0}, 0.0, grid,
                                    max_depth, ctx));

  // For t >= 5 the reduction needs x log x / loglog x increasing from 5 on:
  // its derivative has the sign of (log x + 1) loglog x - 1, which increases.
  {
    CheckPart part;
    part.name = "reduction_monotone_from_5";
    part.region = {{1.0, 1.0, 5.0, 5.0}};
    part.cells = 1;
    const Ball x = Ball::exact(5.0, p);
    const Ball num = (log(x) + 1.0) * log(log(x)) - 1.0;
    part.max_estimate = -num.mid();
    part.peak = {1.0, 5.0, 0.0, num.mid()};
    part.outcome = certainly_positive(num) ? Outcome::Certified : Outcome::Failed;
    if (part.outcome == Outcome::Failed) part.witness = part.peak;
    rc.parts.push_back(std::move(part));
  }

  // The sigma = sigma1 edge, once per strip row.
  for (const auto& z : tables::z_rows()) {
    const Ball zs = zeta_real(z.sigma1, ctx);
    const CellFn edge = [zs](const ComplexBall& s, const PrecisionContext& c) {
      return std::pair{modulus(times_s_minus_1_enclosure(s, c)), zs * modulus(s + 2.0)};
    };
    std::string label = std::to_string(z.sigma1);
    label = label.substr(0, label.find('.') + 3);
    rc.parts.push_back(certify_region("sigma=sigma1=" + label, edge, {z.sigma1, z.sigma1, 0.0, 3.0},
                                      0.0, grid, max_depth, ctx));
  }
  rc.notes.push_back(
      "t in [3, 4.1] is certified directly: x log x / loglog x decreases there, so the reduction "
      "from the t >= 3 line bound does not cover it");
  rc.notes.push_back("on sigma = 1 the whole range |t| <= 3 has |s+2| >= 3 > e; nothing is excluded");
  rc.notes.push_back("only t >= 0 is evaluated; both sides are invariant under t -> -t");
  rc.notes.push_back("the sigma1 edge for |t| > 3 follows from |zeta(s)| <= zeta(sigma1), |s-1| <= |s+2|");
  return rc;
}

RegionCheck check_corollary4_range(const PrecisionContext& ctx, int grid, int max_depth) {
  RegionCheck rc;
  rc.name = "corollary4_range";
  rc.description = "107.7 log t / loglog t >= 2.079 log t for 3 <= t <= 500";
  rc.lhs = "2.079 log t";
  rc.rhs = "107.7 log t / loglog t";
  rc.grid = grid;
  rc.max_depth = max_depth;
  const Precision p = ctx.bits();
  const Ball K = Ball::from_decimal("107.7", p);
  const Ball c = Ball::from_decimal("2.079", p);

  const CellFn f = [&](const ComplexBall& s, const PrecisionContext&) {
    const Ball L = log(s.imag());
    return std::pair{c * L, K * L / log(L)};
  };
  rc.parts.push_back(certify_region("t_in_[3,500]", f, {1.0, 1.0, 3.0, 500.0}, 0.0, grid, max_depth, ctx));

  // Equivalent closed form: loglog t <= 107.7/2.079, loglog increasing.
  const Ball ll = log(log(Ball::integer(500, p)));
  const Ball bound = K / c;
  CheckPart closed;
  closed.name = "closed_form_at_500";
  closed.region = {{1.0, 1.0, 500.0, 500.0}};
  closed.cells = 1;
  closed.max_estimate = (ll - bound).mid();
  closed.peak = {1.0, 500.0, ll.mid(), bound.mid()};
  closed.outcome = certainly_lt(ll, bound) ? Outcome::Certified : Outcome::Failed;
  if (closed.outcome == Outcome::Failed) closed.witness = closed.peak;
  rc.parts.push_back(std::move(closed));
  rc.summary["loglog_500"] = ll.mid();
  rc.summary["ratio_bound"] = bound.mid();
  rc.summary["loglog_3"] = log(log(Ball::integer(3, p))).mid();
  return rc;
}

// ---------------------------------------------------------------------------
// Trigonometric polynomials

double TrigPoly::operator()(double theta) const {
  double v = 0;
  for (std::size_t n = 0; n < a.size(); ++n) v += a[n] * std::cos(static_cast<double>(n) * theta);
  return v;
}

TrigReport trig_criteria(const TrigPoly& p, int samples) {
  if (p.degree() < 1) throw DomainError("trigonometric polynomial needs degree >= 1");
  if (samples < 2) throw DomainError("need at least two samples");
  TrigReport r;
  double M2 = 0;
  for (std::size_t n = 0; n < p.a.size(); ++n) {
    r.abs_sum += std::fabs(p.a[n]);
    M2 += static_cast<double>(n * n) * std::fabs(p.a[n]);
  }
  // Floating-point evaluation error, far below the tolerance.
  const double fp_slack = 64 * std::numeric_limits<double>::epsilon() * (r.abs_sum + 1);
  auto deriv = [&](double th) {
    double v = 0;
    for (std::size_t n = 1; n < p.a.size(); ++n) v -= static_cast<double>(n) * p.a[n] * std::sin(n * th);
    return v;
  };

  r.min_value = kInf;
  r.min_lower = kInf;
  // Refined points replace the minimum only when clearly lower, so rounding
  // noise does not move the argmin off a sampled zero.
  auto see = [&](double th, bool refined) {
    const double v = p(th);
    if (v < r.min_value - (refined ? fp_slack : 0.0)) {
      r.min_value = v;
      r.argmin = th;
    }
    return v;
  };
  for (int j = 0; j <= samples; ++j) see(2.0 * j / samples * std::numbers::pi, false);

  // Taylor bound on each interval: p >= p(m) - |p'(m)| h - M2 h^2 / 2.
  bool negative = false;
  std::vector<std::pair<double, double>> stack;
  for (int j = samples - 1; j >= 0; --j) {
    stack.push_back({2.0 * j / samples * std::numbers::pi, 2.0 * (j + 1) / samples * std::numbers::pi});
  }
  while (!stack.empty()) {
    const auto [lo, hi] = stack.back();
    stack.pop_back();
    const double m = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    const double v = see(m, true);
    const double lb = v - std::fabs(deriv(m)) * h - 0.5 * M2 * h * h - fp_slack;
    if (lb >= -kTrigTolerance || h < 1e-12) {
      r.min_lower = std::min(r.min_lower, lb);
      continue;
    }
    if (v < -kTrigTolerance) {
      negative = true;
      r.witness = Witness{0, m, v, 0};
      r.min_lower = std::min(r.min_lower, v);
      break;
    }
    stack.push_back({m, hi});
    stack.push_back({lo, m});
  }
  r.nonneg = !negative && r.min_lower >= -kTrigTolerance;

  const double a0 = p.a[0];
  const double a1 = p.a[1];
  r.zerofree_style = a1 > a0 && std::all_of(p.a.begin(), p.a.end(), [](double x) { return x >= 0; });
  r.reciprocal_style = a1 > 0 && r.abs_sum <= 2 * a1;
  if (a1 != 0) r.ratio = a0 / a1;
  return r;
}

std::vector<TrigPoly> trig_search(int N, double step, long* examined) {
  if (N < 2 || N > 6) throw DomainError("search degree must be in 2..6");
  if (!(step > 0 && step <= 0.5)) throw DomainError("grid step must lie in (0, 0.5]");
  const int m = static_cast<int>(std::floor(1.0 / step + 1e-9));
  const double tiny = 1e-12;
  std::vector<TrigPoly> found;
  long count = 0;

  // a_1 = 1, so the coefficient budget is a_0 + sum_{n>=2} |a_n| <= 1.
  TrigPoly p;
  p.a.assign(N + 1, 0.0);
  p.a[1] = 1.0;
  std::vector<double> probes;
  for (int j = 0; j < 256; ++j) probes.push_back(2.0 * j / 256 * std::numbers::pi);

  std::function<void(int, double)> rec = [&](int n, double used) {
    if (n > N) {
      ++count;
      for (double th : probes) {
        if (p(th) < -kTrigTolerance) return;
      }
      const TrigReport r = trig_criteria(p);
      if (r.nonneg && r.reciprocal_style && r.ratio && *r.ratio < 0.75) found.push_back(p);
      return;
    }
    for (int k = -m; k <= m; ++k) {
      const double v = k * step;
      if (used + std::fabs(v) > 1.0 + tiny) continue;
      p.a[n] = v;
      rec(n + 1, used + std::fabs(v));
    }
    p.a[n] = 0;
  };
  for (int k = 1; k * step < 0.75 - tiny; ++k) {
    p.a[0] = k * step;
    rec(2, p.a[0]);
  }
  if (examined) *examined = count;
  return found;
}

// ---------------------------------------------------------------------------
// Spot checks

namespace {

double param_or(const BoundCertificate& c, std::initializer_list<const char*> keys, double fallback) {
  for (const char* k : keys) {
    auto it = c.params.find(k);
    if (it != c.params.end()) return it->second;
  }
  return fallback;
}

}  // namespace

std::vector<std::string> certificate_names() { return {"r1-22", "k1-500", "r2-22-500", "k2-500"}; }

BoundCertificate named_certificate(const std::string& name, const PrecisionContext& ctx) {
  const Height t500 = Height::value(500);
  if (name == "r1-22") {
    OptimizeOptions o;
    const OptimizationResult r = optimize(Objective::Q1TwoRegime, {22, Height::ee(), {}, {}, {}}, o, ctx);
    if (!r.feasible) throw DomainError("r1-22: optimization found no feasible point");
    return r.certificate;
  }
  if (name == "k1-500") {
    auto params_of = [&](std::string_view t0) {
      for (const auto& k : tables::k1_rows()) {
        if (k.t0 != t0) continue;
        MainLemmaParams p;
        p.t0 = Height::parse(k.t0);
        p.d = k.d;
        p.epsilon = k.epsilon;
        p.sigma1 = k.sigma1;
        p.zero_free_c_inv = k.c_inv;
        p.growth = tables::growth_row_for(p.t0, ctx);
        return p;
      }
      throw DomainError("missing K1 row");
    };
    return K1_two_regime(t500, params_of("500"), params_of("H"), ctx);
  }
  if (name == "r2-22-500") {
    return Q2(tables::kR2HighD1, tables::kR2HighSigma1, t500, tables::r1_schedule(22, t500),
              tables::k1_for(t500), ctx);
  }
  if (name == "k2-500") {
    for (const auto& k : tables::k2_rows()) {
      if (k.t0 == "500") return K2(k.d1, k.sigma1, t500, tables::k1_for(t500), ctx);
    }
  }
  throw DomainError("unknown certificate: " + name);
}

SpotReport spot_check(const BoundCertificate& cert, long samples, double t_max,
                      const PrecisionContext& ctx, std::uint64_t seed) {
  if (!cert.valid()) throw DomainError("spot_check needs a valid certificate");
  const double t_lo = std::max(cert.t_low, std::exp(std::numbers::e));
  if (!(t_max > t_lo && t_max <= 1e5)) throw DomainError("t_max must lie in (t_low, 1e5]");
  if (samples < 1) throw DomainError("need at least one sample");

  SpotReport rep;
  rep.kind = cert.kind;
  rep.bound = cert.upper();
  rep.cert_name = to_string(cert.kind);
  const bool strip = cert.kind == CertKind::R1 || cert.kind == CertKind::R2;
  const bool log_deriv_kind = cert.kind == CertKind::R1 || cert.kind == CertKind::K1;
  if (!strip && !(cert.kind == CertKind::K1 || cert.kind == CertKind::K2)) {
    throw DomainError("spot_check handles R1, K1, R2 and K2 certificates");
  }
  const double W = param_or(cert, {"W", "high.W", "W1"}, 0.0);
  if (strip && !(W > 0)) throw DomainError("certificate carries no W");

  // Points first, so the draw does not depend on thread scheduling.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::pair<double, double>> pts(samples);
  for (auto& [sigma, t] : pts) {
    t = t_lo + (t_max - t_lo) * unit(rng);
    const double lo = strip ? 1.0 - std::log(std::log(t)) / (W * std::log(t)) : 1.0;
    sigma = lo + (2.0 - lo) * unit(rng);
  }

  const Ball bound = Ball::exact(rep.bound, ctx.bits());
  std::vector<int> status(samples, 0);  // 0 ok, 1 unresolved, 2 violation
  std::vector<double> ratio(samples);
  std::vector<Witness> where(samples);
  parallel_for(samples, [&](long i) {
    const auto [sigma, t] = pts[i];
    const Ball tb = Ball::exact(t, ctx.bits());
    const Ball rhs = bound * log(tb) / log(log(tb));
    Ball lhs(ctx.bits());
    try {
      lhs = abs(log_deriv_kind ? log_deriv_adaptive({sigma, t}, ctx) : reciprocal_zeta_adaptive({sigma, t}, ctx));
    } catch (const IndeterminateError&) {
      status[i] = 1;
      where[i] = {sigma, t, kInf, rhs.mid()};
      ratio[i] = kInf;
      return;
    }
    ratio[i] = lhs.upper() / rhs.lower();
    where[i] = {sigma, t, lhs.mid(), rhs.mid()};
    if (certainly_gt(lhs, rhs)) {
      status[i] = 2;
    } else if (!certainly_le(lhs, rhs)) {
      status[i] = 1;
    }
  });

  rep.samples = samples;
  for (long i = 0; i < samples; ++i) {
    if (status[i] == 2) {
      ++rep.violations;
      if (!rep.witness) rep.witness = where[i];
    }
    if (status[i] == 1) ++rep.unresolved;
    if (ratio[i] > rep.max_ratio || !rep.worst) {
      rep.max_ratio = std::max(rep.max_ratio, ratio[i]);
      rep.worst = where[i];
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// k-chain

KChainReport check_k_chain(const GrowthParams& gp, long samples, const PrecisionContext& ctx,
                           std::uint64_t seed) {
  if (samples < 1) throw DomainError("need at least one sample");
  const Precision p = ctx.bits();
  const double t0 = gp.t0.approx();
  const double omega1 = gp.omega1.mid();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // log t log-uniform on [log t0, 700], the double range.
  const double L0 = std::log(t0);
  const double span = 700.0 / L0;
  std::vector<double> ts(samples);
  ts[0] = t0;
  for (long i = 1; i < samples; ++i) ts[i] = std::exp(L0 * std::pow(span, unit(rng)));

  KChainReport rep;
  rep.samples = samples;
  for (double t : ts) {
    const int k = k_index(t, omega1);
    const Ball tb = Ball::exact(t, p);
    const Ball L = log(tb);
    const Ball LL = log(L);
    const Ball den = Ball::exact(std::ldexp(1.0, k), p) - 2.0;
    const bool ok = k >= 3 &&
                    // sigma_k <= 1 - omega2 (loglog t)^2 / log t
                    certainly_ge(Ball::integer(k, p) / den, gp.omega2 * LL * LL / L) &&
                    certainly_le(1.0 / den, 8.0 * LL / (3.0 * gp.omega1 * L));
    if (!ok) {
      ++rep.violations;
      if (!rep.witness_t) rep.witness_t = t;
    }
  }
  return rep;
}

}  // namespace zetabounds
