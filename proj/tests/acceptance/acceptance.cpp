// Acceptance runner. `acceptance --criterion N` evaluates one criterion and
// prints one line: "CRITERION N PASS|FAIL <details>". Exit status 0 on PASS.
// Without arguments every criterion runs in turn.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>

#include "oracles/eta_oracle.hpp"
#include "oracles/zeta_reference.hpp"
#include "report.hpp"
#include "zetabounds/optimizer.hpp"
#include "zetabounds/published_tables.hpp"
#include "zetabounds/verifier.hpp"

using namespace zetabounds;

namespace {

// Relative tolerance for every table comparison.
constexpr double kTableTol = 0.005;

struct Result {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [fail: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const PrecisionContext& ctx() {
  static const PrecisionContext c(128);
  return c;
}

// Every row must be within tolerance and pass its own checks.
void table_rows(Result& r, int n) {
  ReproduceOptions opt;
  opt.tolerance = kTableTol;
  int rows = 0, good = 0;
  double worst = 0;
  std::string first_bad;
  for (const auto& row : reproduce_table(n, ctx(), opt)) {
    if (!row.computed) {
      if (first_bad.empty()) first_bad = row.row + " " + row.quantity + " (no value)";
      ++rows;
      continue;
    }
    ++rows;
    worst = std::max(worst, std::fabs(row.deviation));
    if (row.ok()) {
      ++good;
    } else if (first_bad.empty()) {
      first_bad = row.row + " " + row.quantity;
    }
  }
  r.detail << " table" << n << "=" << good << "/" << rows << " max|dev|=" << worst;
  r.require(rows > 0 && good == rows, "table " + std::to_string(n) + " row " + first_bad);
}

void runtime(Result& r, double elapsed, double limit) {
  r.detail << " runtime=" << elapsed << "s (<" << limit << "s)";
  r.require(elapsed < limit, "runtime");
}

Result criterion1() {
  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  table_rows(r, 1);
  // A_kappa window: printed*0.95 <= computed <= printed*1.005
  ReproduceOptions opt;
  opt.tolerance = kTableTol;
  for (const auto& row : reproduce_table(1, ctx(), opt)) {
    if (row.quantity != "A_kappa" || !row.computed) continue;
    r.require(*row.computed <= row.printed * 1.005 && *row.computed >= row.printed * 0.95,
              "A_kappa window " + row.row);
  }
  runtime(r, seconds_since(t0), 1.0);
  return r;
}

Result criterion2() {
  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  table_rows(r, 2);
  runtime(r, seconds_since(t0), 1.0);
  return r;
}

Result criterion3() {
  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  table_rows(r, 3);
  runtime(r, seconds_since(t0), 300.0);
  return r;
}

Result criterion4() {
  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  table_rows(r, 4);
  table_rows(r, 6);
  runtime(r, seconds_since(t0), 60.0);
  return r;
}

Result criterion5() {
  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  table_rows(r, 5);
  runtime(r, seconds_since(t0), 60.0);
  return r;
}

Result criterion6() {
  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  const RegionCheck l5 = check_lemma5_small_t(ctx());
  r.detail << " lemma5_small_t=" << to_string(l5.outcome());
  r.require(l5.outcome() == Outcome::Certified, "lemma5_small_t");
  // the first part is the strip 1/2 <= sigma <= 1, 0 <= t <= 3
  if (!l5.parts.empty()) {
    const CheckPart& strip = l5.parts.front();
    r.detail << " max_estimate=" << strip.max_estimate << " max_upper=" << strip.max_upper;
    r.require(strip.outcome == Outcome::Certified && strip.max_upper < -0.21, "lemma5 margin -0.21");
  }
  const RegionCheck l8 = check_lemma8_small_t(ctx());
  r.detail << " lemma8_small_t=" << to_string(l8.outcome());
  r.require(l8.outcome() == Outcome::Certified, "lemma8_small_t");
  const RegionCheck c4 = check_corollary4_range(ctx());
  r.detail << " corollary4_range=" << to_string(c4.outcome());
  r.require(c4.outcome() == Outcome::Certified, "corollary4_range");

  const TrigReport tr = trig_criteria({{3, 4, 1}});
  r.detail << " trig(3,4,1): min=" << tr.min_value << " at " << tr.argmin << " sum=" << tr.abs_sum;
  r.require(tr.nonneg, "trig nonneg");
  r.require(std::fabs(tr.min_value) <= 1e-10, "trig minimum 0 +- 1e-10");
  r.require(std::fabs(tr.argmin - M_PI) <= 1e-10, "trig argmin pi");
  r.require(tr.abs_sum == 2 * 4, "sum |a_n| = 2 a_1");
  r.require(tr.reciprocal_style, "reciprocal style");
  r.require(tr.ratio && *tr.ratio == 0.75, "ratio 3/4");

  const struct {
    int N;
    double step;
  } searches[] = {{2, 0.01}, {3, 0.05}, {4, 0.05}};
  for (const auto& s : searches) {
    const auto found = trig_search(s.N, s.step);
    r.detail << " search(N=" << s.N << ")=" << found.size();
    r.require(found.empty(), "trig_search N=" + std::to_string(s.N));
  }
  runtime(r, seconds_since(t0), 600.0);
  return r;
}

Result criterion7() {
  Result r;
  const auto t0 = std::chrono::steady_clock::now();

  long contained = 0, eta_ok = 0, n = 0;
  for (const auto& g : oracle::kGrid) {
    ++n;
    const ComplexBall z = zeta_complex({g.sigma, g.t}, ctx());
    auto consistent = [](const Ball& b, const char* ref) {
      const Ball v = Ball::from_decimal(ref, 256);
      return abs(b - v).lower() <= 1e-36 * std::max(1.0, std::fabs(v.mid()));
    };
    if (consistent(z.real(), g.re) && consistent(z.imag(), g.im)) ++contained;
    const oracle::Complex w = oracle::zeta_via_eta(g.sigma, g.t);
    const double err = std::hypot(z.real().mid() - static_cast<double>(w.real()),
                                  z.imag().mid() - static_cast<double>(w.imag()));
    if (err <= z.rad() + 1e-30 + 4e-16 * std::max(1.0, std::abs(z.mid()))) ++eta_ok;
  }
  r.detail << " containment=" << contained << "/" << n << " eta=" << eta_ok << "/" << n;
  r.require(n == 100 && contained == n && eta_ok == n, "zeta grid");

  for (const auto& row : tables::growth_rows()) {
    const KChainReport k = check_k_chain(tables::growth_row(row.t0, ctx()), 1000, ctx());
    r.detail << " kchain[" << row.t0 << "]=" << k.violations << "/" << k.samples;
    r.require(k.samples == 1000 && k.violations == 0, "k-chain " + std::string(row.t0));
  }

  for (const auto& name : certificate_names()) {
    const BoundCertificate c = named_certificate(name, ctx());
    if (!c.valid()) {
      r.require(false, "certificate " + name + " invalid");
      continue;
    }
    const SpotReport s = spot_check(c, 200, 1e4, ctx());
    r.detail << " spot[" << name << "]=" << s.violations << "/" << s.samples;
    r.require(s.samples == 200 && s.violations == 0 && s.unresolved == 0, "spot " + name);
  }
  runtime(r, seconds_since(t0), 600.0);
  return r;
}

Result criterion8() {
  Result r;
  auto run = [](Objective o, const FixedInputs& in) {
    OptimizeOptions opt;
    opt.seed = 7;
    opt.keep_trace = true;
    const OptimizationResult res = optimize(o, in, opt, ctx());
    std::string bytes = report::optimize_record(res, "run").dump() + "\n";
    long i = 0;
    for (const auto& [p, v] : res.trace) bytes += report::trace_record(p, v, i++).dump() + "\n";
    return bytes;
  };
  FixedInputs q1;
  q1.W = 22;
  FixedInputs k2;
  k2.t0 = Height::value(500);
  for (auto [o, in, name] : {std::tuple{Objective::Q1TwoRegime, q1, "q1"}, {Objective::K2, k2, "k2"}}) {
    const std::string a = run(o, in), b = run(o, in);
    r.detail << " " << name << ":" << a.size() << "B";
    r.require(a == b, std::string(name) + " reports differ");
  }
  return r;
}

const std::function<Result()> kCriteria[] = {criterion1, criterion2, criterion3, criterion4,
                                              criterion5, criterion6, criterion7, criterion8};

int run_one(int n) {
  Result r;
  try {
    r = kCriteria[n - 1]();
  } catch (const std::exception& e) {
    r.require(false, std::string("exception: ") + e.what());
  }
  std::printf("CRITERION %d %s%s\n", n, r.pass ? "PASS" : "FAIL", r.detail.str().c_str());
  std::fflush(stdout);
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
    const int n = std::atoi(argv[2]);
    if (n < 1 || n > 8) {
      std::fprintf(stderr, "criterion must be 1..8\n");
      return 64;
    }
    return run_one(n);
  }
  if (argc != 1) {
    std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
    return 64;
  }
  int failed = 0;
  for (int n = 1; n <= 8; ++n) failed += run_one(n);
  return failed ? 1 : 0;
}
