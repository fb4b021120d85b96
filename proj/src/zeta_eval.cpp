#include "zetabounds/zeta_eval.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "zetabounds/errors.hpp"

namespace zetabounds {
namespace {

constexpr int kMinTerms = 20;
constexpr int kMaxTerms = 150;
constexpr int kMinN = 40;
constexpr int kGuardBits = 32;

// B_{2k} / (2k)! for k = 0..kMaxTerms+1, exact.
const std::vector<mpq_class>& bernoulli_coefficients() {
  static const std::vector<mpq_class> table = [] {
    const int n_max = 2 * (kMaxTerms + 1);
    std::vector<mpq_class> b(n_max + 1);
    b[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
      // sum_{j=0}^{n} C(n+1, j) B_j = 0
      mpq_class acc = 0;
      mpz_class binom = 1;  // C(n+1, 0)
      for (int j = 0; j < n; ++j) {
        acc += binom * b[j];
        binom = binom * (n + 1 - j) / (j + 1);
      }
      b[n] = -acc / (n + 1);
    }
    std::vector<mpq_class> out(kMaxTerms + 2);
    mpz_class fact = 1;
    for (int k = 0; k <= kMaxTerms + 1; ++k) {
      if (k > 0) fact *= (2 * k - 1) * (2 * k);
      out[k] = b[2 * k] / fact;
      out[k].canonicalize();
    }
    return out;
  }();
  return table;
}

// Zero-centred ball of radius `bound.upper()`.
Ball error_ball(const Ball& bound, Precision prec) {
  const double u = bound.upper();
  return Ball::from_endpoints(-u, u, prec);
}

ComplexBall complex_error(const Ball& bound, Precision prec) {
  return ComplexBall(error_ball(bound, prec), error_ball(bound, prec));
}

// n^{-s} given log n.
ComplexBall neg_power(const Ball& log_n, const ComplexBall& s) {
  if (s.imag().is_exact() && mpfr_zero_p(s.imag().mid_ptr())) {
    return ComplexBall(exp(-(s.real() * log_n)), Ball(s.real().precision()));
  }
  return exp(ComplexBall(-(s.real() * log_n), -(s.imag() * log_n)));
}

bool touches_one(const ComplexBall& s) {
  return s.real().contains(1.0) && s.imag().contains_zero();
}

enum class Want { Zeta, Derivative, Both, TimesSMinus1 };

struct EmResult {
  ComplexBall value;
  ComplexBall derivative;
};

// Euler-Maclaurin summation with N head terms and M Bernoulli corrections:
//   zeta(s) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2
//             + sum_{k=1}^{M} B_{2k}/(2k)! P_k(s) N^{-s-2k+1} + R,
// P_1 = s, P_{k+1} = P_k (s+2k-1)(s+2k), and
//   |R| <= 2 zeta(2M+1) / (2pi)^{2M+1} |P_{M+1}(s)| N^{-sigma-2M} / (sigma+2M).
// Derivatives are taken term by term, with the matching remainder bound.
EmResult euler_maclaurin(const ComplexBall& s_in, const PrecisionContext& ctx, Want want) {
  const Precision wp = ctx.bits() + kGuardBits;
  const ComplexBall s(s_in.real().with_precision(wp), s_in.imag().with_precision(wp));
  const bool need_value = want != Want::Derivative;
  const bool need_deriv = want == Want::Derivative || want == Want::Both;

  if (want != Want::TimesSMinus1 && touches_one(s)) throw PoleError("zeta has a pole at s = 1");

  const double sigma_lo = s.real().lower();
  if (!(sigma_lo > -2.0 * kMinTerms + 1.0)) throw DomainError("Euler-Maclaurin: sigma too negative");
  const double t_abs = std::max(std::fabs(s.imag().lower()), std::fabs(s.imag().upper()));
  const double target = std::ldexp(1.0, -static_cast<int>(ctx.bits()) - 8);

  const auto& coeff = bernoulli_coefficients();
  const Ball two_pi = 2.0 * const_pi(wp);
  const Ball zeta_odd_bound = Ball::from_decimal("1.21", wp);
  const Ball sigma_low = s.real().lower_point();

  long N = std::max<long>(kMinN, static_cast<long>(std::ceil(t_abs / 3.0)));
  for (;;) {
    const Ball N_ball = Ball::integer(N, wp);
    const Ball log_N = log(N_ball);
    const ComplexBall N_ms = neg_power(log_N, s);  // N^{-s}
    const ComplexBall N_1ms = N_ms * N_ball;       // N^{1-s}

    ComplexBall corr(wp), dcorr(wp);
    ComplexBall P = s;
    ComplexBall dP = ComplexBall::exact(1.0, 0.0, wp);
    Ball N_fac = 1.0 / N_ball;  // N^{1-2k}
    const Ball inv_N2 = 1.0 / (N_ball * N_ball);
    Ball remainder(wp), dremainder(wp);
    bool converged = false;
    // 2 zeta(2k+1) / (2 pi)^{2k+1} and N^{-sigma-2k}, updated in the loop.
    const Ball inv_two_pi2 = 1.0 / sqr(two_pi);
    Ball C = 2.0 * zeta_odd_bound / two_pi;
    Ball N_ma = exp(-(sigma_low * log_N));

    for (int k = 1; k <= kMaxTerms; ++k) {
      const Ball c = Ball::from_rational(coeff[k].get_mpq_t(), wp);
      const ComplexBall base = N_ms * (N_fac * c);
      if (need_value) corr += P * base;
      if (need_deriv) dcorr += (dP - P * log_N) * base;

      const ComplexBall f1 = s + static_cast<double>(2 * k - 1);
      const ComplexBall f2 = s + static_cast<double>(2 * k);
      const ComplexBall f12 = f1 * f2;
      const ComplexBall P_next = P * f12;
      if (need_deriv) dP = dP * f12 + P * (s * 2.0 + static_cast<double>(4 * k - 1));
      P = P_next;
      N_fac *= inv_N2;

      // Remainder after k correction terms.
      const Ball a = sigma_low + static_cast<double>(2 * k);
      C *= inv_two_pi2;
      N_ma *= inv_N2;
      bool ok = true;
      if (need_value) {
        remainder = C * abs(P) * N_ma / a;
        ok = ok && certainly_lt(remainder, target);
      }
      if (need_deriv) {
        dremainder = C * (abs(dP) * N_ma / a + abs(P) * N_ma * (log_N / a + 1.0 / (a * a)));
        ok = ok && certainly_lt(dremainder, target);
      }
      if (k >= kMinTerms && ok) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      N *= 2;
      continue;
    }

    ComplexBall head(wp), dhead(wp);
    for (long n = 1; n < N; ++n) {
      if (n == 1) {
        head += ComplexBall::exact(1.0, 0.0, wp);
        continue;
      }
      const Ball log_n = log(Ball::integer(n, wp));
      const ComplexBall term = neg_power(log_n, s);
      if (need_value) head += term;
      if (need_deriv) dhead -= term * log_n;
    }

    EmResult out{ComplexBall(ctx.bits()), ComplexBall(ctx.bits())};
    const ComplexBall half_N_ms = N_ms * 0.5;
    if (want == Want::TimesSMinus1) {
      const ComplexBall regular = head + half_N_ms + corr + complex_error(remainder, wp);
      out.value = (s - 1.0) * regular + N_1ms;
    } else {
      const ComplexBall s_m1 = s - 1.0;
      const ComplexBall pole = N_1ms / s_m1;
      if (need_value) out.value = head + pole + half_N_ms + corr + complex_error(remainder, wp);
      if (need_deriv) {
        out.derivative = dhead - pole * log_N - pole / s_m1 - half_N_ms * log_N + dcorr +
                         complex_error(dremainder, wp);
      }
    }
    auto narrow = [&](const ComplexBall& z) {
      return ComplexBall(z.real().with_precision(ctx.bits()), z.imag().with_precision(ctx.bits()));
    };
    out.value = narrow(out.value);
    out.derivative = narrow(out.derivative);
    return out;
  }
}

ComplexBall to_ball(ComplexPoint s, const PrecisionContext& ctx) {
  if (!std::isfinite(s.sigma) || !std::isfinite(s.t)) throw DomainError("non-finite point");
  return ComplexBall::exact(s.sigma, s.t, ctx.bits());
}

}  // namespace

PrecisionContext::PrecisionContext(Precision bits)
    : bits_(bits), gamma_(64), e_(64), pi_(64) {
  if (bits < 64) throw DomainError("precision must be at least 64 bits");
  gamma_ = const_euler(bits);
  e_ = const_e(bits);
  pi_ = const_pi(bits);
}

Ball PrecisionContext::height_H() const {
  return Ball::integer(static_cast<long>(kHeightH), bits_);
}

Ball zeta_real(double sigma, const PrecisionContext& ctx) {
  if (!(sigma > 1.0)) throw DomainError("zeta_real requires sigma > 1");
  return zeta_real(Ball::exact(sigma, ctx.bits()), ctx);
}

Ball zeta_real(const Ball& sigma, const PrecisionContext& ctx) {
  if (!certainly_gt(sigma, 1.0)) throw DomainError("zeta_real requires sigma > 1");
  const ComplexBall s(sigma, Ball(sigma.precision()));
  return euler_maclaurin(s, ctx, Want::Zeta).value.real();
}

ComplexBall zeta_complex(ComplexPoint s, const PrecisionContext& ctx) {
  if (s.sigma == 1.0 && s.t == 0.0) throw PoleError("zeta has a pole at s = 1");
  return zeta_complex(to_ball(s, ctx), ctx);
}

ComplexBall zeta_complex(const ComplexBall& s, const PrecisionContext& ctx) {
  return euler_maclaurin(s, ctx, Want::Zeta).value;
}

ComplexBall zeta_prime(ComplexPoint s, const PrecisionContext& ctx) {
  if (s.sigma == 1.0 && s.t == 0.0) throw PoleError("zeta has a pole at s = 1");
  return zeta_prime(to_ball(s, ctx), ctx);
}

ComplexBall zeta_prime(const ComplexBall& s, const PrecisionContext& ctx) {
  return euler_maclaurin(s, ctx, Want::Derivative).derivative;
}

ComplexBall zeta_times_s_minus_1(const ComplexBall& s, const PrecisionContext& ctx) {
  return euler_maclaurin(s, ctx, Want::TimesSMinus1).value;
}

ComplexBall log_deriv(ComplexPoint s, const PrecisionContext& ctx) {
  if (s.sigma == 1.0 && s.t == 0.0) throw PoleError("zeta has a pole at s = 1");
  return log_deriv(to_ball(s, ctx), ctx);
}

ComplexBall log_deriv(const ComplexBall& s, const PrecisionContext& ctx) {
  const EmResult r = euler_maclaurin(s, ctx, Want::Both);
  if (r.value.contains_zero()) throw IndeterminateError("zeta ball contains zero");
  return r.derivative / r.value;
}

ComplexBall log_deriv_adaptive(ComplexPoint s, const PrecisionContext& ctx, Precision max_bits) {
  PrecisionContext cur = ctx;
  for (;;) {
    try {
      return log_deriv(s, cur);
    } catch (const IndeterminateError&) {
      if (cur.bits() * 2 > max_bits) throw;
      cur = cur.doubled();
    }
  }
}

ComplexBall reciprocal_zeta_adaptive(ComplexPoint s, const PrecisionContext& ctx,
                                     Precision max_bits) {
  PrecisionContext cur = ctx;
  for (;;) {
    try {
      const ComplexBall z = zeta_complex(s, cur);
      return ComplexBall::exact(1.0, 0.0, cur.bits()) / z;
    } catch (const IndeterminateError&) {
      if (cur.bits() * 2 > max_bits) throw;
      cur = cur.doubled();
    }
  }
}

}  // namespace zetabounds
