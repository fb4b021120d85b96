#pragma once

#include <cstdint>

#include "zetabounds/ball.hpp"

namespace zetabounds {

/// Working precision plus the constants that depend on it. Immutable once
/// built, so one context can be shared across threads.
class PrecisionContext {
 public:
  // Height up to which the Riemann hypothesis has been verified.
  static constexpr std::uint64_t kHeightH = 3000175332800ULL;

  explicit PrecisionContext(Precision bits = 128);

  Precision bits() const { return bits_; }
  const Ball& gamma_euler() const { return gamma_; }
  const Ball& e() const { return e_; }
  const Ball& pi() const { return pi_; }
  Ball height_H() const;
  // Same context at twice the precision.
  PrecisionContext doubled() const { return PrecisionContext(2 * bits_); }

 private:
  Precision bits_;
  Ball gamma_;
  Ball e_;
  Ball pi_;
};

struct ComplexPoint {
  double sigma = 0.0;
  double t = 0.0;
};

// zeta(sigma) for real sigma > 1. DomainError otherwise.
Ball zeta_real(double sigma, const PrecisionContext& ctx);
Ball zeta_real(const Ball& sigma, const PrecisionContext& ctx);

// zeta(s); PoleError if s (or the ball s) touches 1.
ComplexBall zeta_complex(ComplexPoint s, const PrecisionContext& ctx);
ComplexBall zeta_complex(const ComplexBall& s, const PrecisionContext& ctx);

ComplexBall zeta_prime(ComplexPoint s, const PrecisionContext& ctx);
ComplexBall zeta_prime(const ComplexBall& s, const PrecisionContext& ctx);

/// (s - 1) zeta(s), entire, so it can be evaluated on balls around s = 1.
ComplexBall zeta_times_s_minus_1(const ComplexBall& s, const PrecisionContext& ctx);

/// zeta'(s)/zeta(s). IndeterminateError if the zeta ball contains 0.
ComplexBall log_deriv(ComplexPoint s, const PrecisionContext& ctx);
ComplexBall log_deriv(const ComplexBall& s, const PrecisionContext& ctx);
/// log_deriv, doubling the precision on indeterminate division up to max_bits.
ComplexBall log_deriv_adaptive(ComplexPoint s, const PrecisionContext& ctx,
                               Precision max_bits = 2048);
/// 1/zeta(s) with the same precision-doubling retry.
ComplexBall reciprocal_zeta_adaptive(ComplexPoint s, const PrecisionContext& ctx,
                                     Precision max_bits = 2048);

}  // namespace zetabounds
