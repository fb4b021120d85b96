#pragma once

#include <mpfr.h>

#include <complex>
#include <string>
#include <string_view>

namespace zetabounds {

using Precision = mpfr_prec_t;

// Radii are kept at a fixed small precision and always rounded upward.
inline constexpr Precision kRadiusPrecision = 64;

/// Real midpoint-radius ball. The midpoint is an MPFR number at the working
/// precision, the radius a non-negative MPFR number rounded upward. Every
/// operation returns a ball that contains the exact result of the operation
/// applied to any points of the operand balls.
class Ball {
 public:
  explicit Ball(Precision prec = 128);
  Ball(const Ball& other);
  Ball(Ball&& other) noexcept;
  Ball& operator=(const Ball& other);
  Ball& operator=(Ball&& other) noexcept;
  ~Ball();

  /// Exact ball around a binary64 value.
  static Ball exact(double value, Precision prec);
  static Ball integer(long value, Precision prec);
  /// Ball containing the decimal number written in `text` (e.g. "0.309").
  static Ball from_decimal(std::string_view text, Precision prec);
  static Ball from_rational(mpq_srcptr q, Precision prec);
  /// Smallest representable ball containing [lo, hi].
  static Ball from_endpoints(double lo, double hi, Precision prec);

  Precision precision() const { return mpfr_get_prec(mid_); }

  double mid() const;
  double rad() const;
  /// Outward-rounded endpoints.
  double lower() const;
  double upper() const;

  bool contains(double x) const;
  bool contains(const Ball& other) const;
  bool contains_zero() const;
  bool is_finite() const;
  /// True when the radius is zero.
  bool is_exact() const;

  /// Zero-radius ball at the (rounded up) upper endpoint.
  Ball upper_point() const;
  Ball lower_point() const;
  /// Same enclosure, re-rounded to another midpoint precision.
  Ball with_precision(Precision prec) const;

  std::string to_string(int digits = 17) const;

  mpfr_srcptr mid_ptr() const { return mid_; }
  mpfr_srcptr rad_ptr() const { return rad_; }
  mpfr_ptr mid_ptr() { return mid_; }
  mpfr_ptr rad_ptr() { return rad_; }

  Ball& operator+=(const Ball& other);
  Ball& operator-=(const Ball& other);
  Ball& operator*=(const Ball& other);
  Ball& operator/=(const Ball& other);

 private:
  mpfr_t mid_;
  mpfr_t rad_;
};

Ball operator+(const Ball& a, const Ball& b);
Ball operator-(const Ball& a, const Ball& b);
Ball operator*(const Ball& a, const Ball& b);
// Throws IndeterminateError when `b` contains zero.
Ball operator/(const Ball& a, const Ball& b);
Ball operator-(const Ball& a);

Ball operator+(const Ball& a, double b);
Ball operator-(const Ball& a, double b);
Ball operator*(const Ball& a, double b);
Ball operator/(const Ball& a, double b);
Ball operator+(double a, const Ball& b);
Ball operator-(double a, const Ball& b);
Ball operator*(double a, const Ball& b);
Ball operator/(double a, const Ball& b);

/// Ball around the shortest decimal string that reads back as `v`, so that
/// 0.1 means one tenth rather than its binary neighbour.
Ball decimal_ball(double v, Precision prec);

Ball abs(const Ball& x);
Ball sqr(const Ball& x);
Ball sqrt(const Ball& x);
// sqrt of a quantity known to be non-negative whose enclosure may dip below
// zero (|z|^2 computed from balls, for instance).
Ball sqrt_nonneg(const Ball& x);
Ball log(const Ball& x);
Ball log1p(const Ball& x);
Ball exp(const Ball& x);
Ball pow(const Ball& base, const Ball& exponent);
Ball pow(const Ball& base, double exponent);
Ball sin(const Ball& x);
Ball cos(const Ball& x);
Ball min(const Ball& a, const Ball& b);
Ball max(const Ball& a, const Ball& b);
Ball hull(const Ball& a, const Ball& b);

Ball const_pi(Precision prec);
Ball const_e(Precision prec);
Ball const_euler(Precision prec);
Ball const_log2(Precision prec);

// Ball-safe comparisons: true only if the relation holds for every pair of
// points in the two balls.
bool certainly_lt(const Ball& a, const Ball& b);
bool certainly_le(const Ball& a, const Ball& b);
inline bool certainly_gt(const Ball& a, const Ball& b) { return certainly_lt(b, a); }
inline bool certainly_ge(const Ball& a, const Ball& b) { return certainly_le(b, a); }
bool certainly_lt(const Ball& a, double b);
bool certainly_le(const Ball& a, double b);
bool certainly_gt(const Ball& a, double b);
bool certainly_ge(const Ball& a, double b);
inline bool certainly_positive(const Ball& a) { return certainly_gt(a, 0.0); }

/// Rectangular complex ball (a real ball for each part).
class ComplexBall {
 public:
  explicit ComplexBall(Precision prec = 128);
  ComplexBall(Ball re, Ball im);
  explicit ComplexBall(Ball re);

  static ComplexBall exact(double re, double im, Precision prec);

  const Ball& real() const { return re_; }
  const Ball& imag() const { return im_; }
  Precision precision() const;

  std::complex<double> mid() const;
  /// Upper bound on the Euclidean radius.
  double rad() const;
  bool contains(std::complex<double> z) const;
  bool contains(const ComplexBall& other) const;
  bool contains_zero() const;
  bool is_finite() const;

  ComplexBall conj() const;

  ComplexBall& operator+=(const ComplexBall& other);
  ComplexBall& operator-=(const ComplexBall& other);
  ComplexBall& operator*=(const ComplexBall& other);

 private:
  Ball re_;
  Ball im_;
};

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator-(const ComplexBall& a);
ComplexBall operator+(const ComplexBall& a, const Ball& b);
ComplexBall operator-(const ComplexBall& a, const Ball& b);
ComplexBall operator*(const ComplexBall& a, const Ball& b);
ComplexBall operator/(const ComplexBall& a, const Ball& b);
ComplexBall operator+(const ComplexBall& a, double b);
ComplexBall operator-(const ComplexBall& a, double b);
ComplexBall operator*(const ComplexBall& a, double b);

Ball abs(const ComplexBall& z);
ComplexBall exp(const ComplexBall& z);

}  // namespace zetabounds
