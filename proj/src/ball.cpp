#include "zetabounds/ball.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <string>
#include <utility>

#include "zetabounds/errors.hpp"

namespace zetabounds {
namespace {

// Scoped MPFR temporary.
struct Tmp {
  explicit Tmp(Precision prec) { mpfr_init2(v, prec); }
  ~Tmp() { mpfr_clear(v); }
  Tmp(const Tmp&) = delete;
  Tmp& operator=(const Tmp&) = delete;
  mpfr_t v;
};

Precision max_prec(const Ball& a, const Ball& b) {
  return std::max(a.precision(), b.precision());
}

// rad += one ulp of mid if the operation that produced mid was inexact.
void add_rounding_error(mpfr_ptr rad, mpfr_srcptr mid, int ternary) {
  if (ternary == 0 || !mpfr_regular_p(mid)) return;
  Tmp ulp(8);
  mpfr_set_ui_2exp(ulp.v, 1, mpfr_get_exp(mid) - mpfr_get_prec(mid), MPFR_RNDU);
  mpfr_add(rad, rad, ulp.v, MPFR_RNDU);
}

void lower_into(mpfr_ptr out, const Ball& a) {
  mpfr_sub(out, a.mid_ptr(), a.rad_ptr(), MPFR_RNDD);
}

void upper_into(mpfr_ptr out, const Ball& a) {
  mpfr_add(out, a.mid_ptr(), a.rad_ptr(), MPFR_RNDU);
}

Ball from_interval(mpfr_srcptr lo, mpfr_srcptr hi, Precision prec) {
  Ball r(prec);
  mpfr_add(r.mid_ptr(), lo, hi, MPFR_RNDN);
  mpfr_div_2ui(r.mid_ptr(), r.mid_ptr(), 1, MPFR_RNDN);
  Tmp a(kRadiusPrecision), b(kRadiusPrecision);
  mpfr_sub(a.v, hi, r.mid_ptr(), MPFR_RNDU);
  mpfr_sub(b.v, r.mid_ptr(), lo, MPFR_RNDU);
  mpfr_max(r.rad_ptr(), a.v, b.v, MPFR_RNDU);
  if (mpfr_sgn(r.rad_ptr()) < 0) mpfr_set_zero(r.rad_ptr(), 1);
  return r;
}

using MpfrUnary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Ball apply_increasing(const Ball& x, MpfrUnary f) {
  const Precision p = x.precision();
  Tmp lo(p), hi(p);
  lower_into(lo.v, x);
  upper_into(hi.v, x);
  f(lo.v, lo.v, MPFR_RNDD);
  f(hi.v, hi.v, MPFR_RNDU);
  return from_interval(lo.v, hi.v, p);
}

// f(mid) rounded to nearest, radius grown by Lipschitz constant 1.
Ball apply_lipschitz1(const Ball& x, MpfrUnary f) {
  Ball r(x.precision());
  int t = f(r.mid_ptr(), x.mid_ptr(), MPFR_RNDN);
  mpfr_set(r.rad_ptr(), x.rad_ptr(), MPFR_RNDU);
  add_rounding_error(r.rad_ptr(), r.mid_ptr(), t);
  return r;
}

}  // namespace

Ball::Ball(Precision prec) {
  mpfr_init2(mid_, prec);
  mpfr_init2(rad_, kRadiusPrecision);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

Ball::Ball(const Ball& other) {
  mpfr_init2(mid_, other.precision());
  mpfr_init2(rad_, kRadiusPrecision);
  mpfr_set(mid_, other.mid_, MPFR_RNDN);
  mpfr_set(rad_, other.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& other) noexcept : Ball(other.precision()) {
  mpfr_swap(mid_, other.mid_);
  mpfr_swap(rad_, other.rad_);
}

Ball& Ball::operator=(const Ball& other) {
  if (this != &other) {
    mpfr_set_prec(mid_, other.precision());
    mpfr_set(mid_, other.mid_, MPFR_RNDN);
    mpfr_set(rad_, other.rad_, MPFR_RNDU);
  }
  return *this;
}

Ball& Ball::operator=(Ball&& other) noexcept {
  mpfr_swap(mid_, other.mid_);
  mpfr_swap(rad_, other.rad_);
  return *this;
}

Ball::~Ball() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

Ball Ball::exact(double value, Precision prec) {
  Ball r(std::max<Precision>(prec, 53));
  mpfr_set_d(r.mid_, value, MPFR_RNDN);
  return r;
}

Ball Ball::integer(long value, Precision prec) {
  Ball r(prec);
  int t = mpfr_set_si(r.mid_, value, MPFR_RNDN);
  add_rounding_error(r.rad_, r.mid_, t);
  return r;
}

Ball Ball::from_decimal(std::string_view text, Precision prec) {
  Ball r(prec);
  const std::string s(text);
  if (s.empty() || mpfr_set_str(r.mid_, s.c_str(), 10, MPFR_RNDN) != 0 || !mpfr_number_p(r.mid_)) {
    throw DomainError("not a decimal number: " + s);
  }
  // mpfr_set_str's return value is not a ternary; always allow one ulp.
  add_rounding_error(r.rad_, r.mid_, 1);
  return r;
}

Ball Ball::from_rational(mpq_srcptr q, Precision prec) {
  Ball r(prec);
  int t = mpfr_set_q(r.mid_, q, MPFR_RNDN);
  add_rounding_error(r.rad_, r.mid_, t);
  return r;
}

Ball Ball::from_endpoints(double lo, double hi, Precision prec) {
  if (!(lo <= hi)) throw DomainError("from_endpoints: lo > hi");
  Tmp a(53), b(53);
  mpfr_set_d(a.v, lo, MPFR_RNDD);
  mpfr_set_d(b.v, hi, MPFR_RNDU);
  return from_interval(a.v, b.v, std::max<Precision>(prec, 53));
}

double Ball::mid() const { return mpfr_get_d(mid_, MPFR_RNDN); }
double Ball::rad() const { return mpfr_get_d(rad_, MPFR_RNDU); }

double Ball::lower() const {
  Tmp t(precision());
  lower_into(t.v, *this);
  return mpfr_get_d(t.v, MPFR_RNDD);
}

double Ball::upper() const {
  Tmp t(precision());
  upper_into(t.v, *this);
  return mpfr_get_d(t.v, MPFR_RNDU);
}

bool Ball::contains(double x) const {
  Tmp lo(precision()), hi(precision());
  lower_into(lo.v, *this);
  upper_into(hi.v, *this);
  return mpfr_cmp_d(lo.v, x) <= 0 && mpfr_cmp_d(hi.v, x) >= 0;
}

bool Ball::contains(const Ball& other) const {
  const Precision p = max_prec(*this, other);
  Tmp lo(p), hi(p), olo(p), ohi(p);
  lower_into(lo.v, *this);
  upper_into(hi.v, *this);
  // Other's endpoints rounded outward so that containment is conservative.
  lower_into(olo.v, other);
  upper_into(ohi.v, other);
  return mpfr_lessequal_p(lo.v, olo.v) && mpfr_lessequal_p(ohi.v, hi.v);
}

bool Ball::contains_zero() const { return mpfr_cmpabs(mid_, rad_) <= 0; }

bool Ball::is_finite() const { return mpfr_number_p(mid_) && mpfr_number_p(rad_); }

bool Ball::is_exact() const { return mpfr_zero_p(rad_); }

Ball Ball::upper_point() const {
  Ball r(precision());
  upper_into(r.mid_, *this);
  return r;
}

Ball Ball::lower_point() const {
  Ball r(precision());
  lower_into(r.mid_, *this);
  return r;
}

Ball Ball::with_precision(Precision prec) const {
  Ball r(prec);
  int t = mpfr_set(r.mid_, mid_, MPFR_RNDN);
  mpfr_set(r.rad_, rad_, MPFR_RNDU);
  add_rounding_error(r.rad_, r.mid_, t);
  return r;
}

std::string Ball::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg +/- %.3Rg", digits, mid_, rad_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Ball& Ball::operator+=(const Ball& other) { return *this = *this + other; }
Ball& Ball::operator-=(const Ball& other) { return *this = *this - other; }
Ball& Ball::operator*=(const Ball& other) { return *this = *this * other; }
Ball& Ball::operator/=(const Ball& other) { return *this = *this / other; }

Ball operator+(const Ball& a, const Ball& b) {
  Ball r(max_prec(a, b));
  int t = mpfr_add(r.mid_ptr(), a.mid_ptr(), b.mid_ptr(), MPFR_RNDN);
  mpfr_add(r.rad_ptr(), a.rad_ptr(), b.rad_ptr(), MPFR_RNDU);
  add_rounding_error(r.rad_ptr(), r.mid_ptr(), t);
  return r;
}

Ball operator-(const Ball& a, const Ball& b) {
  Ball r(max_prec(a, b));
  int t = mpfr_sub(r.mid_ptr(), a.mid_ptr(), b.mid_ptr(), MPFR_RNDN);
  mpfr_add(r.rad_ptr(), a.rad_ptr(), b.rad_ptr(), MPFR_RNDU);
  add_rounding_error(r.rad_ptr(), r.mid_ptr(), t);
  return r;
}

Ball operator*(const Ball& a, const Ball& b) {
  Ball r(max_prec(a, b));
  int t = mpfr_mul(r.mid_ptr(), a.mid_ptr(), b.mid_ptr(), MPFR_RNDN);
  Tmp x(kRadiusPrecision), y(kRadiusPrecision), z(kRadiusPrecision);
  // |a.mid| * b.rad + |b.mid| * a.rad + a.rad * b.rad, each rounded up.
  mpfr_mul(x.v, a.mid_ptr(), b.rad_ptr(), MPFR_RNDA);
  mpfr_abs(x.v, x.v, MPFR_RNDU);
  mpfr_mul(y.v, b.mid_ptr(), a.rad_ptr(), MPFR_RNDA);
  mpfr_abs(y.v, y.v, MPFR_RNDU);
  mpfr_mul(z.v, a.rad_ptr(), b.rad_ptr(), MPFR_RNDU);
  mpfr_add(r.rad_ptr(), x.v, y.v, MPFR_RNDU);
  mpfr_add(r.rad_ptr(), r.rad_ptr(), z.v, MPFR_RNDU);
  add_rounding_error(r.rad_ptr(), r.mid_ptr(), t);
  return r;
}

Ball operator/(const Ball& a, const Ball& b) {
  if (b.contains_zero()) throw IndeterminateError("ball division by a ball containing zero");
  Ball r(max_prec(a, b));
  int t = mpfr_div(r.mid_ptr(), a.mid_ptr(), b.mid_ptr(), MPFR_RNDN);
  if (!a.is_exact() || !b.is_exact()) {
    // |a/b - am/bm| <= (|am| rb + |bm| ra) / (|bm| (|bm| - rb))
    Tmp num(kRadiusPrecision), x(kRadiusPrecision), den(kRadiusPrecision),
        babs(b.precision());
    mpfr_mul(num.v, a.mid_ptr(), b.rad_ptr(), MPFR_RNDA);
    mpfr_abs(num.v, num.v, MPFR_RNDU);
    mpfr_mul(x.v, b.mid_ptr(), a.rad_ptr(), MPFR_RNDA);
    mpfr_abs(x.v, x.v, MPFR_RNDU);
    mpfr_add(num.v, num.v, x.v, MPFR_RNDU);
    mpfr_abs(babs.v, b.mid_ptr(), MPFR_RNDN);
    mpfr_sub(den.v, babs.v, b.rad_ptr(), MPFR_RNDD);
    mpfr_mul(den.v, den.v, babs.v, MPFR_RNDD);
    mpfr_div(r.rad_ptr(), num.v, den.v, MPFR_RNDU);
  }
  add_rounding_error(r.rad_ptr(), r.mid_ptr(), t);
  return r;
}

Ball operator-(const Ball& a) {
  Ball r(a);
  mpfr_neg(r.mid_ptr(), r.mid_ptr(), MPFR_RNDN);
  return r;
}

Ball operator+(const Ball& a, double b) { return a + Ball::exact(b, a.precision()); }
Ball operator-(const Ball& a, double b) { return a - Ball::exact(b, a.precision()); }
Ball operator*(const Ball& a, double b) { return a * Ball::exact(b, a.precision()); }
Ball operator/(const Ball& a, double b) { return a / Ball::exact(b, a.precision()); }
Ball operator+(double a, const Ball& b) { return Ball::exact(a, b.precision()) + b; }
Ball operator-(double a, const Ball& b) { return Ball::exact(a, b.precision()) - b; }
Ball operator*(double a, const Ball& b) { return Ball::exact(a, b.precision()) * b; }
Ball operator/(double a, const Ball& b) { return Ball::exact(a, b.precision()) / b; }

Ball decimal_ball(double v, Precision prec) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return Ball::from_decimal(std::string_view(buf, res.ptr - buf), prec);
}

Ball abs(const Ball& x) {
  if (mpfr_cmpabs(x.mid_ptr(), x.rad_ptr()) > 0) {
    Ball r(x);
    mpfr_abs(r.mid_ptr(), r.mid_ptr(), MPFR_RNDN);
    return r;
  }
  Tmp zero(x.precision()), hi(x.precision());
  mpfr_set_zero(zero.v, 1);
  mpfr_abs(hi.v, x.mid_ptr(), MPFR_RNDN);
  mpfr_add(hi.v, hi.v, x.rad_ptr(), MPFR_RNDU);
  return from_interval(zero.v, hi.v, x.precision());
}

Ball sqr(const Ball& x) {
  const Ball a = abs(x);
  return a * a;
}

Ball sqrt(const Ball& x) {
  Tmp lo(x.precision());
  lower_into(lo.v, x);
  if (mpfr_sgn(lo.v) < 0) throw DomainError("sqrt of a ball with negative part");
  return apply_increasing(x, mpfr_sqrt);
}

Ball sqrt_nonneg(const Ball& x) {
  const Precision p = x.precision();
  Tmp lo(p), hi(p);
  lower_into(lo.v, x);
  upper_into(hi.v, x);
  if (mpfr_sgn(hi.v) < 0) throw DomainError("sqrt_nonneg of a negative ball");
  if (mpfr_sgn(lo.v) < 0) mpfr_set_zero(lo.v, 1);
  mpfr_sqrt(lo.v, lo.v, MPFR_RNDD);
  mpfr_sqrt(hi.v, hi.v, MPFR_RNDU);
  return from_interval(lo.v, hi.v, p);
}

Ball log(const Ball& x) {
  Tmp lo(x.precision());
  lower_into(lo.v, x);
  if (mpfr_sgn(lo.v) <= 0) throw DomainError("log of a ball that is not strictly positive");
  return apply_increasing(x, mpfr_log);
}

Ball log1p(const Ball& x) {
  Tmp lo(x.precision());
  lower_into(lo.v, x);
  if (mpfr_cmp_si(lo.v, -1) <= 0) throw DomainError("log1p of a ball reaching -1");
  return apply_increasing(x, mpfr_log1p);
}

Ball exp(const Ball& x) { return apply_increasing(x, mpfr_exp); }

Ball pow(const Ball& base, const Ball& exponent) { return exp(exponent * log(base)); }

Ball pow(const Ball& base, double exponent) {
  if (exponent == 1.0) return base;
  if (exponent == 0.5) return sqrt(base);
  return exp(exponent * log(base));
}

Ball sin(const Ball& x) { return apply_lipschitz1(x, mpfr_sin); }
Ball cos(const Ball& x) { return apply_lipschitz1(x, mpfr_cos); }

Ball min(const Ball& a, const Ball& b) {
  const Precision p = max_prec(a, b);
  Tmp alo(p), ahi(p), blo(p), bhi(p);
  lower_into(alo.v, a);
  upper_into(ahi.v, a);
  lower_into(blo.v, b);
  upper_into(bhi.v, b);
  mpfr_min(alo.v, alo.v, blo.v, MPFR_RNDD);
  mpfr_min(ahi.v, ahi.v, bhi.v, MPFR_RNDU);
  return from_interval(alo.v, ahi.v, p);
}

Ball max(const Ball& a, const Ball& b) { return -min(-a, -b); }

Ball hull(const Ball& a, const Ball& b) {
  const Precision p = max_prec(a, b);
  Tmp alo(p), ahi(p), blo(p), bhi(p);
  lower_into(alo.v, a);
  upper_into(ahi.v, a);
  lower_into(blo.v, b);
  upper_into(bhi.v, b);
  mpfr_min(alo.v, alo.v, blo.v, MPFR_RNDD);
  mpfr_max(ahi.v, ahi.v, bhi.v, MPFR_RNDU);
  return from_interval(alo.v, ahi.v, p);
}

namespace {
using MpfrConst = int (*)(mpfr_ptr, mpfr_rnd_t);
Ball constant(MpfrConst f, Precision prec) {
  Ball r(prec);
  int t = f(r.mid_ptr(), MPFR_RNDN);
  add_rounding_error(r.rad_ptr(), r.mid_ptr(), t);
  return r;
}
}  // namespace

Ball const_pi(Precision prec) { return constant(mpfr_const_pi, prec); }
Ball const_euler(Precision prec) { return constant(mpfr_const_euler, prec); }
Ball const_log2(Precision prec) { return constant(mpfr_const_log2, prec); }
Ball const_e(Precision prec) { return exp(Ball::integer(1, prec)); }

bool certainly_lt(const Ball& a, const Ball& b) {
  const Precision p = max_prec(a, b);
  Tmp ahi(p), blo(p);
  upper_into(ahi.v, a);
  lower_into(blo.v, b);
  return mpfr_less_p(ahi.v, blo.v);
}

bool certainly_le(const Ball& a, const Ball& b) {
  const Precision p = max_prec(a, b);
  Tmp ahi(p), blo(p);
  upper_into(ahi.v, a);
  lower_into(blo.v, b);
  return mpfr_lessequal_p(ahi.v, blo.v);
}

bool certainly_lt(const Ball& a, double b) { return certainly_lt(a, Ball::exact(b, a.precision())); }
bool certainly_le(const Ball& a, double b) { return certainly_le(a, Ball::exact(b, a.precision())); }
bool certainly_gt(const Ball& a, double b) { return certainly_lt(Ball::exact(b, a.precision()), a); }
bool certainly_ge(const Ball& a, double b) { return certainly_le(Ball::exact(b, a.precision()), a); }

// ---------------------------------------------------------------------------
// ComplexBall

ComplexBall::ComplexBall(Precision prec) : re_(prec), im_(prec) {}
ComplexBall::ComplexBall(Ball re, Ball im) : re_(std::move(re)), im_(std::move(im)) {}
ComplexBall::ComplexBall(Ball re) : re_(std::move(re)), im_(re_.precision()) {}

ComplexBall ComplexBall::exact(double re, double im, Precision prec) {
  return ComplexBall(Ball::exact(re, prec), Ball::exact(im, prec));
}

Precision ComplexBall::precision() const { return std::max(re_.precision(), im_.precision()); }

std::complex<double> ComplexBall::mid() const { return {re_.mid(), im_.mid()}; }

double ComplexBall::rad() const {
  const Ball r = sqrt_nonneg(sqr(Ball::exact(re_.rad(), 53)) + sqr(Ball::exact(im_.rad(), 53)));
  return r.upper();
}

bool ComplexBall::contains(std::complex<double> z) const {
  return re_.contains(z.real()) && im_.contains(z.imag());
}

bool ComplexBall::contains(const ComplexBall& other) const {
  return re_.contains(other.re_) && im_.contains(other.im_);
}

bool ComplexBall::contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }

bool ComplexBall::is_finite() const { return re_.is_finite() && im_.is_finite(); }

ComplexBall ComplexBall::conj() const { return ComplexBall(re_, -im_); }

ComplexBall& ComplexBall::operator+=(const ComplexBall& other) {
  re_ += other.re_;
  im_ += other.im_;
  return *this;
}

ComplexBall& ComplexBall::operator-=(const ComplexBall& other) {
  re_ -= other.re_;
  im_ -= other.im_;
  return *this;
}

ComplexBall& ComplexBall::operator*=(const ComplexBall& other) { return *this = *this * other; }

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
  return ComplexBall(a.real() + b.real(), a.imag() + b.imag());
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
  return ComplexBall(a.real() - b.real(), a.imag() - b.imag());
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  return ComplexBall(a.real() * b.real() - a.imag() * b.imag(),
                     a.real() * b.imag() + a.imag() * b.real());
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
  const Ball den = sqr(b.real()) + sqr(b.imag());
  if (den.contains_zero()) throw IndeterminateError("complex division by a ball containing zero");
  return ComplexBall((a.real() * b.real() + a.imag() * b.imag()) / den,
                     (a.imag() * b.real() - a.real() * b.imag()) / den);
}

ComplexBall operator-(const ComplexBall& a) { return ComplexBall(-a.real(), -a.imag()); }

ComplexBall operator+(const ComplexBall& a, const Ball& b) { return ComplexBall(a.real() + b, a.imag()); }
ComplexBall operator-(const ComplexBall& a, const Ball& b) { return ComplexBall(a.real() - b, a.imag()); }
ComplexBall operator*(const ComplexBall& a, const Ball& b) {
  return ComplexBall(a.real() * b, a.imag() * b);
}
ComplexBall operator/(const ComplexBall& a, const Ball& b) {
  return ComplexBall(a.real() / b, a.imag() / b);
}
ComplexBall operator+(const ComplexBall& a, double b) { return ComplexBall(a.real() + b, a.imag()); }
ComplexBall operator-(const ComplexBall& a, double b) { return ComplexBall(a.real() - b, a.imag()); }
ComplexBall operator*(const ComplexBall& a, double b) {
  return ComplexBall(a.real() * b, a.imag() * b);
}

Ball abs(const ComplexBall& z) { return sqrt_nonneg(sqr(z.real()) + sqr(z.imag())); }

ComplexBall exp(const ComplexBall& z) {
  const Ball m = exp(z.real());
  return ComplexBall(m * cos(z.imag()), m * sin(z.imag()));
}

}  // namespace zetabounds
