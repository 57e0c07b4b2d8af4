// Arbitrary-precision real scalar on top of MPFR.
//
// Every Real carries its own precision (in bits).  Binary operations round
// to the larger of the two operand precisions; values created from plain
// integers/doubles pick up the calling thread's working precision, which is
// installed with a PrecGuard at every library entry point.  All rounding is
// to nearest, so results are bit-identical for identical inputs and
// precision, regardless of threading.

#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

namespace outpost::mp {

// Precision context: requested decimal accuracy plus the binary working
// precision used to reach it.
struct PrecCtx {
  unsigned bits = 256;
  unsigned target_digits = 50;

  static PrecCtx from_digits(unsigned digits) {
    PrecCtx c;
    c.target_digits = digits ? digits : 1;
    unsigned long b = (7UL * c.target_digits + 1) / 2;  // ceil(3.5 d)
    c.bits = static_cast<unsigned>(b < 64 ? 64 : b);
    return c;
  }
  PrecCtx wider(unsigned extra_digits) const {
    return from_digits(target_digits + extra_digits);
  }
  PrecCtx doubled() const { return from_digits(2 * target_digits); }
};

namespace detail {
unsigned& thread_prec();  // working precision (bits) of this thread
}

// RAII working-precision switch.
struct PrecGuard {
  unsigned saved;
  explicit PrecGuard(unsigned bits) : saved(detail::thread_prec()) {
    detail::thread_prec() = bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits;
  }
  explicit PrecGuard(const PrecCtx& c) : PrecGuard(c.bits) {}
  ~PrecGuard() { detail::thread_prec() = saved; }
  PrecGuard(const PrecGuard&) = delete;
  PrecGuard& operator=(const PrecGuard&) = delete;
};

class Real {
 public:
  mpfr_t v;

  Real() { mpfr_init2(v, detail::thread_prec()); mpfr_set_zero(v, 1); }
  explicit Real(unsigned prec_bits, int /*tag*/) { mpfr_init2(v, prec_bits); mpfr_set_zero(v, 1); }
  Real(long x) { mpfr_init2(v, detail::thread_prec()); mpfr_set_si(v, x, MPFR_RNDN); }
  Real(int x) : Real(static_cast<long>(x)) {}
  Real(unsigned long x) { mpfr_init2(v, detail::thread_prec()); mpfr_set_ui(v, x, MPFR_RNDN); }
  Real(double x) { mpfr_init2(v, detail::thread_prec()); mpfr_set_d(v, x, MPFR_RNDN); }
  explicit Real(const char* s) { mpfr_init2(v, detail::thread_prec()); mpfr_set_str(v, s, 10, MPFR_RNDN); }
  explicit Real(const std::string& s) : Real(s.c_str()) {}

  Real(const Real& o) { mpfr_init2(v, mpfr_get_prec(o.v)); mpfr_set(v, o.v, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v, MPFR_PREC_MIN); mpfr_swap(v, o.v); }
  Real& operator=(const Real& o) {
    if (this != &o) { mpfr_set_prec(v, mpfr_get_prec(o.v)); mpfr_set(v, o.v, MPFR_RNDN); }
    return *this;
  }
  Real& operator=(Real&& o) noexcept { mpfr_swap(v, o.v); return *this; }
  ~Real() { mpfr_clear(v); }

  unsigned prec() const { return static_cast<unsigned>(mpfr_get_prec(v)); }
  double to_double() const { return mpfr_get_d(v, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v, MPFR_RNDN); }
  bool is_nan() const { return mpfr_nan_p(v) != 0; }
  bool is_zero() const { return mpfr_zero_p(v) != 0; }
  int sign() const { return mpfr_sgn(v); }

  // Decimal string with the given number of significant digits.
  std::string str(unsigned digits) const;

  Real& operator+=(const Real& o) { return binop(o, mpfr_add); }
  Real& operator-=(const Real& o) { return binop(o, mpfr_sub); }
  Real& operator*=(const Real& o) { return binop(o, mpfr_mul); }
  Real& operator/=(const Real& o) { return binop(o, mpfr_div); }
  Real operator-() const { Real r(prec(), 0); mpfr_neg(r.v, v, MPFR_RNDN); return r; }

  friend Real operator+(Real a, const Real& b) { a += b; return a; }
  friend Real operator-(Real a, const Real& b) { a -= b; return a; }
  friend Real operator*(Real a, const Real& b) { a *= b; return a; }
  friend Real operator/(Real a, const Real& b) { a /= b; return a; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v, b.v) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v, b.v) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v, b.v) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v, b.v) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v, b.v) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

 private:
  template <typename F>
  Real& binop(const Real& o, F f) {
    mpfr_prec_t p = mpfr_get_prec(v), q = mpfr_get_prec(o.v);
    if (q > p) {
      Real tmp(static_cast<unsigned>(q), 0);
      f(tmp.v, v, o.v, MPFR_RNDN);
      mpfr_swap(v, tmp.v);
    } else {
      f(v, v, o.v, MPFR_RNDN);
    }
    return *this;
  }
};

// --- elementary functions (result at the argument's precision) ---

#define OUTPOST_MP_UNARY(name, fn)                       \
  inline Real name(const Real& x) {                      \
    Real r(x.prec(), 0);                                 \
    fn(r.v, x.v, MPFR_RNDN);                             \
    return r;                                            \
  }

OUTPOST_MP_UNARY(sqrt, mpfr_sqrt)
OUTPOST_MP_UNARY(exp, mpfr_exp)
OUTPOST_MP_UNARY(log, mpfr_log)
OUTPOST_MP_UNARY(sin, mpfr_sin)
OUTPOST_MP_UNARY(cos, mpfr_cos)
OUTPOST_MP_UNARY(tan, mpfr_tan)
OUTPOST_MP_UNARY(sinh, mpfr_sinh)
OUTPOST_MP_UNARY(cosh, mpfr_cosh)
OUTPOST_MP_UNARY(tanh, mpfr_tanh)
OUTPOST_MP_UNARY(atan, mpfr_atan)
OUTPOST_MP_UNARY(abs, mpfr_abs)
OUTPOST_MP_UNARY(gamma, mpfr_gamma)
OUTPOST_MP_UNARY(airy_ai, mpfr_ai)
#undef OUTPOST_MP_UNARY

inline Real floor(const Real& x) {
  Real r(x.prec(), 0);
  mpfr_rint(r.v, x.v, MPFR_RNDD);
  return r;
}
inline Real ceil(const Real& x) {
  Real r(x.prec(), 0);
  mpfr_rint(r.v, x.v, MPFR_RNDU);
  return r;
}
inline Real atan2(const Real& y, const Real& x) {
  Real r(y.prec() > x.prec() ? y.prec() : x.prec(), 0);
  mpfr_atan2(r.v, y.v, x.v, MPFR_RNDN);
  return r;
}
inline Real hypot(const Real& x, const Real& y) {
  Real r(y.prec() > x.prec() ? y.prec() : x.prec(), 0);
  mpfr_hypot(r.v, x.v, y.v, MPFR_RNDN);
  return r;
}
inline Real pow(const Real& x, const Real& e) {
  Real r(x.prec() > e.prec() ? x.prec() : e.prec(), 0);
  mpfr_pow(r.v, x.v, e.v, MPFR_RNDN);
  return r;
}
inline Real pow_si(const Real& x, long n) {
  Real r(x.prec(), 0);
  mpfr_pow_si(r.v, x.v, n, MPFR_RNDN);
  return r;
}
inline Real rootn(const Real& x, unsigned long n) {
  Real r(x.prec(), 0);
  mpfr_rootn_ui(r.v, x.v, n, MPFR_RNDN);
  return r;
}
inline Real const_pi() {
  Real r;
  mpfr_const_pi(r.v, MPFR_RNDN);
  return r;
}
inline Real ldexp(const Real& x, long e) {
  Real r(x.prec(), 0);
  mpfr_mul_2si(r.v, x.v, e, MPFR_RNDN);
  return r;
}
inline Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
inline Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

// 10^-d at the current thread precision.
inline Real pow10(long d) {
  Real r;
  mpfr_ui_pow_ui(r.v, 10, static_cast<unsigned long>(d >= 0 ? d : -d), MPFR_RNDN);
  if (d < 0) mpfr_ui_div(r.v, 1, r.v, MPFR_RNDN);
  return r;
}

}  // namespace outpost::mp
