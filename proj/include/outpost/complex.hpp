// Complex scalar over outpost::mp::Real with principal-branch elementary
// functions.  Branch choices: sqrt/log/pow cut along the negative real axis,
// arg in (-pi, pi].

#pragma once

#include "outpost/real.hpp"

namespace outpost::mp {

struct Complex {
  Real re, im;

  Complex() = default;
  Complex(Real r) : re(std::move(r)), im(0L) { im = Real(0L); }
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(long r) : re(r), im(0L) {}
  Complex(int r) : re(r), im(0L) {}
  Complex(double r) : re(r), im(0L) {}

  static Complex i_times(const Real& x) { return Complex(Real(0L), x); }

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    Real i = re * o.im + im * o.re;
    re = std::move(r); im = std::move(i);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    Real d = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / d;
    Real i = (im * o.re - re * o.im) / d;
    re = std::move(r); im = std::move(i);
    return *this;
  }
  Complex operator-() const { return Complex(-re, -im); }

  friend Complex operator+(Complex a, const Complex& b) { a += b; return a; }
  friend Complex operator-(Complex a, const Complex& b) { a -= b; return a; }
  friend Complex operator*(Complex a, const Complex& b) { a *= b; return a; }
  friend Complex operator/(Complex a, const Complex& b) { a /= b; return a; }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

  bool is_real() const { return im.is_zero(); }
};

inline Complex conj(const Complex& z) { return Complex(z.re, -z.im); }
inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Real norm2(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }

inline Complex sqrt(const Complex& z) {
  if (z.im.is_zero()) {
    if (z.re.sign() >= 0) return Complex(sqrt(z.re), Real(0L));
    return Complex(Real(0L), sqrt(-z.re));
  }
  Real m = abs(z);
  Real t = sqrt(ldexp(m + abs(z.re), -1));
  if (z.re.sign() >= 0) return Complex(t, z.im / ldexp(t, 1));
  Real u = abs(z.im) / ldexp(t, 1);
  return z.im.sign() >= 0 ? Complex(u, t) : Complex(u, -t);
}

inline Complex log(const Complex& z) {
  return Complex(ldexp(log(norm2(z)), -1), atan2(z.im, z.re));
}

inline Complex exp(const Complex& z) {
  Real m = exp(z.re);
  return Complex(m * cos(z.im), m * sin(z.im));
}

inline Complex pow(const Complex& z, const Real& e) {
  if (z.re.is_zero() && z.im.is_zero()) return Complex(Real(0L), Real(0L));
  return exp(Complex(e * ldexp(log(norm2(z)), -1), e * atan2(z.im, z.re)));
}

inline Complex pow_int(Complex z, long n) {
  bool inv = n < 0;
  unsigned long k = static_cast<unsigned long>(inv ? -n : n);
  Complex r(Real(1L), Real(0L));
  while (k) {
    if (k & 1) r *= z;
    z *= z;
    k >>= 1;
  }
  if (inv) r = Complex(Real(1L), Real(0L)) / r;
  return r;
}

}  // namespace outpost::mp
