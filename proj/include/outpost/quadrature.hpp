// Quadrature kernel: Gauss-Legendre rules at arbitrary precision, adaptive
// panel integration for analytic integrands, tanh-sinh for integrable
// endpoint singularities, and tail-truncated integration over unbounded
// intervals with a certified decay bound.

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "outpost/complex.hpp"
#include "outpost/errors.hpp"
#include "outpost/real.hpp"

namespace outpost::quad {

using mp::Complex;
using mp::PrecCtx;
using mp::Real;

struct Rule {
  std::vector<Real> x, w;  // nodes/weights on [-1, 1]
};

// Cached Gauss-Legendre rule (nodes ascending).  Thread-safe.
const Rule& legendre_rule(unsigned n, unsigned bits);

// Spec-facing variant returning fresh vectors at ctx precision.
std::pair<std::vector<Real>, std::vector<Real>> gauss_legendre(unsigned n, const PrecCtx& ctx);

namespace detail {
inline Real value_norm(const Real& v) { return mp::abs(v); }
inline Real value_norm(const Complex& v) { return mp::abs(v); }
inline void value_zero(Real& v) { v = Real(0L); }
inline void value_zero(Complex& v) { v = Complex(0L); }

// Default rule order for a precision target.
unsigned default_rule_order(const PrecCtx& ctx);
}  // namespace detail

// Adaptive panel integration of an analytic integrand over [a, b].
// Panels are accepted when two rule orders agree to the panel's share of
// tol; recursion depth is bounded and exhaustion raises PrecisionExhausted.
template <typename T, typename F>
T integrate_panels(F&& f, const Real& a, const Real& b, const PrecCtx& ctx, const Real& tol,
                   unsigned rule_n = 0) {
  if (rule_n == 0) rule_n = detail::default_rule_order(ctx);
  const Rule& coarse = legendre_rule(rule_n, ctx.bits);
  const Rule& fine = legendre_rule(rule_n + rule_n / 3 + 4, ctx.bits);

  struct Panel {
    Real a, b;
    unsigned depth;
  };
  auto eval = [&](const Rule& r, const Real& lo, const Real& hi) {
    Real mid = mp::ldexp(lo + hi, -1), half = mp::ldexp(hi - lo, -1);
    T s;
    detail::value_zero(s);
    for (size_t k = 0; k < r.x.size(); ++k) s += T(r.w[k] * half) * f(mid + half * r.x[k]);
    return s;
  };

  std::vector<Panel> stack{{a, b, 0}};
  T total;
  detail::value_zero(total);
  const Real width = b - a;
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    T c = eval(coarse, p.a, p.b);
    T fv = eval(fine, p.a, p.b);
    Real err = detail::value_norm(fv - c);
    Real share = tol * ((p.b - p.a) / width);
    if (err <= share || p.depth >= 48) {
      if (p.depth >= 48 && err > tol)
        throw PrecisionExhausted("panel integration did not converge", ctx.target_digits);
      total += fv;
    } else {
      Real mid = mp::ldexp(p.a + p.b, -1);
      stack.push_back({p.a, mid, p.depth + 1});
      stack.push_back({mid, p.b, p.depth + 1});
    }
  }
  return total;
}

// tanh-sinh quadrature on (a, b); tolerates integrable endpoint
// singularities (log, inverse square root).
template <typename T, typename F>
T tanh_sinh(F&& f, const Real& a, const Real& b, const PrecCtx& ctx, const Real& tol) {
  mp::PrecGuard g(ctx.bits + 16);
  const Real half = mp::ldexp(Real(1L), -1);
  const Real center = (a + b) * half, halfw = (b - a) * half;
  const Real piover2 = mp::ldexp(mp::const_pi(), -1);

  // t-cutoff: node distance to endpoint ~ exp(-(pi/2) e^{tmax});
  // keep it below 10^{-(digits+10)} so singular endpoints are resolved.
  double dmax = ctx.target_digits + 12.0;
  double tmax = std::log(dmax * 2.302585 / 1.5707963) + 0.7;

  T best;
  detail::value_zero(best);
  Real prev_norm(0L);
  bool have_prev = false;
  double h = 1.0;
  for (int level = 0; level < 14; ++level, h *= 0.5) {
    long kmax = static_cast<long>(tmax / h) + 1;
    T sum;
    detail::value_zero(sum);
    for (long k = -kmax; k <= kmax; ++k) {
      Real t = Real(static_cast<double>(h)) * Real(k);
      Real sh = mp::sinh(t), ch = mp::cosh(t);
      Real u = piover2 * sh;
      Real sech = Real(1L) / mp::cosh(u);
      Real xi = mp::tanh(u);                       // in (-1, 1)
      Real wgt = piover2 * ch * sech * sech;       // dxi/dt
      Real xnode = center + halfw * xi;
      if (xnode <= a || xnode >= b) continue;      // guard against rounding at endpoints
      sum += T(wgt) * f(xnode);
    }
    T est = T(Real(static_cast<double>(h)) * halfw) * sum;
    if (have_prev) {
      Real diff = detail::value_norm(est - best);
      if (diff <= tol) return est;
    }
    best = est;
    prev_norm = detail::value_norm(best);
    have_prev = true;
  }
  throw PrecisionExhausted("tanh-sinh did not converge", ctx.target_digits);
}

// Certified decay of an integrand at infinity: |f(x)| <= scale*e^{-c|x|^{2m}}
// for |x| beyond every finite feature.
struct DecayBound {
  Real c;
  unsigned m = 1;
  Real scale = Real(1L);
};

// Cutoff X with c X^{2m} >= ln(10) (target_digits + 10) + ln(scale).
Real tail_cutoff(const DecayBound& d, const PrecCtx& ctx);

struct Interval {
  std::optional<Real> lo, hi;  // nullopt = infinite end
};

// Integral of f over a union of intervals; unbounded ends truncated via the
// decay bound.  Absolute error target 10^{-target_digits}.
template <typename T, typename F>
T integrate_weighted(F&& f, const std::vector<Interval>& domain,
                     const std::optional<DecayBound>& decay, const PrecCtx& ctx) {
  mp::PrecGuard g(ctx);
  Real tol = mp::pow10(-static_cast<long>(ctx.target_digits));
  T total;
  detail::value_zero(total);
  for (const auto& iv : domain) {
    Real lo, hi;
    if (!iv.lo || !iv.hi) {
      if (!decay) throw Error("unbounded interval requires a decay bound");
      Real X = tail_cutoff(*decay, ctx);
      lo = iv.lo ? *iv.lo : -X;
      hi = iv.hi ? *iv.hi : X;
      if (hi <= lo) continue;
    } else {
      lo = *iv.lo;
      hi = *iv.hi;
    }
    total += integrate_panels<T>(f, lo, hi, ctx, tol);
  }
  return total;
}

}  // namespace outpost::quad
