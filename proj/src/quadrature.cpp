#include "outpost/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace outpost::quad {

namespace detail {
unsigned default_rule_order(const PrecCtx& ctx) {
  // enough polynomial exactness to chase the precision target
  double n = 0.62 * ctx.target_digits + 24.0;
  if (n > 1400) n = 1400;
  return static_cast<unsigned>(n);
}
}  // namespace detail

namespace {

Rule build_legendre(unsigned n, unsigned bits) {
  mp::PrecGuard guard(bits + 32);
  Rule rule;
  rule.x.resize(n);
  rule.w.resize(n);

  // P_n and P_n' by recurrence
  auto eval_pn = [&](const Real& x, Real& p, Real& dp) {
    Real p0(1L), p1 = x;
    if (n == 0) { p = p0; dp = Real(0L); return; }
    for (unsigned k = 2; k <= n; ++k) {
      Real xk = x * p1;
      Real pk = ((Real(static_cast<long>(2 * k - 1)) * xk) -
                 Real(static_cast<long>(k - 1)) * p0) /
                Real(static_cast<long>(k));
      p0 = p1;
      p1 = pk;
    }
    p = p1;
    // (1-x^2) P_n' = n (P_{n-1} - x P_n)
    dp = Real(static_cast<long>(n)) * (p0 - x * p1) / (Real(1L) - x * x);
  };

  const Real pi = mp::const_pi();
  unsigned iters = 0;
  {
    double b = static_cast<double>(bits) + 32.0;
    iters = static_cast<unsigned>(std::ceil(std::log2(b / 40.0))) + 4;
  }
  for (unsigned k = 0; k < (n + 1) / 2; ++k) {
    // Chebyshev-style initial guess, then Newton
    Real theta = pi * (Real(static_cast<long>(k)) + Real(0.75)) /
                 (Real(static_cast<long>(n)) + Real(0.5));
    Real x = -mp::cos(theta);  // ascending from -1 side
    Real p, dp;
    for (unsigned it = 0; it < iters; ++it) {
      eval_pn(x, p, dp);
      Real step = p / dp;
      x -= step;
    }
    eval_pn(x, p, dp);
    Real w = Real(2L) / ((Real(1L) - x * x) * dp * dp);
    rule.x[k] = x;
    rule.w[k] = w;
    rule.x[n - 1 - k] = -x;
    rule.w[n - 1 - k] = w;
  }
  if (n % 2 == 1) {
    Real x(0L), p, dp;
    eval_pn(x, p, dp);
    rule.x[n / 2] = Real(0L);
    rule.w[n / 2] = Real(2L) / (dp * dp);
  }
  // round storage down to the working precision the caller asked for
  for (auto& v : rule.x) mpfr_prec_round(v.v, bits, MPFR_RNDN);
  for (auto& v : rule.w) mpfr_prec_round(v.v, bits, MPFR_RNDN);
  return rule;
}

std::mutex g_rule_mutex;
std::map<std::pair<unsigned, unsigned>, Rule> g_rules;

}  // namespace

const Rule& legendre_rule(unsigned n, unsigned bits) {
  if (n < 1) throw Error("legendre rule needs n >= 1");
  std::lock_guard<std::mutex> lock(g_rule_mutex);
  auto key = std::make_pair(n, bits);
  auto it = g_rules.find(key);
  if (it != g_rules.end()) return it->second;
  Rule r = build_legendre(n, bits);
  return g_rules.emplace(key, std::move(r)).first->second;
}

std::pair<std::vector<Real>, std::vector<Real>> gauss_legendre(unsigned n, const PrecCtx& ctx) {
  mp::PrecGuard g(ctx);
  const Rule& r = legendre_rule(n, ctx.bits);
  return {r.x, r.w};
}

Real tail_cutoff(const DecayBound& d, const PrecCtx& ctx) {
  mp::PrecGuard g(ctx);
  Real need = mp::log(Real(10L)) * Real(static_cast<long>(ctx.target_digits + 10));
  if (d.scale > Real(0L)) need += mp::max(Real(0L), mp::log(d.scale));
  Real X = mp::rootn(need / d.c, 2 * d.m);
  return X + Real(1L);  // margin past the asymptotic regime
}

}  // namespace outpost::quad
