#include "outpost/linalg.hpp"

#include <algorithm>

namespace outpost::linalg {

namespace {

// Sturm count: number of eigenvalues of T strictly below lambda.
// Uses the shifted LDL^T recurrence d_k = (a_k - lambda) - b_{k-1}^2 / d_{k-1}.
unsigned count_below(const std::vector<Real>& a, const std::vector<Real>& b2, const Real& lambda,
                     const Real& tiny) {
  unsigned count = 0;
  Real d(1L);
  for (size_t k = 0; k < a.size(); ++k) {
    Real q = a[k] - lambda;
    if (k > 0) q -= b2[k - 1] / d;
    if (q.is_zero()) q = -tiny;
    if (q.sign() < 0) ++count;
    d = q;
  }
  return count;
}

// Characteristic polynomial value and derivative via leading-minor
// recurrence, rescaled to dodge dynamic-range growth in long chains.
void charpoly(const std::vector<Real>& a, const std::vector<Real>& b2, const Real& lambda, Real& p,
              Real& dp) {
  Real pm1(1L), pm2(0L), dm1(0L), dm2(0L);
  for (size_t k = 0; k < a.size(); ++k) {
    Real pk = (a[k] - lambda) * pm1;
    Real dk = -pm1 + (a[k] - lambda) * dm1;
    if (k > 0) {
      pk -= b2[k - 1] * pm2;
      dk -= b2[k - 1] * dm2;
    }
    pm2 = pm1;
    pm1 = pk;
    dm2 = dm1;
    dm1 = dk;
  }
  p = pm1;
  dp = dm1;
}

}  // namespace

std::vector<Real> tridiag_eigs(const std::vector<Real>& diag, const std::vector<Real>& offdiag,
                               const PrecCtx& ctx) {
  if (offdiag.size() + 1 != diag.size() && !(diag.size() == 1 && offdiag.empty()))
    throw Error("tridiag_eigs: offdiag length must be diag length - 1");
  mp::PrecGuard guard(ctx);
  const size_t n = diag.size();
  std::vector<Real> a = diag, b2(offdiag.size());
  for (size_t k = 0; k < offdiag.size(); ++k) b2[k] = offdiag[k] * offdiag[k];

  // Gershgorin bounds
  Real lo = a[0], hi = a[0];
  for (size_t k = 0; k < n; ++k) {
    Real r(0L);
    if (k > 0) r += mp::abs(offdiag[k - 1]);
    if (k + 1 < n) r += mp::abs(offdiag[k]);
    lo = mp::min(lo, a[k] - r);
    hi = mp::max(hi, a[k] + r);
  }
  Real span = hi - lo;
  if (span.is_zero()) span = Real(1L);
  lo -= span * Real(1e-3);
  hi += span * Real(1e-3);

  const Real tiny = mp::pow10(-static_cast<long>(2 * ctx.target_digits)) * span;
  const Real tol = mp::pow10(-static_cast<long>(ctx.target_digits)) * mp::max(Real(1L), span);

  // Stage 1: bisect every eigenvalue bracket down to a Newton-safe width.
  struct Bracket {
    Real lo, hi;
    unsigned ilo, ihi;  // counts at ends
  };
  std::vector<Bracket> work{{lo, hi, count_below(a, b2, lo, tiny), count_below(a, b2, hi, tiny)}};
  std::vector<std::pair<Real, Real>> isolated;  // [lo, hi] containing exactly one
  Real coarse = span * Real(1e-12);
  while (!work.empty()) {
    Bracket br = work.back();
    work.pop_back();
    unsigned m = br.ihi - br.ilo;
    if (m == 0) continue;
    if (m == 1 && (br.hi - br.lo) <= coarse) {
      isolated.emplace_back(br.lo, br.hi);
      continue;
    }
    Real mid = mp::ldexp(br.lo + br.hi, -1);
    unsigned im = count_below(a, b2, mid, tiny);
    work.push_back({br.lo, mid, br.ilo, im});
    work.push_back({mid, br.hi, im, br.ihi});
  }

  // Stage 2: Newton with bisection fallback to full precision.
  std::vector<Real> eigs;
  eigs.reserve(n);
  for (auto& [blo, bhi] : isolated) {
    Real x = mp::ldexp(blo + bhi, -1);
    Real lo_k = blo, hi_k = bhi;
    for (int it = 0; it < 256; ++it) {
      Real p, dp;
      charpoly(a, b2, x, p, dp);
      Real step;
      bool ok = !dp.is_zero();
      if (ok) {
        step = p / dp;
        Real xn = x - step;
        if (xn <= lo_k || xn >= hi_k) ok = false;
        else {
          // maintain the bracket using the Sturm count
          unsigned c = count_below(a, b2, xn, tiny);
          unsigned clo = count_below(a, b2, lo_k, tiny);
          if (c == clo) lo_k = xn; else hi_k = xn;
          x = xn;
        }
      }
      if (!ok) {
        Real mid = mp::ldexp(lo_k + hi_k, -1);
        unsigned c = count_below(a, b2, mid, tiny);
        unsigned clo = count_below(a, b2, lo_k, tiny);
        if (c == clo) lo_k = mid; else hi_k = mid;
        x = mp::ldexp(lo_k + hi_k, -1);
      }
      if (hi_k - lo_k <= tol) break;
      if (ok) {
        Real p2, dp2;
        charpoly(a, b2, x, p2, dp2);
        if (!dp2.is_zero() && mp::abs(p2 / dp2) <= tol * Real(1e-2)) break;
      }
    }
    eigs.push_back(x);
  }
  std::sort(eigs.begin(), eigs.end());
  if (eigs.size() != n) throw NoConvergence("tridiag eigenvalue isolation lost a root");
  return eigs;
}

std::vector<Complex> solve_linear(std::vector<Complex> A, std::vector<Complex> b,
                                  const PrecCtx& ctx, unsigned max_dim) {
  const size_t n = b.size();
  if (A.size() != n * n) throw Error("solve_linear: A must be n*n");
  if (n > max_dim) throw Error("solve_linear: dimension above configured maximum");
  mp::PrecGuard guard(ctx);

  Real scale(0L);
  for (const auto& e : A) scale = mp::max(scale, mp::abs(e));
  if (scale.is_zero()) throw SingularSystem("zero matrix");
  Real floor_piv = mp::pow10(-static_cast<long>(ctx.target_digits)) * scale;

  std::vector<size_t> piv(n);
  for (size_t k = 0; k < n; ++k) piv[k] = k;
  auto at = [&](size_t r, size_t c) -> Complex& { return A[piv[r] * n + c]; };

  for (size_t k = 0; k < n; ++k) {
    size_t best = k;
    Real bestval = mp::abs(at(k, k));
    for (size_t r = k + 1; r < n; ++r) {
      Real v = mp::abs(at(r, k));
      if (v > bestval) { bestval = v; best = r; }
    }
    if (bestval < floor_piv) throw SingularSystem("pivot below tolerance");
    std::swap(piv[k], piv[best]);
    for (size_t r = k + 1; r < n; ++r) {
      Complex f = at(r, k) / at(k, k);
      at(r, k) = Complex(0L);
      for (size_t c = k + 1; c < n; ++c) at(r, c) -= f * at(k, c);
      b[piv[r]] -= f * b[piv[k]];
    }
  }
  std::vector<Complex> x(n, Complex(0L));
  for (size_t k = n; k-- > 0;) {
    Complex s = b[piv[k]];
    for (size_t c = k + 1; c < n; ++c) s -= at(k, c) * x[c];
    x[k] = s / at(k, k);
  }
  return x;
}

}  // namespace outpost::linalg
