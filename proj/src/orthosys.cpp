#include "outpost/orthosys.hpp"

#include "outpost/linalg.hpp"

namespace outpost::osys {

Real OrthoSystem::hankel_det(unsigned n) const {
  Real d(1L);
  for (unsigned k = 0; k < n; ++k) d *= norms.at(k);
  return d;
}

OrthoSystem from_moments(const std::string& weight_id, const std::vector<Real>& moments,
                         unsigned max_degree, const PrecCtx& ctx, unsigned min_digits_left) {
  mp::PrecGuard guard(ctx);
  const unsigned n = max_degree;  // Cholesky of (n+1)x(n+1) Hankel matrix
  if (moments.size() < 2 * n + 1)
    throw Error("from_moments: need " + std::to_string(2 * n + 1) + " moments");
  if (moments[0] <= Real(0L)) throw Error("from_moments: total mass must be positive");

  // L lower-triangular, row-major packed
  std::vector<std::vector<Real>> L(n + 1);
  for (unsigned r = 0; r <= n; ++r) L[r].assign(r + 1, Real(0L));

  const long work_digits = static_cast<long>(ctx.bits * 0.30103);
  for (unsigned r = 0; r <= n; ++r) {
    for (unsigned c = 0; c <= r; ++c) {
      Real s = moments[r + c];
      Real mag = mp::abs(s);
      for (unsigned k = 0; k < c; ++k) {
        Real t = L[r][k] * L[c][k];
        mag = mp::max(mag, mp::abs(t));
        s -= t;
      }
      if (c == r) {
        // digit-loss check on the pivot
        if (s <= Real(0L))
          throw PrecisionExhausted("Hankel pivot lost positivity at degree " + std::to_string(r),
                                   0);
        long lost = 0;
        if (!mag.is_zero() && !s.is_zero())
          lost = static_cast<long>((mpfr_get_exp(mag.v) - mpfr_get_exp(s.v)) * 0.30103);
        if (work_digits - lost < static_cast<long>(min_digits_left))
          throw PrecisionExhausted(
              "Hankel factorization out of digits at degree " + std::to_string(r),
              static_cast<unsigned>(work_digits - lost > 0 ? work_digits - lost : 0));
        L[r][c] = mp::sqrt(s);
      } else {
        L[r][c] = s / L[c][c];
      }
    }
  }

  OrthoSystem sys;
  sys.weight_id = weight_id;
  sys.max_degree = n;
  sys.ctx = ctx;
  sys.norms.resize(n + 1);
  for (unsigned k = 0; k <= n; ++k) sys.norms[k] = L[k][k] * L[k][k];
  // subleading coefficient of monic p_k: sigma_k = -L[k][k-1]/L[k-1][k-1]
  std::vector<Real> sigma(n + 1, Real(0L));
  for (unsigned k = 1; k <= n; ++k) sigma[k] = -(L[k][k - 1] / L[k - 1][k - 1]);
  sys.recur_a.resize(n);
  for (unsigned k = 0; k < n; ++k) sys.recur_a[k] = sigma[k] - sigma[k + 1];
  sys.recur_b.assign(n + 1, Real(0L));
  for (unsigned k = 1; k <= n; ++k) sys.recur_b[k] = sys.norms[k] / sys.norms[k - 1];
  sys.recur_b.resize(n);  // b_1 .. b_{n-1} are what zero-finding needs
  return sys;
}

OrthoSystem from_discrete_measure(const std::string& weight_id, const std::vector<Real>& x,
                                  const std::vector<Real>& w, unsigned max_degree,
                                  const PrecCtx& ctx) {
  mp::PrecGuard guard(ctx);
  const size_t m = x.size();
  if (w.size() != m) throw Error("from_discrete_measure: node/weight length mismatch");
  const unsigned n = max_degree;

  OrthoSystem sys;
  sys.weight_id = weight_id;
  sys.max_degree = n;
  sys.ctx = ctx;
  sys.recur_a.assign(n, Real(0L));
  sys.recur_b.assign(n, Real(0L));
  sys.norms.assign(n + 1, Real(0L));

  std::vector<Real> pm1(m, Real(0L)), p(m, Real(1L));
  Real h0(0L), xh0(0L);
  for (size_t i = 0; i < m; ++i) {
    h0 += w[i];
    xh0 += w[i] * x[i];
  }
  sys.norms[0] = h0;
  Real a_prev = xh0 / h0;
  Real h_prev = h0;
  for (unsigned k = 0; k < n; ++k) {
    sys.recur_a[k] = a_prev;
    // p_{k+1} = (x - a_k) p_k - b_k p_{k-1}
    std::vector<Real> pn(m);
    for (size_t i = 0; i < m; ++i) {
      Real t = (x[i] - a_prev) * p[i];
      if (k > 0) t -= sys.recur_b[k] * pm1[i];
      pn[i] = t;
    }
    Real h(0L), xh(0L);
    for (size_t i = 0; i < m; ++i) {
      Real q = w[i] * pn[i];
      h += q * pn[i];
      xh += q * x[i] * pn[i];
    }
    if (h <= Real(0L))
      throw PrecisionExhausted("discrete Stieltjes lost positivity at degree " +
                               std::to_string(k + 1));
    sys.norms[k + 1] = h;
    if (k + 1 < n) sys.recur_b[k + 1] = h / h_prev;
    a_prev = xh / h;
    h_prev = h;
    pm1 = std::move(p);
    p = std::move(pn);
  }
  // recompute b-array to full length convention (b_k defined for 1..n-1)
  for (unsigned k = 1; k < n; ++k) sys.recur_b[k] = sys.norms[k] / sys.norms[k - 1];
  return sys;
}

std::vector<Real> zeros(const OrthoSystem& sys, unsigned k) {
  if (k == 0) return {};
  if (k > sys.max_degree) throw Error("zeros: degree above system max_degree");
  mp::PrecGuard guard(sys.ctx);
  std::vector<Real> diag(sys.recur_a.begin(), sys.recur_a.begin() + k);
  std::vector<Real> off;
  off.reserve(k - 1);
  for (unsigned j = 1; j < k; ++j) off.push_back(mp::sqrt(sys.recur_b[j]));
  return linalg::tridiag_eigs(diag, off, sys.ctx);
}

}  // namespace outpost::osys
