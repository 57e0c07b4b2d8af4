// Monic orthogonal-polynomial systems: recurrence coefficients, norms and
// zeros, built from moments (Hankel/Cholesky) or from a discretized measure
// (Stieltjes).  Shared primitive for the Freud and finite-N layers.

#pragma once

#include <string>
#include <vector>

#include "outpost/complex.hpp"
#include "outpost/errors.hpp"
#include "outpost/real.hpp"

namespace outpost::osys {

using mp::Complex;
using mp::PrecCtx;
using mp::Real;

// p_0 = 1, p_{k+1}(x) = (x - a_k) p_k(x) - b_k p_{k-1}(x), b_k = h_k/h_{k-1}.
struct OrthoSystem {
  std::string weight_id;
  unsigned max_degree = 0;          // highest degree with a computable zero set
  std::vector<Real> recur_a;        // a_0 .. a_{max_degree-1}
  std::vector<Real> recur_b;        // b_1 .. index k stored at [k], [0] = 0
  std::vector<Real> norms;          // h_0 .. h_{max_degree}
  PrecCtx ctx;

  const Real& h(unsigned k) const { return norms.at(k); }
  const Real& beta(unsigned k) const { return recur_b.at(k); }
  const Real& a(unsigned k) const { return recur_a.at(k); }

  // Hankel determinant Delta_n = prod_{k<n} h_k (Delta_0 = 1).
  Real hankel_det(unsigned n) const;

  template <typename T>
  T eval(unsigned k, const T& x) const {
    T pm1(0L), p(1L);
    for (unsigned j = 0; j < k; ++j) {
      T pn = (x - T(recur_a[j])) * p;
      if (j > 0) pn -= T(recur_b[j]) * pm1;
      pm1 = p;
      p = pn;
    }
    return p;
  }

  // value and derivative of p_k
  template <typename T>
  void eval_pair(unsigned k, const T& x, T& p, T& dp) const {
    T pm1(0L), pc(1L), dm1(0L), dc(0L);
    for (unsigned j = 0; j < k; ++j) {
      T pn = (x - T(recur_a[j])) * pc;
      T dn = pc + (x - T(recur_a[j])) * dc;
      if (j > 0) {
        pn -= T(recur_b[j]) * pm1;
        dn -= T(recur_b[j]) * dm1;
      }
      pm1 = pc;
      pc = pn;
      dm1 = dc;
      dc = dn;
    }
    p = pc;
    dp = dc;
  }
};

// Hankel/Cholesky route.  moments[j] = integral of x^j; enough moments must
// be supplied for the requested degree (2*max_degree + 1 of them).  Throws
// PrecisionExhausted (carrying the degree reached) when the Cholesky pivots
// lose all significant digits.
OrthoSystem from_moments(const std::string& weight_id, const std::vector<Real>& moments,
                         unsigned max_degree, const PrecCtx& ctx, unsigned min_digits_left = 10);

// Stieltjes procedure on a discrete measure sum_i w_i delta_{x_i}.
OrthoSystem from_discrete_measure(const std::string& weight_id, const std::vector<Real>& x,
                                  const std::vector<Real>& w, unsigned max_degree,
                                  const PrecCtx& ctx);

// Zeros of p_k as Jacobi-matrix eigenvalues, ascending.
std::vector<Real> zeros(const OrthoSystem& sys, unsigned k);

}  // namespace outpost::osys
