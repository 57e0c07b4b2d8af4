// Dense real polynomials (ascending coefficients) and Laurent-style series
// helpers used by the equilibrium solver.

#pragma once

#include <vector>

#include "outpost/complex.hpp"
#include "outpost/real.hpp"

namespace outpost {

class RealPoly {
 public:
  std::vector<mp::Real> c;  // c[k] multiplies x^k

  RealPoly() = default;
  explicit RealPoly(std::vector<mp::Real> coeffs) : c(std::move(coeffs)) { trim(); }
  static RealPoly constant(mp::Real a) { return RealPoly({std::move(a)}); }
  static RealPoly monomial(unsigned k, mp::Real a) {
    std::vector<mp::Real> v(k + 1, mp::Real(0L));
    v[k] = std::move(a);
    return RealPoly(std::move(v));
  }
  static RealPoly from_roots(const std::vector<mp::Real>& roots, const mp::Real& lead) {
    RealPoly p = constant(lead);
    for (const auto& r : roots) p = p * RealPoly({-r, mp::Real(1L)});
    return p;
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const mp::Real& lead() const { return c.back(); }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }

  template <typename T>
  T eval(const T& x) const {
    if (c.empty()) return T(0L);
    T r(c.back());
    for (size_t k = c.size(); k-- > 1;) r = r * x + T(c[k - 1]);
    return r;
  }

  RealPoly derivative() const {
    if (c.size() <= 1) return RealPoly();
    std::vector<mp::Real> d(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * mp::Real(static_cast<long>(k));
    return RealPoly(std::move(d));
  }

  RealPoly antiderivative() const {
    std::vector<mp::Real> d(c.size() + 1, mp::Real(0L));
    for (size_t k = 0; k < c.size(); ++k) d[k + 1] = c[k] / mp::Real(static_cast<long>(k + 1));
    return RealPoly(std::move(d));
  }

  // Exact division by (x - r); remainder discarded (caller checks).
  RealPoly deflate(const mp::Real& r) const {
    if (c.empty()) return RealPoly();
    std::vector<mp::Real> q(c.size() - 1, mp::Real(0L));
    mp::Real carry = c.back();
    for (size_t k = c.size() - 1; k-- > 0;) {
      q[k] = carry;
      carry = c[k] + carry * r;
    }
    return RealPoly(std::move(q));
  }

  friend RealPoly operator+(const RealPoly& a, const RealPoly& b) {
    std::vector<mp::Real> r(std::max(a.c.size(), b.c.size()), mp::Real(0L));
    for (size_t k = 0; k < a.c.size(); ++k) r[k] += a.c[k];
    for (size_t k = 0; k < b.c.size(); ++k) r[k] += b.c[k];
    return RealPoly(std::move(r));
  }
  friend RealPoly operator-(const RealPoly& a, const RealPoly& b) {
    std::vector<mp::Real> r(std::max(a.c.size(), b.c.size()), mp::Real(0L));
    for (size_t k = 0; k < a.c.size(); ++k) r[k] += a.c[k];
    for (size_t k = 0; k < b.c.size(); ++k) r[k] -= b.c[k];
    return RealPoly(std::move(r));
  }
  friend RealPoly operator*(const RealPoly& a, const RealPoly& b) {
    if (a.c.empty() || b.c.empty()) return RealPoly();
    std::vector<mp::Real> r(a.c.size() + b.c.size() - 1, mp::Real(0L));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return RealPoly(std::move(r));
  }
  friend RealPoly operator*(const RealPoly& a, const mp::Real& s) {
    std::vector<mp::Real> r = a.c;
    for (auto& x : r) x *= s;
    return RealPoly(std::move(r));
  }

  // Shift x -> x + h.
  RealPoly shifted(const mp::Real& h) const {
    RealPoly r, basis = constant(mp::Real(1L));
    for (size_t k = 0; k < c.size(); ++k) {
      r = r + basis * c[k];
      basis = basis * RealPoly({h, mp::Real(1L)});
    }
    return r;
  }
};

}  // namespace outpost
