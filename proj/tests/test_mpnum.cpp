// Numeric kernel tests: quadrature, tridiagonal eigenvalues, small solves.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "outpost/linalg.hpp"
#include "outpost/quadrature.hpp"
#include "test_util.hpp"

using namespace outpost;
using mp::Complex;
using mp::PrecCtx;
using mp::Real;

TEST_CASE("gauss-legendre low orders match closed forms") {
  PrecCtx ctx = PrecCtx::from_digits(50);
  mp::PrecGuard g(ctx);

  auto [x1, w1] = quad::gauss_legendre(1, ctx);
  CHECK(x1.size() == 1);
  CHECK(mp::abs(x1[0]) < testutil::tol10(-48));
  CHECK(mp::abs(w1[0] - Real(2L)) < testutil::tol10(-48));

  auto [x2, w2] = quad::gauss_legendre(2, ctx);
  Real r3 = Real(1L) / mp::sqrt(Real(3L));
  CHECK(mp::abs(x2[0] + r3) < testutil::tol10(-48));
  CHECK(mp::abs(x2[1] - r3) < testutil::tol10(-48));
  CHECK(mp::abs(w2[0] - Real(1L)) < testutil::tol10(-48));
  CHECK(mp::abs(w2[1] - Real(1L)) < testutil::tol10(-48));

  // integral of x^2 over [-1,1] = 2/3, exact at n=2
  Real s(0L);
  for (int k = 0; k < 2; ++k) s += w2[k] * x2[k] * x2[k];
  CHECK(mp::abs(s - Real(2L) / Real(3L)) < testutil::tol10(-48));
}

TEST_CASE("gauss-legendre exactness for monomials up to 2n-1") {
  PrecCtx ctx = PrecCtx::from_digits(40);
  mp::PrecGuard g(ctx);
  for (unsigned n = 1; n <= 12; ++n) {
    auto [x, w] = quad::gauss_legendre(n, ctx);
    for (unsigned k = 0; k <= 2 * n - 1; ++k) {
      Real s(0L);
      for (unsigned i = 0; i < n; ++i) s += w[i] * mp::pow_si(x[i], k);
      Real exact = (k % 2 == 1) ? Real(0L) : Real(2L) / Real(static_cast<long>(k + 1));
      CHECK(mp::abs(s - exact) < testutil::tol10(-36));
    }
    // nodes strictly increasing
    for (unsigned i = 0; i + 1 < n; ++i) CHECK(x[i] < x[i + 1]);
  }
}

TEST_CASE("weighted integration over the real line") {
  PrecCtx ctx = PrecCtx::from_digits(40);
  mp::PrecGuard g(ctx);
  std::vector<quad::Interval> line{{std::nullopt, std::nullopt}};

  SUBCASE("gaussian mass is sqrt(pi)") {
    auto f = [](const Real& s) { return mp::exp(-(s * s)); };
    Real I = quad::integrate_weighted<Real>(f, line, quad::DecayBound{Real(1L), 1}, ctx);
    CHECK(mp::abs(I - mp::sqrt(mp::const_pi())) < testutil::tol10(-39));
  }
  SUBCASE("odd integrand vanishes") {
    auto f = [](const Real& s) { return s * mp::exp(-(s * s)); };
    Real I = quad::integrate_weighted<Real>(f, line, quad::DecayBound{Real(1L), 1}, ctx);
    CHECK(mp::abs(I) < testutil::tol10(-39));
  }
  SUBCASE("quartic weight mass against the gamma oracle") {
    auto f = [](const Real& s) { return mp::exp(-mp::pow_si(s, 4)); };
    Real I = quad::integrate_weighted<Real>(f, line, quad::DecayBound{Real(1L), 2}, ctx);
    Real oracle = mp::ldexp(mp::gamma(Real(1L) / Real(4L)), -1);  // (1/2)Gamma(1/4)
    CHECK(mp::abs(I - oracle) < testutil::tol10(-39));
    // spec anchor value
    CHECK(mp::abs(I - Real("1.8128049541109541")) < Real(1e-15));
  }
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
  PrecCtx ctx = PrecCtx::from_digits(40);
  mp::PrecGuard g(ctx);
  Real tol = testutil::tol10(-40);
  // integral of log(x) on (0,1) = -1
  auto f = [](const Real& x) { return mp::log(x); };
  Real I = quad::tanh_sinh<Real>(f, Real(0L), Real(1L), ctx, tol);
  CHECK(mp::abs(I + Real(1L)) < testutil::tol10(-38));
  // integral of 1/sqrt(1-x^2) on (-1,1) = pi
  auto h = [](const Real& x) { return Real(1L) / mp::sqrt(Real(1L) - x * x); };
  Real J = quad::tanh_sinh<Real>(h, Real(-1L), Real(1L), ctx, tol);
  CHECK(mp::abs(J - mp::const_pi()) < testutil::tol10(-36));
}

TEST_CASE("tridiagonal eigenvalues") {
  PrecCtx ctx = PrecCtx::from_digits(40);
  mp::PrecGuard g(ctx);

  SUBCASE("1x1") {
    auto e = linalg::tridiag_eigs({Real(0L)}, {}, ctx);
    REQUIRE(e.size() == 1);
    CHECK(mp::abs(e[0]) < testutil::tol10(-38));
  }
  SUBCASE("2x2 off-diagonal 1") {
    auto e = linalg::tridiag_eigs({Real(0L), Real(0L)}, {Real(1L)}, ctx);
    REQUIRE(e.size() == 2);
    CHECK(mp::abs(e[0] + Real(1L)) < testutil::tol10(-38));
    CHECK(mp::abs(e[1] - Real(1L)) < testutil::tol10(-38));
  }
  SUBCASE("monic hermite P2 zeros") {
    auto e = linalg::tridiag_eigs({Real(0L), Real(0L)}, {mp::sqrt(Real(0.5))}, ctx);
    Real z = mp::sqrt(Real(0.5));
    CHECK(mp::abs(e[0] + z) < testutil::tol10(-38));
    CHECK(mp::abs(e[1] - z) < testutil::tol10(-38));
  }
  SUBCASE("eigenvalues lie in gershgorin disks") {
    testutil::Lcg rng(7);
    std::vector<Real> d, o;
    for (int k = 0; k < 12; ++k) d.push_back(rng.real(-2, 2));
    for (int k = 0; k < 11; ++k) o.push_back(rng.real(0.05, 1.5));
    auto e = linalg::tridiag_eigs(d, o, ctx);
    Real lo = d[0], hi = d[0];
    for (size_t k = 0; k < d.size(); ++k) {
      Real r(0L);
      if (k > 0) r += mp::abs(o[k - 1]);
      if (k + 1 < d.size()) r += mp::abs(o[k]);
      lo = mp::min(lo, d[k] - r);
      hi = mp::max(hi, d[k] + r);
    }
    for (auto& x : e) {
      CHECK(x >= lo - testutil::tol10(-30));
      CHECK(x <= hi + testutil::tol10(-30));
    }
    for (size_t k = 0; k + 1 < e.size(); ++k) CHECK(e[k] <= e[k + 1]);
  }
}

namespace {
// cofactor-expansion determinant, the independent oracle for small solves
Complex det_rec(const std::vector<Complex>& A, std::vector<int> rows, std::vector<int> cols,
                size_t n) {
  if (rows.size() == 1) return A[rows[0] * n + cols[0]];
  Complex s(0L);
  int sign = 1;
  for (size_t j = 0; j < cols.size(); ++j) {
    std::vector<int> r2(rows.begin() + 1, rows.end()), c2;
    for (size_t k = 0; k < cols.size(); ++k)
      if (k != j) c2.push_back(cols[k]);
    Complex term = A[rows[0] * n + cols[j]] * det_rec(A, r2, c2, n);
    s += (sign > 0) ? term : -term;
    sign = -sign;
  }
  return s;
}
}  // namespace

TEST_CASE("small linear solves") {
  PrecCtx ctx = PrecCtx::from_digits(40);
  mp::PrecGuard g(ctx);

  SUBCASE("identity returns rhs") {
    std::vector<Complex> A{Complex(1L), Complex(0L), Complex(0L), Complex(1L)};
    std::vector<Complex> b{Complex(Real(3L), Real(1L)), Complex(Real(-2L), Real(5L))};
    auto x = linalg::solve_linear(A, b, ctx);
    CHECK(mp::abs(x[0] - b[0]) < testutil::tol10(-38));
    CHECK(mp::abs(x[1] - b[1]) < testutil::tol10(-38));
  }
  SUBCASE("diagonal system") {
    std::vector<Complex> A{Complex(2L), Complex(0L), Complex(0L), Complex(4L)};
    std::vector<Complex> b{Complex(2L), Complex(4L)};
    auto x = linalg::solve_linear(A, b, ctx);
    CHECK(mp::abs(x[0] - Complex(1L)) < testutil::tol10(-38));
    CHECK(mp::abs(x[1] - Complex(1L)) < testutil::tol10(-38));
  }
  SUBCASE("random 4x4 against the adjugate formula") {
    testutil::Lcg rng(11);
    size_t n = 4;
    std::vector<Complex> A;
    for (size_t k = 0; k < n * n; ++k) A.push_back(rng.complex(-1, 1));
    for (size_t k = 0; k < n; ++k) A[k * n + k] += Complex(4L);  // well-conditioned
    std::vector<Complex> b;
    for (size_t k = 0; k < n; ++k) b.push_back(rng.complex(-1, 1));
    auto x = linalg::solve_linear(A, b, ctx);
    // Cramer: x_j = det(A with column j replaced by b)/det(A)
    std::vector<int> all{0, 1, 2, 3};
    Complex dA = det_rec(A, all, all, n);
    for (size_t j = 0; j < n; ++j) {
      std::vector<Complex> Aj = A;
      for (size_t r = 0; r < n; ++r) Aj[r * n + j] = b[r];
      Complex xj = det_rec(Aj, all, all, n) / dA;
      CHECK(mp::abs(x[j] - xj) < testutil::tol10(-36));
    }
    // residual contract
    for (size_t r = 0; r < n; ++r) {
      Complex s(0L);
      for (size_t c = 0; c < n; ++c) s += A[r * n + c] * x[c];
      CHECK(mp::abs(s - b[r]) < testutil::tol10(-36));
    }
  }
  SUBCASE("singular matrix is rejected") {
    std::vector<Complex> A{Complex(1L), Complex(2L), Complex(2L), Complex(4L)};
    std::vector<Complex> b{Complex(1L), Complex(2L)};
    CHECK_THROWS_AS(linalg::solve_linear(A, b, ctx), SingularSystem);
  }
  SUBCASE("dimension cap enforced") {
    std::vector<Complex> A(81, Complex(0L));
    for (int k = 0; k < 9; ++k) A[k * 9 + k] = Complex(1L);
    std::vector<Complex> b(9, Complex(1L));
    CHECK_THROWS(linalg::solve_linear(A, b, ctx));
  }
}

TEST_CASE("determinism and precision monotonicity") {
  // identical inputs and context give bit-identical results
  PrecCtx ctx = PrecCtx::from_digits(30);
  auto run = [&]() {
    mp::PrecGuard g(ctx);
    auto f = [](const Real& s) { return mp::exp(-(s * s)); };
    std::vector<quad::Interval> line{{std::nullopt, std::nullopt}};
    return quad::integrate_weighted<Real>(f, line, quad::DecayBound{Real(1L), 1}, ctx);
  };
  Real a = run(), b = run();
  CHECK(mpfr_cmp(a.v, b.v) == 0);

  // doubling bits never increases error against the closed form
  Real exact;
  {
    mp::PrecGuard g(PrecCtx::from_digits(120));
    exact = mp::sqrt(mp::const_pi());
  }
  Real prev_err(-1L);
  for (unsigned d : {20u, 40u, 80u}) {
    PrecCtx c = PrecCtx::from_digits(d);
    mp::PrecGuard g(c);
    auto f = [](const Real& s) { return mp::exp(-(s * s)); };
    std::vector<quad::Interval> line{{std::nullopt, std::nullopt}};
    Real I = quad::integrate_weighted<Real>(f, line, quad::DecayBound{Real(1L), 1}, c);
    Real err = mp::abs(I - exact);
    if (prev_err >= Real(0L)) CHECK(err <= prev_err + testutil::tol10(-115));
    prev_err = err;
  }
}
