// Small linear algebra: symmetric-tridiagonal eigenvalues (Sturm bisection
// with Newton polish) and dense complex solves for small systems.

#pragma once

#include <vector>

#include "outpost/complex.hpp"
#include "outpost/errors.hpp"
#include "outpost/real.hpp"

namespace outpost::linalg {

using mp::Complex;
using mp::PrecCtx;
using mp::Real;

// Eigenvalues of the symmetric tridiagonal matrix with the given diagonal and
// off-diagonal, ascending, each accurate to the ctx target.
std::vector<Real> tridiag_eigs(const std::vector<Real>& diag, const std::vector<Real>& offdiag,
                               const PrecCtx& ctx);

// Gaussian elimination with partial pivoting.  A is row-major n*n.  Throws
// SingularSystem when a pivot falls below 10^{-target_digits} * scale.
std::vector<Complex> solve_linear(std::vector<Complex> A, std::vector<Complex> b,
                                  const PrecCtx& ctx, unsigned max_dim = 8);

}  // namespace outpost::linalg
