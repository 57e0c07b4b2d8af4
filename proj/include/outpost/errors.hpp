// Error taxonomy.  Exit-code mapping for the CLI:
//   0 success, 1 identity/criterion failure, 2 config error,
//   3 precision exhaustion.

#pragma once

#include <stdexcept>
#include <string>

namespace outpost {

struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
  virtual int exit_code() const { return 1; }
};

struct PrecisionExhausted : Error {
  unsigned achieved_digits = 0;
  explicit PrecisionExhausted(const std::string& m, unsigned achieved = 0)
      : Error("precision exhausted: " + m), achieved_digits(achieved) {}
  int exit_code() const override { return 3; }
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& m) : Error("config error: " + m) {}
  int exit_code() const override { return 2; }
};

#define OUTPOST_ERROR(Name, prefix)                                         \
  struct Name : Error {                                                     \
    explicit Name(const std::string& m) : Error(std::string(prefix) + m) {} \
  }

OUTPOST_ERROR(SingularSystem, "numerically singular system: ");
OUTPOST_ERROR(NoConvergence, "iteration did not converge: ");
OUTPOST_ERROR(NotOneCut, "not a one-cut model: ");
OUTPOST_ERROR(NotCritical, "no outpost found: ");
OUTPOST_ERROR(InconsistentCriticality, "inconsistent criticality: ");
OUTPOST_ERROR(InfeasibleGeometry, "infeasible geometry: ");
OUTPOST_ERROR(InvalidDensity, "density not nonnegative: ");
OUTPOST_ERROR(DegenerateDeformation, "degenerate deformation: ");
OUTPOST_ERROR(OutOfChart, "point outside local chart: ");
OUTPOST_ERROR(BranchPointError, "evaluation at branch point: ");
OUTPOST_ERROR(AmbiguousBoundary, "boundary value needs a side flag: ");
OUTPOST_ERROR(DegenerateJet, "degenerate jet: ");
OUTPOST_ERROR(StokesDegeneracy, "stokes degeneracy: ");
OUTPOST_ERROR(PoleOfApproximant, "evaluation at approximant pole: ");
OUTPOST_ERROR(InvalidWindow, "invalid counting window: ");
OUTPOST_ERROR(ClassificationFailure, "zero classification failed: ");
OUTPOST_ERROR(MissingStray, "stray zero not found: ");
#undef OUTPOST_ERROR

}  // namespace outpost
