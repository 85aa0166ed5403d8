#pragma once
// Numeric periods: integrals of r^{-a} (r-1)^{-b} (r-lambda)^{-c} dr between
// branch points, evaluated with endpoint-adapted double-exponential
// quadrature.  The branch of each factor is fixed on the real axis by
//   (r - e)^{-p} = |r - e|^{-p} exp(-i pi p)   for r < e,
// the continuation through the upper half plane; with that convention the
// value over a fixed segment is a single-valued function of real lambda.
//
// A segment qualifies only if the certificate boundary term vanishes at both
// endpoints (so the value satisfies the period operator); crossings of
// interior branch points additionally need an integrable exponent there.
#include <complex>
#include <string>

#include "k3cy/pf.hpp"

namespace k3cy {

enum class BranchPoint { Zero, One, Lambda, Infinity };

std::string branch_point_name(BranchPoint p);

struct PeriodOptions {
  double target_rel_error = 1e-11;
  int max_level = 10;  // quadrature step halvings
};

struct PeriodResult {
  std::complex<double> value;
  double est_error = 0;  // last refinement difference, summed over pieces
  int evaluations = 0;
};

PeriodResult numeric_period(const PFParams& params, double lambda, BranchPoint from,
                            BranchPoint to, const PeriodOptions& opts = {});

}  // namespace k3cy
