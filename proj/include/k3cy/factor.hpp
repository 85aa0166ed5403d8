#pragma once
// Factorization of rational univariate polynomials into monic irreducibles:
// Yun squarefree split, rational-root stripping, then Kronecker interpolation
// for the residual factors.  Intended for the small polynomials that cut out
// singular fibers; coefficient sizes past the trial-division cap are rejected.
#include <vector>

#include "k3cy/poly.hpp"

namespace k3cy {

struct IrreducibleFactor {
  UniPoly factor;  // monic irreducible over Q
  int multiplicity;
};

// lead(p) * prod factor^multiplicity == p; factors sorted by degree then
// lexicographically.  Throws domain_error for the zero polynomial or when an
// evaluation value is too large to factor.
std::vector<IrreducibleFactor> factor_rational(const UniPoly& p);

}  // namespace k3cy
