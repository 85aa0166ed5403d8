#pragma once
// Fixed-point bookkeeping for an order-4 purely non-symplectic automorphism
// on a K3 surface and the Hodge numbers of the desingularized quotient
// 3-folds (E x K3) / (automorphism pair).
#include <vector>

namespace k3cy {

struct FixedLocusSummary {
  int isolated_points = 0;
  // genera of the curves fixed pointwise by the automorphism (count c)
  std::vector<int> fixed_curve_genera;
  // rational curves fixed by the square and invariant under the automorphism (d)
  int invariant_not_fixed_curves = 0;
  // rational curves fixed by the square and swapped in pairs by the
  // automorphism (a, counts curves, so even)
  int switched_curves = 0;
};

// Euler characteristic of the fixed locus.  The automorphism fixes the
// isolated points and the c curves; its square fixes the c + d + a curves
// (the isolated points lie on them).
int chi_fixed_locus(const FixedLocusSummary& f, bool for_square);

// dim H^2 eigenspaces for eigenvalues 1, -1, i, -i.
struct EigenspaceDims {
  int d1 = 0, dm1 = 0, di = 0, dmi = 0;
};

// 2 + d1 - dm1: the holomorphic Lefschetz count on a K3 (H^1 = H^3 = 0, the
// +-i traces cancel since di = dmi).
int lefschetz_number(const EigenspaceDims& e);

// Solve d1 - dm1 = chi - 2, d1 + dm1 = 22 - rank_t, di = dmi = rank_t / 2.
// Throws on non-integral or negative solutions.
EigenspaceDims solve_eigenspace_dims(int chi_fix, int rank_t);

// Invariant H^{1,1} dimension of the product E x K3: d1 + 1.
int dim_h11_invariant(const EigenspaceDims& e);

struct CYHodge {
  int h11 = 0, h21 = 0;
};

// h11 = dimH11Inv + 3(c+d) + 2a + 4(c+d), h21 = rank_t/2 - 1.  Throws if a
// fixed curve has positive genus (the quotient would not be Calabi-Yau).
CYHodge cy_hodge_numbers(const FixedLocusSummary& f, int dim_h11_inv, int rank_t);

// Hodge numbers of the intermediate quotient by the square of the
// automorphism: h11 = dimH11InvSquare + 4 * (c + d + a), h21 = rank_t - 2.
CYHodge intermediate_z_hodge(const FixedLocusSummary& f, int dim_h11_inv_square, int rank_t);

}  // namespace k3cy
